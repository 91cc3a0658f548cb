#pragma once

#include "bp/fp.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bp {

// Raised when a normalization run exceeds its substitution-step budget.
class FuelExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an operation needs the standard grading but got something else.
class InvalidGradingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a sign-only grading is asked about a generator it does not grade.
class UndefinedDegreeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One letter of a word: the Bockstein b or a power P^k (k >= 0).
// P^0 is an ordinary generator, not the algebra unit.
class Generator {
public:
    static Generator bockstein() noexcept { return Generator(-1); }
    static Generator power(int k)
    {
        if (k < 0)
            throw std::invalid_argument("Generator::power: index must be >= 0");
        return Generator(k);
    }

    bool is_bockstein() const noexcept { return code_ < 0; }
    int power_index() const noexcept { return code_; }  // pre: !is_bockstein()
    // Total order key: b < P^0 < P^1 < ...
    int code() const noexcept { return code_; }

    auto operator<=>(const Generator&) const = default;

private:
    explicit constexpr Generator(int code) : code_(code) {}
    int code_;
};

// A word in the free monoid on the generators; the empty word is the unit 1.
using Monomial = std::vector<Generator>;

struct Bidegree {
    long long n = 0;  // internal degree
    long long s = 0;  // coalgebra index
    bool operator==(const Bidegree&) const = default;
};

// A bidegree assignment for the generator alphabet. Two flavours:
//  - standard(p): |b| = (1,0), |P^k| = (2k(p-1), 1), extended additively;
//  - sign_only(b_parity, p0_parity): only the first-degree parities of b and
//    P^0 are known. Full bidegrees are refused, and parities of words that
//    involve P^k with k > 0 are refused, so only Koszul signs that are
//    actually determined can be computed under it.
class Grading {
public:
    static Grading standard(const Prime& p)
    {
        Grading g;
        g.p_ = p.value();
        return g;
    }

    static Grading sign_only(int bockstein_parity, int p0_parity)
    {
        Grading g;
        g.beta_parity_ = bockstein_parity & 1;
        g.p0_parity_ = p0_parity & 1;
        return g;
    }

    bool is_standard() const noexcept { return p_ > 0; }
    bool is_sign_only() const noexcept { return p_ == 0; }
    int standard_prime() const noexcept { return p_; }  // 0 when sign-only

    Bidegree generator_degree(Generator g) const;
    // First-degree parity; nullopt when the grading does not determine it.
    std::optional<int> try_parity(const Monomial& w) const noexcept;
    int parity(const Monomial& w) const;

    bool operator==(const Grading&) const = default;

private:
    int p_ = 0;  // > 0: standard grading at that prime
    int beta_parity_ = 0;
    int p0_parity_ = 0;
};

Bidegree bidegree_of(const Monomial& m, const Grading& g);

// Word order for element storage: length first, then letterwise.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] < b[i];
        return false;
    }
};

// Display/JSON order: internal degree, then length, then letterwise.
bool display_less(const Monomial& a, const Monomial& b, const Prime& p);

// An F_p-linear combination of words. No zero coefficient is ever stored, so
// the zero element is the empty map and equality is structural.
struct Element {
    std::map<Monomial, Fp, MonomialOrder> terms;

    bool is_zero() const noexcept { return terms.empty(); }
    bool operator==(const Element&) const = default;

    static Element zero() { return {}; }
    static Element unit()
    {
        Element e;
        e.terms.emplace(Monomial{}, 1);
        return e;
    }
    static Element monomial(Monomial w, Fp c = 1)
    {
        Element e;
        if (c != 0)
            e.terms.emplace(std::move(w), c);
        return e;
    }
};

// e += c * w, dropping the entry if the coefficient cancels.
void add_term(Element& e, const Monomial& w, Fp c, const Prime& p);

Element element_add(const Element& e1, const Element& e2, const Prime& p);
Element element_sub(const Element& e1, const Element& e2, const Prime& p);
Element element_scale(Fp c, const Element& e, const Prime& p);

// True iff m has the shape b^{e0} P^{t1} b^{e1} ... P^{ts} b^{es} with each
// e in {0,1} and t_j >= p*t_{j+1} + e_j for 1 <= j < s. The empty word and
// the single letter b are admissible.
bool is_admissible(const Monomial& m, const Prime& p);

// 1 if every letter of m is P^0 (so also on the empty word), else 0.
Fp counit(const Monomial& m);

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

// A substitution-step budget shared across one top-level computation.
struct FuelBudget {
    std::uint64_t remaining = kDefaultFuel;
};

enum class Strategy { leftmost, rightmost };

// One rewriting step: substitutes for the first reducible pattern among
// b.b, P^a.P^b (a < pb), P^a.b.P^b (a <= pb), context preserved.
// nullopt iff m is admissible. `strategy` picks which end to scan from.
std::optional<Element> rewrite_step(const Monomial& m, const Prime& p,
                                    Strategy strategy = Strategy::leftmost);

// Rewrites every support word to the admissible normal form. Normal forms
// are memoized per (prime, strategy, word) in a thread-local cache.
Element normalize(const Element& e, const Prime& p, FuelBudget& fuel,
                  Strategy strategy = Strategy::leftmost);
Element normalize(const Element& e, const Prime& p, std::uint64_t fuel = kDefaultFuel,
                  Strategy strategy = Strategy::leftmost);

// Bilinear extension of word concatenation followed by normalize.
Element multiply(const Element& e1, const Element& e2, const Prime& p, FuelBudget& fuel,
                 Strategy strategy = Strategy::leftmost);
Element multiply(const Element& e1, const Element& e2, const Prime& p,
                 std::uint64_t fuel = kDefaultFuel);

// All admissible words with s power letters and internal degree n under the
// standard grading, in display order. Throws InvalidGradingError unless g is
// the standard grading at p.
std::vector<Monomial> admissible_basis(const Prime& p, long long n, int s, const Grading& g);

}  // namespace bp
