#include "bp/term.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <utility>

namespace bp {

Bidegree Grading::generator_degree(Generator g) const
{
    if (!is_standard())
        throw UndefinedDegreeError("sign-only grading carries no full bidegrees");
    if (g.is_bockstein())
        return {1, 0};
    return {2LL * g.power_index() * (p_ - 1), 1};
}

std::optional<int> Grading::try_parity(const Monomial& w) const noexcept
{
    int parity = 0;
    for (const Generator& g : w) {
        if (is_standard()) {
            parity ^= g.is_bockstein() ? 1 : 0;  // 2k(p-1) is even
        } else if (g.is_bockstein()) {
            parity ^= beta_parity_;
        } else if (g.power_index() == 0) {
            parity ^= p0_parity_;
        } else {
            return std::nullopt;
        }
    }
    return parity;
}

int Grading::parity(const Monomial& w) const
{
    auto p = try_parity(w);
    if (!p)
        throw UndefinedDegreeError("first-degree parity of P^k (k > 0) is not assigned under a sign-only grading");
    return *p;
}

Bidegree bidegree_of(const Monomial& m, const Grading& g)
{
    Bidegree total;
    for (const Generator& gen : m) {
        Bidegree d = g.generator_degree(gen);
        total.n += d.n;
        total.s += d.s;
    }
    return total;
}

bool display_less(const Monomial& a, const Monomial& b, const Prime& p)
{
    const Grading g = Grading::standard(p);
    const long long na = bidegree_of(a, g).n;
    const long long nb = bidegree_of(b, g).n;
    if (na != nb)
        return na < nb;
    return MonomialOrder{}(a, b);
}

void add_term(Element& e, const Monomial& w, Fp c, const Prime& p)
{
    if (c == 0)
        return;
    auto [it, inserted] = e.terms.try_emplace(w, c);
    if (!inserted) {
        it->second = p.add(it->second, c);
        if (it->second == 0)
            e.terms.erase(it);
    }
}

Element element_add(const Element& e1, const Element& e2, const Prime& p)
{
    Element out = e1;
    for (const auto& [w, c] : e2.terms)
        add_term(out, w, c, p);
    return out;
}

Element element_sub(const Element& e1, const Element& e2, const Prime& p)
{
    Element out = e1;
    for (const auto& [w, c] : e2.terms)
        add_term(out, w, p.neg(c), p);
    return out;
}

Element element_scale(Fp c, const Element& e, const Prime& p)
{
    Element out;
    if (c == 0)
        return out;
    for (const auto& [w, coeff] : e.terms)
        out.terms.emplace(w, p.mul(c, coeff));
    return out;
}

bool is_admissible(const Monomial& m, const Prime& p)
{
    const long long pv = p.value();
    for (size_t i = 0; i + 1 < m.size(); ++i)
        if (m[i].is_bockstein() && m[i + 1].is_bockstein())
            return false;
    // After rejecting adjacent b's, consecutive powers are 1 or 2 apart.
    std::optional<size_t> prev;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].is_bockstein())
            continue;
        if (prev) {
            const long long a = m[*prev].power_index();
            const long long b = m[i].power_index();
            const long long eps = (i - *prev == 2) ? 1 : 0;
            if (a < pv * b + eps)
                return false;
        }
        prev = i;
    }
    return true;
}

Fp counit(const Monomial& m)
{
    for (const Generator& g : m)
        if (g.is_bockstein() || g.power_index() != 0)
            return 0;
    return 1;
}

namespace {

struct Redex {
    size_t pos;
    enum Kind { beta_beta, power_power, power_beta_power } kind;
};

std::optional<Redex> redex_at(const Monomial& w, size_t i, long long pv)
{
    const size_t n = w.size();
    if (w[i].is_bockstein()) {
        if (i + 1 < n && w[i + 1].is_bockstein())
            return Redex{i, Redex::beta_beta};
        return std::nullopt;
    }
    const long long a = w[i].power_index();
    if (i + 1 < n && !w[i + 1].is_bockstein()) {
        if (a < pv * w[i + 1].power_index())
            return Redex{i, Redex::power_power};
        return std::nullopt;
    }
    if (i + 2 < n && w[i + 1].is_bockstein() && !w[i + 2].is_bockstein()) {
        if (a <= pv * w[i + 2].power_index())
            return Redex{i, Redex::power_beta_power};
    }
    return std::nullopt;
}

std::optional<Redex> find_redex(const Monomial& w, const Prime& p, Strategy strategy)
{
    const long long pv = p.value();
    if (strategy == Strategy::leftmost) {
        for (size_t i = 0; i < w.size(); ++i)
            if (auto r = redex_at(w, i, pv))
                return r;
    } else {
        for (size_t i = w.size(); i-- > 0;)
            if (auto r = redex_at(w, i, pv))
                return r;
    }
    return std::nullopt;
}

Element apply_redex(const Monomial& w, const Redex& redex, const Prime& p)
{
    Element out;
    const size_t pos = redex.pos;
    const size_t len = redex.kind == Redex::power_beta_power ? 3 : 2;
    auto emit = [&](std::initializer_list<Generator> mid, Fp c) {
        if (c == 0)
            return;
        Monomial nw;
        nw.reserve(w.size() + 1);
        nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
        nw.insert(nw.end(), mid);
        nw.insert(nw.end(), w.begin() + static_cast<long>(pos + len), w.end());
        add_term(out, nw, c, p);
    };

    switch (redex.kind) {
    case Redex::beta_beta:
        break;  // b.b = 0 kills the whole word
    case Redex::power_power: {
        const long long a = w[pos].power_index();
        const long long b = w[pos + 1].power_index();
        for (long long t = 0; t <= a / p.value(); ++t)
            emit({Generator::power(static_cast<int>(a + b - t)), Generator::power(static_cast<int>(t))},
                 adem_coeff_a(p, b, a, t));
        break;
    }
    case Redex::power_beta_power: {
        const long long a = w[pos].power_index();
        const long long b = w[pos + 2].power_index();
        for (long long t = 0; t <= a / p.value(); ++t)
            emit({Generator::bockstein(), Generator::power(static_cast<int>(a + b - t)),
                  Generator::power(static_cast<int>(t))},
                 adem_coeff_b(p, b, a, t));
        if (a >= 1)
            for (long long t = 0; t <= (a - 1) / p.value(); ++t)
                emit({Generator::power(static_cast<int>(a + b - t)), Generator::bockstein(),
                      Generator::power(static_cast<int>(t))},
                     adem_coeff_a(p, b, a - 1, t));
        break;
    }
    }
    return out;
}

struct MonomialHash {
    size_t operator()(const Monomial& m) const noexcept
    {
        size_t h = 1469598103934665603ull;
        for (const Generator& g : m) {
            h ^= static_cast<size_t>(g.code() + 2);
            h *= 1099511628211ull;
        }
        return h;
    }
};

using NormalFormCache = std::unordered_map<Monomial, Element, MonomialHash>;

NormalFormCache& cache_for(const Prime& p, Strategy strategy)
{
    thread_local std::map<std::pair<int, int>, NormalFormCache> caches;
    return caches[{p.value(), static_cast<int>(strategy)}];
}

// Guards the memoized recursion against blowing the stack before the fuel
// budget trips; reduction chains at engine scale stay far below this.
constexpr int kMaxChainDepth = 10000;

const Element& normal_form(const Monomial& m, const Prime& p, Strategy strategy,
                           FuelBudget& fuel, NormalFormCache& cache, int depth)
{
    if (auto it = cache.find(m); it != cache.end())
        return it->second;
    auto redex = find_redex(m, p, strategy);
    if (!redex)
        return cache.emplace(m, Element::monomial(m)).first->second;
    if (fuel.remaining == 0)
        throw FuelExhaustedError("rewrite fuel exhausted");
    if (depth >= kMaxChainDepth)
        throw FuelExhaustedError("rewrite chain too deep (suspected non-terminating instance)");
    --fuel.remaining;
    Element step = apply_redex(m, *redex, p);
    Element out;
    for (const auto& [w, c] : step.terms) {
        const Element& nf = normal_form(w, p, strategy, fuel, cache, depth + 1);
        for (const auto& [nw, nc] : nf.terms)
            add_term(out, nw, p.mul(c, nc), p);
    }
    return cache.emplace(m, std::move(out)).first->second;
}

}  // namespace

std::optional<Element> rewrite_step(const Monomial& m, const Prime& p, Strategy strategy)
{
    auto redex = find_redex(m, p, strategy);
    if (!redex)
        return std::nullopt;
    return apply_redex(m, *redex, p);
}

Element normalize(const Element& e, const Prime& p, FuelBudget& fuel, Strategy strategy)
{
    NormalFormCache& cache = cache_for(p, strategy);
    Element out;
    for (const auto& [w, c] : e.terms) {
        const Element& nf = normal_form(w, p, strategy, fuel, cache, 0);
        for (const auto& [nw, nc] : nf.terms)
            add_term(out, nw, p.mul(c, nc), p);
    }
    return out;
}

Element normalize(const Element& e, const Prime& p, std::uint64_t fuel, Strategy strategy)
{
    FuelBudget budget{fuel};
    return normalize(e, p, budget, strategy);
}

Element multiply(const Element& e1, const Element& e2, const Prime& p, FuelBudget& fuel,
                 Strategy strategy)
{
    Element product;
    for (const auto& [w1, c1] : e1.terms) {
        for (const auto& [w2, c2] : e2.terms) {
            Monomial w;
            w.reserve(w1.size() + w2.size());
            w.insert(w.end(), w1.begin(), w1.end());
            w.insert(w.end(), w2.begin(), w2.end());
            add_term(product, w, p.mul(c1, c2), p);
        }
    }
    return normalize(product, p, fuel, strategy);
}

Element multiply(const Element& e1, const Element& e2, const Prime& p, std::uint64_t fuel)
{
    FuelBudget budget{fuel};
    return multiply(e1, e2, p, budget);
}

std::vector<Monomial> admissible_basis(const Prime& p, long long n, int s, const Grading& g)
{
    if (!g.is_standard() || g.standard_prime() != p.value())
        throw InvalidGradingError("admissible_basis requires the standard grading at the same prime");
    std::vector<Monomial> out;
    if (n < 0 || s < 0)
        return out;
    if (s == 0) {
        if (n == 0)
            out.push_back({});
        else if (n == 1)
            out.push_back({Generator::bockstein()});
        return out;
    }

    const long long power_unit = 2LL * (p.value() - 1);  // degree of P^1
    std::vector<Generator> rev;                          // letters chosen so far, rightmost first

    auto emit = [&](bool leading_beta) {
        Monomial w;
        w.reserve(rev.size() + 1);
        if (leading_beta)
            w.push_back(Generator::bockstein());
        w.insert(w.end(), rev.rbegin(), rev.rend());
        out.push_back(std::move(w));
    };

    // Positions are filled right to left: epsilon_s, t_s, epsilon_{s-1}, ...,
    // t_1, epsilon_0, with t_{j} >= p*t_{j+1} + epsilon_j and the remaining
    // internal degree spent exactly.
    std::function<void(int, long long, long long)> place_power =
        [&](int j, long long lower, long long rem) {
            for (long long t = lower; t * power_unit <= rem; ++t) {
                rev.push_back(Generator::power(static_cast<int>(t)));
                const long long rem2 = rem - t * power_unit;
                if (j == 1) {
                    if (rem2 == 0)
                        emit(false);
                    else if (rem2 == 1)
                        emit(true);
                } else {
                    for (int eps = 0; eps <= 1; ++eps) {
                        if (eps > rem2)
                            break;
                        if (eps)
                            rev.push_back(Generator::bockstein());
                        place_power(j - 1, p.value() * t + eps, rem2 - eps);
                        if (eps)
                            rev.pop_back();
                    }
                }
                rev.pop_back();
            }
        };

    for (int eps_s = 0; eps_s <= 1 && eps_s <= n; ++eps_s) {
        if (eps_s)
            rev.push_back(Generator::bockstein());
        place_power(s, 0, n - eps_s);
        if (eps_s)
            rev.pop_back();
    }

    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return display_less(a, b, p); });
    return out;
}

}  // namespace bp
