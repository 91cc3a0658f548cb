#pragma once

#include "bp/tensor.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bp {

// A coproduct assignment on the generators, extended to words
// multiplicatively through the signed tensor product. Both named schemes
// share the power rule P^s -> sum_{i+j=s} P^i (x) P^j and differ in the
// Bockstein image and in the grading that feeds the Koszul signs:
//   singer:    b -> b (x) 1 + 1 (x) b, standard grading;
//   geometric: b -> b (x) P^0 + P^0 (x) b, sign-only grading with free
//              first-degree parities for b and P^0.
struct CoproductScheme {
    std::string name;
    TensorElement bockstein_image;
    Grading grading;

    CoproductScheme(std::string name_, TensorElement image, Grading grading_)
        : name(std::move(name_)), bockstein_image(std::move(image)), grading(std::move(grading_))
    {
    }

    static CoproductScheme singer(const Prime& p);
    static CoproductScheme geometric(int bockstein_parity, int p0_parity);

    TensorElement power_image(int s) const;
    TensorElement generator_image(Generator g) const;
};

// Multiplicative extension of the scheme over each support word, applied to
// the words as given (no prior normalization of e, so free words on both
// sides of a relation can be compared honestly). Tensor factors come out
// normalized.
TensorElement coproduct(const Element& e, const CoproductScheme& scheme, const Prime& p,
                        FuelBudget& fuel);
TensorElement coproduct(const Element& e, const CoproductScheme& scheme, const Prime& p,
                        std::uint64_t fuel = kDefaultFuel);

struct CheckFailure {
    std::string relation;     // "beta2" | "pp" | "pbp" | "counit" | "coassoc"
    long long a = -1;         // instance parameters: (a,b) for relations,
    long long b = -1;         // (n,s) for counit/coassociativity
    std::string parities;     // parity assignment used, "-" under a concrete grading
    TensorElement residual;   // empty when the residual lives elsewhere (see detail)
    std::string detail;
};

struct CheckReport {
    std::string scheme;
    std::string family;
    std::string range;
    std::string verdict;              // "pass", "fail", "obstruction reproduced"
    std::vector<CheckFailure> failures;
    std::vector<std::string> skipped;  // instances whose signs the grading leaves undetermined
    std::vector<std::string> trace;

    bool passed() const noexcept { return failures.empty(); }
};

// Checks that the scheme sends b.b to zero. For schemes with a sign-only
// grading the given (deg b, deg P^0) parities are bound first; concrete
// gradings ignore them.
CheckReport check_bockstein_square(const CoproductScheme& scheme, const Prime& p,
                                   std::pair<int, int> parities,
                                   std::uint64_t fuel = kDefaultFuel);

// Sweeps every defining relation instance with a <= a_max, b <= b_max:
// compares the coproducts of the two sides, each expanded as free words
// before the scheme is applied. beta_free restricts to the P^a P^b family
// (the pure-power subalgebra). Instances whose Koszul signs the grading
// leaves undetermined are recorded as skipped. jobs > 1 parallelizes the
// sweep; each instance gets its own fuel budget.
CheckReport check_relations(const CoproductScheme& scheme, const Prime& p, long long a_max,
                            long long b_max, bool beta_free = false, int jobs = 1,
                            std::uint64_t fuel = kDefaultFuel);

// The normalized square of b (x) P^0 + P^0 (x) b under the given
// first-degree parities. Nonzero for every parity assignment: its two
// tensor words are distinct admissible basis words.
TensorElement obstruction_square(const Prime& p, int bockstein_parity, int p0_parity,
                                 std::uint64_t fuel = kDefaultFuel);

// Runs obstruction_square over all four parity assignments and verifies the
// residuals are nonzero combinations of distinct admissible basis tensors.
CheckReport obstruction_report(const Prime& p, std::uint64_t fuel = kDefaultFuel);

// Squares b P^0 (x) P^0 P^0 + P^0 P^0 (x) b P^0 and reports pass iff the
// result is exactly zero, with a trace of the four pairwise products: the
// diagonal ones die on b.b = 0, the cross ones cancel by the Koszul sign.
CheckReport cp_square_check(const Prime& p, std::uint64_t fuel = kDefaultFuel);

// Verifies (counit (x) id) o psi = id = (id (x) counit) o psi on every
// basis word of coalgebra index s with internal degree <= n_max.
// pre: scheme has the standard grading.
CheckReport check_counit(const CoproductScheme& scheme, const Prime& p, long long n_max, int s,
                         std::uint64_t fuel = kDefaultFuel);

// Verifies (psi (x) id) o psi = (id (x) psi) o psi on every basis word with
// internal degree <= n_max and coalgebra index <= s_max.
// pre: scheme has the standard grading.
CheckReport check_coassociativity(const CoproductScheme& scheme, const Prime& p, long long n_max,
                                  int s_max, std::uint64_t fuel = kDefaultFuel);

}  // namespace bp
