#pragma once

#include "bp/term.hpp"

#include <map>

namespace bp {

struct TensorMonomial {
    Monomial left;
    Monomial right;
    bool operator==(const TensorMonomial&) const = default;
};

struct TensorMonomialOrder {
    bool operator()(const TensorMonomial& a, const TensorMonomial& b) const noexcept
    {
        MonomialOrder less;
        if (less(a.left, b.left))
            return true;
        if (less(b.left, a.left))
            return false;
        return less(a.right, b.right);
    }
};

// An F_p-linear combination of word pairs; no zero coefficients stored.
struct TensorElement {
    std::map<TensorMonomial, Fp, TensorMonomialOrder> terms;

    bool is_zero() const noexcept { return terms.empty(); }
    bool operator==(const TensorElement&) const = default;

    static TensorElement zero() { return {}; }
    static TensorElement unit()  // 1 (x) 1
    {
        TensorElement t;
        t.terms.emplace(TensorMonomial{}, 1);
        return t;
    }
    static TensorElement monomial(TensorMonomial m, Fp c = 1)
    {
        TensorElement t;
        if (c != 0)
            t.terms.emplace(std::move(m), c);
        return t;
    }
};

void tensor_add_term(TensorElement& t, const TensorMonomial& m, Fp c, const Prime& p);
TensorElement tensor_add(const TensorElement& t1, const TensorElement& t2, const Prime& p);
TensorElement tensor_sub(const TensorElement& t1, const TensorElement& t2, const Prime& p);
TensorElement tensor_scale(Fp c, const TensorElement& t, const Prime& p);

// The signed product (a (x) b)(c (x) d) = (-1)^{deg b * deg c} (ac (x) bd),
// extended bilinearly, with both resulting sides normalized. deg is the
// first (internal) component of the bidegree under g; only its parity
// enters. A product whose sign is not determined by g (sign-only grading,
// letters outside its alphabet, neither factor of even degree) throws
// UndefinedDegreeError.
TensorElement tensor_multiply(const TensorElement& t1, const TensorElement& t2,
                              const Grading& g, const Prime& p, FuelBudget& fuel);
TensorElement tensor_multiply(const TensorElement& t1, const TensorElement& t2,
                              const Grading& g, const Prime& p,
                              std::uint64_t fuel = kDefaultFuel);

// Normalizes each side of each pair and redistributes coefficients.
TensorElement normalize_tensor(const TensorElement& t, const Prime& p, FuelBudget& fuel);
TensorElement normalize_tensor(const TensorElement& t, const Prime& p,
                               std::uint64_t fuel = kDefaultFuel);

}  // namespace bp
