#include "bp/tensor.hpp"

namespace bp {

void tensor_add_term(TensorElement& t, const TensorMonomial& m, Fp c, const Prime& p)
{
    if (c == 0)
        return;
    auto [it, inserted] = t.terms.try_emplace(m, c);
    if (!inserted) {
        it->second = p.add(it->second, c);
        if (it->second == 0)
            t.terms.erase(it);
    }
}

TensorElement tensor_add(const TensorElement& t1, const TensorElement& t2, const Prime& p)
{
    TensorElement out = t1;
    for (const auto& [m, c] : t2.terms)
        tensor_add_term(out, m, c, p);
    return out;
}

TensorElement tensor_sub(const TensorElement& t1, const TensorElement& t2, const Prime& p)
{
    TensorElement out = t1;
    for (const auto& [m, c] : t2.terms)
        tensor_add_term(out, m, p.neg(c), p);
    return out;
}

TensorElement tensor_scale(Fp c, const TensorElement& t, const Prime& p)
{
    TensorElement out;
    if (c == 0)
        return out;
    for (const auto& [m, coeff] : t.terms)
        out.terms.emplace(m, p.mul(c, coeff));
    return out;
}

namespace {

Monomial concat(const Monomial& a, const Monomial& b)
{
    Monomial w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

// Parity of deg(b)*deg(c). Even when either factor is known even, so a
// sign-only grading blocks the product only when the sign is genuinely
// undetermined.
int sign_exponent(const Grading& g, const Monomial& b, const Monomial& c)
{
    const std::optional<int> pb = g.try_parity(b);
    if (pb && *pb == 0)
        return 0;
    const std::optional<int> pc = g.try_parity(c);
    if (pc && *pc == 0)
        return 0;
    if (pb && pc)
        return 1;  // both odd
    throw UndefinedDegreeError("Koszul sign undetermined: grading assigns no parity to a factor");
}

}  // namespace

TensorElement tensor_multiply(const TensorElement& t1, const TensorElement& t2,
                              const Grading& g, const Prime& p, FuelBudget& fuel)
{
    TensorElement out;
    for (const auto& [m1, c1] : t1.terms) {
        for (const auto& [m2, c2] : t2.terms) {
            Fp c = p.mul(c1, c2);
            if (sign_exponent(g, m1.right, m2.left))
                c = p.neg(c);
            const Element left = normalize(Element::monomial(concat(m1.left, m2.left)), p, fuel);
            const Element right = normalize(Element::monomial(concat(m1.right, m2.right)), p, fuel);
            for (const auto& [lw, lc] : left.terms)
                for (const auto& [rw, rc] : right.terms)
                    tensor_add_term(out, {lw, rw}, p.mul(c, p.mul(lc, rc)), p);
        }
    }
    return out;
}

TensorElement tensor_multiply(const TensorElement& t1, const TensorElement& t2,
                              const Grading& g, const Prime& p, std::uint64_t fuel)
{
    FuelBudget budget{fuel};
    return tensor_multiply(t1, t2, g, p, budget);
}

TensorElement normalize_tensor(const TensorElement& t, const Prime& p, FuelBudget& fuel)
{
    TensorElement out;
    for (const auto& [m, c] : t.terms) {
        const Element left = normalize(Element::monomial(m.left), p, fuel);
        const Element right = normalize(Element::monomial(m.right), p, fuel);
        for (const auto& [lw, lc] : left.terms)
            for (const auto& [rw, rc] : right.terms)
                tensor_add_term(out, {lw, rw}, p.mul(c, p.mul(lc, rc)), p);
    }
    return out;
}

TensorElement normalize_tensor(const TensorElement& t, const Prime& p, std::uint64_t fuel)
{
    FuelBudget budget{fuel};
    return normalize_tensor(t, p, budget);
}

}  // namespace bp
