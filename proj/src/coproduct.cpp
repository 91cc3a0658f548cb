#include "bp/coproduct.hpp"

#include "bp/render.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <sstream>
#include <thread>

namespace bp {

namespace {

Monomial word_b()
{
    return {Generator::bockstein()};
}

Monomial word_p(int k)
{
    return {Generator::power(k)};
}

std::string parity_label(int bockstein_parity, int p0_parity)
{
    std::ostringstream out;
    out << "deg(b)%2=" << bockstein_parity << ",deg(P0)%2=" << p0_parity;
    return out.str();
}

}  // namespace

CoproductScheme CoproductScheme::singer(const Prime& p)
{
    TensorElement image;
    tensor_add_term(image, {word_b(), {}}, 1, p);
    tensor_add_term(image, {{}, word_b()}, 1, p);
    return CoproductScheme("singer", std::move(image), Grading::standard(p));
}

CoproductScheme CoproductScheme::geometric(int bockstein_parity, int p0_parity)
{
    TensorElement image;
    image.terms.emplace(TensorMonomial{word_b(), word_p(0)}, 1);
    image.terms.emplace(TensorMonomial{word_p(0), word_b()}, 1);
    return CoproductScheme("geometric", std::move(image),
                           Grading::sign_only(bockstein_parity, p0_parity));
}

TensorElement CoproductScheme::power_image(int s) const
{
    TensorElement image;
    for (int i = 0; i <= s; ++i)
        image.terms.emplace(TensorMonomial{word_p(i), word_p(s - i)}, 1);
    return image;
}

TensorElement CoproductScheme::generator_image(Generator g) const
{
    return g.is_bockstein() ? bockstein_image : power_image(g.power_index());
}

TensorElement coproduct(const Element& e, const CoproductScheme& scheme, const Prime& p,
                        FuelBudget& fuel)
{
    TensorElement out;
    for (const auto& [w, c] : e.terms) {
        TensorElement acc = TensorElement::unit();
        for (const Generator& g : w)
            acc = tensor_multiply(acc, scheme.generator_image(g), scheme.grading, p, fuel);
        for (const auto& [m, mc] : acc.terms)
            tensor_add_term(out, m, p.mul(c, mc), p);
    }
    return out;
}

TensorElement coproduct(const Element& e, const CoproductScheme& scheme, const Prime& p,
                        std::uint64_t fuel)
{
    FuelBudget budget{fuel};
    return coproduct(e, scheme, p, budget);
}

CheckReport check_bockstein_square(const CoproductScheme& scheme, const Prime& p,
                                   std::pair<int, int> parities, std::uint64_t fuel)
{
    CoproductScheme effective = scheme;
    std::string parity_text = "-";
    if (scheme.grading.is_sign_only()) {
        effective.grading = Grading::sign_only(parities.first, parities.second);
        parity_text = parity_label(parities.first, parities.second);
    }

    CheckReport report;
    report.scheme = scheme.name;
    report.family = "beta2";
    report.range = "-";

    TensorElement square =
        coproduct(Element::monomial({Generator::bockstein(), Generator::bockstein()}),
                  effective, p, fuel);
    if (!square.is_zero()) {
        report.failures.push_back(
            {"beta2", -1, -1, parity_text, square, "psi(b)^2 = " + to_text(square, p)});
    }
    report.verdict = report.passed() ? "pass" : "fail";
    return report;
}

namespace {

struct RelationInstance {
    enum Kind { beta2, pp, pbp } kind;
    long long a = 0;
    long long b = 0;
};

// Both sides of the instance as formal words, left unexpanded so the scheme
// is applied to free words.
std::pair<Element, Element> instance_sides(const RelationInstance& inst, const Prime& p)
{
    switch (inst.kind) {
    case RelationInstance::beta2:
        return {Element::monomial({Generator::bockstein(), Generator::bockstein()}),
                Element::zero()};
    case RelationInstance::pp: {
        Element lhs = Element::monomial({Generator::power(static_cast<int>(inst.a)),
                                         Generator::power(static_cast<int>(inst.b))});
        Element rhs;
        for (long long t = 0; t <= inst.a / p.value(); ++t)
            add_term(rhs,
                     {Generator::power(static_cast<int>(inst.a + inst.b - t)),
                      Generator::power(static_cast<int>(t))},
                     adem_coeff_a(p, inst.b, inst.a, t), p);
        return {std::move(lhs), std::move(rhs)};
    }
    case RelationInstance::pbp: {
        Element lhs = Element::monomial({Generator::power(static_cast<int>(inst.a)),
                                         Generator::bockstein(),
                                         Generator::power(static_cast<int>(inst.b))});
        Element rhs;
        for (long long t = 0; t <= inst.a / p.value(); ++t)
            add_term(rhs,
                     {Generator::bockstein(),
                      Generator::power(static_cast<int>(inst.a + inst.b - t)),
                      Generator::power(static_cast<int>(t))},
                     adem_coeff_b(p, inst.b, inst.a, t), p);
        if (inst.a >= 1)
            for (long long t = 0; t <= (inst.a - 1) / p.value(); ++t)
                add_term(rhs,
                         {Generator::power(static_cast<int>(inst.a + inst.b - t)),
                          Generator::bockstein(), Generator::power(static_cast<int>(t))},
                         adem_coeff_a(p, inst.b, inst.a - 1, t), p);
        return {std::move(lhs), std::move(rhs)};
    }
    }
    return {Element::zero(), Element::zero()};
}

const char* instance_name(RelationInstance::Kind kind)
{
    switch (kind) {
    case RelationInstance::beta2:
        return "beta2";
    case RelationInstance::pp:
        return "pp";
    case RelationInstance::pbp:
        return "pbp";
    }
    return "?";
}

struct InstanceOutcome {
    std::optional<CheckFailure> failure;
    std::optional<std::string> skipped;
};

InstanceOutcome run_instance(const RelationInstance& inst, const CoproductScheme& scheme,
                             const Prime& p, const std::string& parity_text, std::uint64_t fuel)
{
    InstanceOutcome outcome;
    auto [lhs, rhs] = instance_sides(inst, p);
    try {
        FuelBudget budget{fuel};
        TensorElement left = coproduct(lhs, scheme, p, budget);
        TensorElement right = coproduct(rhs, scheme, p, budget);
        TensorElement residual = tensor_sub(left, right, p);
        if (!residual.is_zero()) {
            outcome.failure = CheckFailure{instance_name(inst.kind), inst.a, inst.b, parity_text,
                                           residual, to_text(residual, p)};
        }
    } catch (const UndefinedDegreeError&) {
        std::ostringstream msg;
        msg << instance_name(inst.kind) << " a=" << inst.a << " b=" << inst.b
            << ": Koszul signs undetermined under the sign-only grading";
        outcome.skipped = msg.str();
    }
    return outcome;
}

}  // namespace

CheckReport check_relations(const CoproductScheme& scheme, const Prime& p, long long a_max,
                            long long b_max, bool beta_free, int jobs, std::uint64_t fuel)
{
    if (a_max < 0 || b_max < 0)
        throw std::invalid_argument("check_relations: bounds must be >= 0");

    std::vector<RelationInstance> instances;
    if (!beta_free)
        instances.push_back({RelationInstance::beta2, -1, -1});
    for (long long a = 0; a <= a_max; ++a)
        for (long long b = 0; b <= b_max; ++b)
            if (a < p.value() * b)
                instances.push_back({RelationInstance::pp, a, b});
    if (!beta_free)
        for (long long a = 0; a <= a_max; ++a)
            for (long long b = 0; b <= b_max; ++b)
                if (a <= p.value() * b)
                    instances.push_back({RelationInstance::pbp, a, b});

    std::string parity_text = "-";
    if (scheme.grading.is_sign_only())
        parity_text = parity_label(scheme.grading.try_parity(word_b()).value(),
                                   scheme.grading.try_parity(word_p(0)).value());

    std::vector<InstanceOutcome> outcomes(instances.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < instances.size(); ++i)
            outcomes[i] = run_instance(instances[i], scheme, p, parity_text, fuel);
    } else {
        const size_t workers =
            std::min<size_t>(static_cast<size_t>(jobs), std::max<size_t>(instances.size(), 1));
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    for (size_t i = w; i < instances.size(); i += workers)
                        outcomes[i] = run_instance(instances[i], scheme, p, parity_text, fuel);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool)
            t.join();
        for (const auto& err : errors)
            if (err)
                std::rethrow_exception(err);
    }

    CheckReport report;
    report.scheme = scheme.name;
    report.family = beta_free ? "pp" : "beta2,pp,pbp";
    {
        std::ostringstream range;
        range << "a<=" << a_max << ",b<=" << b_max;
        report.range = range.str();
    }
    for (auto& outcome : outcomes) {
        if (outcome.failure)
            report.failures.push_back(std::move(*outcome.failure));
        if (outcome.skipped)
            report.skipped.push_back(std::move(*outcome.skipped));
    }
    report.trace.push_back("bounded sweep of " + std::to_string(instances.size()) +
                           " relation instances: finite evidence over the stated range, not a proof");
    report.verdict = report.passed() ? "pass" : "fail";
    return report;
}

TensorElement obstruction_square(const Prime& p, int bockstein_parity, int p0_parity,
                                 std::uint64_t fuel)
{
    CoproductScheme scheme = CoproductScheme::geometric(bockstein_parity, p0_parity);
    FuelBudget budget{fuel};
    return coproduct(Element::monomial({Generator::bockstein(), Generator::bockstein()}), scheme,
                     p, budget);
}

CheckReport obstruction_report(const Prime& p, std::uint64_t fuel)
{
    CheckReport report;
    report.scheme = "geometric";
    report.family = "beta2";
    report.range = "all four (deg b, deg P0) parity assignments";

    const Monomial bp0 = {Generator::bockstein(), Generator::power(0)};
    const Monomial p0b = {Generator::power(0), Generator::bockstein()};
    report.trace.push_back(
        "Koszul signs depend only on the first-degree parities of b and P0, and the two "
        "residual words cannot cancel each other, so the four parity assignments exhaust "
        "every possible bigrading");
    report.trace.push_back("basis words: b P0 admissible=" +
                           std::string(is_admissible(bp0, p) ? "yes" : "no") + ", P0 b admissible=" +
                           std::string(is_admissible(p0b, p) ? "yes" : "no") + ", distinct=" +
                           std::string(bp0 != p0b ? "yes" : "no"));

    bool reproduced = true;
    for (int r = 0; r <= 1; ++r) {
        for (int t = 0; t <= 1; ++t) {
            TensorElement square = obstruction_square(p, r, t, fuel);
            const std::string label = parity_label(r, t);
            if (square.is_zero()) {
                reproduced = false;
                report.trace.push_back(label + ": psi(b)^2 = 0 (unexpected)");
                continue;
            }
            bool basis_support = true;
            for (const auto& [m, c] : square.terms)
                basis_support = basis_support && is_admissible(m.left, p) && is_admissible(m.right, p);
            if (!basis_support)
                reproduced = false;
            report.failures.push_back(
                {"beta2", -1, -1, label, square, "psi(b)^2 = " + to_text(square, p)});
            report.trace.push_back(label + ": residual " + to_text(square, p) +
                                   " is a nonzero combination of admissible basis tensors");
        }
    }
    report.verdict = reproduced ? "obstruction reproduced" : "inconclusive";
    return report;
}

CheckReport cp_square_check(const Prime& p, std::uint64_t fuel)
{
    CheckReport report;
    report.scheme = "cp-subalgebra";
    report.family = "psi(b P0)^2";
    report.range = "-";

    // First degrees of the two tensor factors are 1 and 0; the standard
    // grading realizes exactly those parities, so it drives the signs.
    const Grading g = Grading::standard(p);
    const Monomial bp0 = {Generator::bockstein(), Generator::power(0)};
    const Monomial p0p0 = {Generator::power(0), Generator::power(0)};
    const std::array<TensorMonomial, 2> factors = {TensorMonomial{bp0, p0p0},
                                                   TensorMonomial{p0p0, bp0}};

    FuelBudget budget{fuel};
    TensorElement total;
    for (size_t i = 0; i < 2; ++i) {
        for (size_t j = 0; j < 2; ++j) {
            TensorElement product = tensor_multiply(TensorElement::monomial(factors[i]),
                                                    TensorElement::monomial(factors[j]), g, p,
                                                    budget);
            std::ostringstream line;
            line << "(" << to_text(factors[i].left) << " (x) " << to_text(factors[i].right)
                 << ") * (" << to_text(factors[j].left) << " (x) " << to_text(factors[j].right)
                 << ") = " << to_text(product, p);
            if (i == j)
                line << "  [diagonal: side contains b P0 b P0 -> b b P0 P0 = 0]";
            else
                line << "  [cross term]";
            report.trace.push_back(line.str());
            total = tensor_add(total, product, p);
        }
    }
    report.trace.push_back("sum = " + to_text(total, p));
    report.trace.push_back(
        "verifies this one square identity exactly; whether the full subalgebra carries "
        "the coproduct structure is not decided here");

    if (!total.is_zero())
        report.failures.push_back(
            {"pbp", -1, -1, "-", total, "square residual " + to_text(total, p)});
    report.verdict = report.passed() ? "pass" : "fail";
    return report;
}

namespace {

Element counit_contract_left(const TensorElement& t, const Prime& p)
{
    Element out;
    for (const auto& [m, c] : t.terms)
        if (counit(m.left))
            add_term(out, m.right, c, p);
    return out;
}

Element counit_contract_right(const TensorElement& t, const Prime& p)
{
    Element out;
    for (const auto& [m, c] : t.terms)
        if (counit(m.right))
            add_term(out, m.left, c, p);
    return out;
}

void require_standard(const CoproductScheme& scheme, const char* what)
{
    if (!scheme.grading.is_standard())
        throw InvalidGradingError(std::string(what) + " requires a scheme with the standard grading");
}

}  // namespace

CheckReport check_counit(const CoproductScheme& scheme, const Prime& p, long long n_max, int s,
                         std::uint64_t fuel)
{
    require_standard(scheme, "check_counit");
    CheckReport report;
    report.scheme = scheme.name;
    report.family = "counit";
    {
        std::ostringstream range;
        range << "n<=" << n_max << ",s=" << s;
        report.range = range.str();
    }

    for (long long n = 0; n <= n_max; ++n) {
        for (const Monomial& m : admissible_basis(p, n, s, scheme.grading)) {
            FuelBudget budget{fuel};
            TensorElement psi = coproduct(Element::monomial(m), scheme, p, budget);
            const Element expected = Element::monomial(m);
            const Element left = counit_contract_left(psi, p);
            const Element right = counit_contract_right(psi, p);
            if (left != expected || right != expected) {
                std::ostringstream detail;
                detail << "word " << to_text(m) << ": (eps(x)id)psi = " << to_text(left, p)
                       << ", (id(x)eps)psi = " << to_text(right, p);
                report.failures.push_back({"counit", n, s, "-", TensorElement{}, detail.str()});
            }
        }
    }
    report.verdict = report.passed() ? "pass" : "fail";
    return report;
}

namespace {

using TripleKey = std::array<Monomial, 3>;

struct TripleKeyOrder {
    bool operator()(const TripleKey& a, const TripleKey& b) const noexcept
    {
        MonomialOrder less;
        for (size_t i = 0; i < 3; ++i) {
            if (less(a[i], b[i]))
                return true;
            if (less(b[i], a[i]))
                return false;
        }
        return false;
    }
};

using TripleTensor = std::map<TripleKey, Fp, TripleKeyOrder>;

void triple_add(TripleTensor& t, const TripleKey& key, Fp c, const Prime& p)
{
    if (c == 0)
        return;
    auto [it, inserted] = t.try_emplace(key, c);
    if (!inserted) {
        it->second = p.add(it->second, c);
        if (it->second == 0)
            t.erase(it);
    }
}

// (psi (x) id) and (id (x) psi) applied to a coproduct value. psi has
// degree zero, so no Koszul signs appear when sliding it across a factor.
TripleTensor expand_left(const TensorElement& t, const CoproductScheme& scheme, const Prime& p,
                         FuelBudget& fuel)
{
    TripleTensor out;
    for (const auto& [m, c] : t.terms) {
        TensorElement inner = coproduct(Element::monomial(m.left), scheme, p, fuel);
        for (const auto& [im, ic] : inner.terms)
            triple_add(out, {im.left, im.right, m.right}, p.mul(c, ic), p);
    }
    return out;
}

TripleTensor expand_right(const TensorElement& t, const CoproductScheme& scheme, const Prime& p,
                          FuelBudget& fuel)
{
    TripleTensor out;
    for (const auto& [m, c] : t.terms) {
        TensorElement inner = coproduct(Element::monomial(m.right), scheme, p, fuel);
        for (const auto& [im, ic] : inner.terms)
            triple_add(out, {m.left, im.left, im.right}, p.mul(c, ic), p);
    }
    return out;
}

std::string triple_to_text(const TripleTensor& t)
{
    if (t.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : t) {
        if (!first)
            out << " + ";
        first = false;
        if (c != 1)
            out << c << ' ';
        out << to_text(key[0]) << " (x) " << to_text(key[1]) << " (x) " << to_text(key[2]);
    }
    return out.str();
}

}  // namespace

CheckReport check_coassociativity(const CoproductScheme& scheme, const Prime& p, long long n_max,
                                  int s_max, std::uint64_t fuel)
{
    require_standard(scheme, "check_coassociativity");
    CheckReport report;
    report.scheme = scheme.name;
    report.family = "coassoc";
    {
        std::ostringstream range;
        range << "n<=" << n_max << ",s<=" << s_max;
        report.range = range.str();
    }

    for (int s = 0; s <= s_max; ++s) {
        for (long long n = 0; n <= n_max; ++n) {
            for (const Monomial& m : admissible_basis(p, n, s, scheme.grading)) {
                FuelBudget budget{fuel};
                TensorElement psi = coproduct(Element::monomial(m), scheme, p, budget);
                TripleTensor left = expand_left(psi, scheme, p, budget);
                TripleTensor right = expand_right(psi, scheme, p, budget);
                if (left != right) {
                    for (const auto& [key, c] : right)
                        triple_add(left, key, p.neg(c), p);
                    report.failures.push_back({"coassoc", n, s, "-", TensorElement{},
                                               "word " + to_text(m) + ": difference " +
                                                   triple_to_text(left)});
                }
            }
        }
    }
    report.verdict = report.passed() ? "pass" : "fail";
    return report;
}

}  // namespace bp
