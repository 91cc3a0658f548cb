#include "bp/render.hpp"

#include <algorithm>
#include <sstream>

namespace bp {

std::string to_text(const Monomial& m)
{
    if (m.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const Generator& g : m) {
        if (!first)
            out << ' ';
        first = false;
        if (g.is_bockstein())
            out << 'b';
        else
            out << 'P' << g.power_index();
    }
    return out.str();
}

std::vector<std::pair<Monomial, Fp>> display_sorted(const Element& e, const Prime& p)
{
    std::vector<std::pair<Monomial, Fp>> terms(e.terms.begin(), e.terms.end());
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const auto& a, const auto& b) { return display_less(a.first, b.first, p); });
    return terms;
}

std::vector<std::pair<TensorMonomial, Fp>> display_sorted(const TensorElement& t, const Prime& p)
{
    std::vector<std::pair<TensorMonomial, Fp>> terms(t.terms.begin(), t.terms.end());
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        if (display_less(a.first.left, b.first.left, p))
            return true;
        if (display_less(b.first.left, a.first.left, p))
            return false;
        return display_less(a.first.right, b.first.right, p);
    });
    return terms;
}

std::string to_text(const Element& e, const Prime& p)
{
    if (e.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : display_sorted(e, p)) {
        if (!first)
            out << " + ";
        first = false;
        if (c != 1)
            out << c << ' ';
        out << to_text(w);
    }
    return out.str();
}

std::string to_text(const TensorElement& t, const Prime& p)
{
    if (t.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : display_sorted(t, p)) {
        if (!first)
            out << " + ";
        first = false;
        if (c != 1)
            out << c << ' ';
        out << to_text(m.left) << " (x) " << to_text(m.right);
    }
    return out.str();
}

nlohmann::ordered_json word_to_json(const Monomial& m)
{
    nlohmann::ordered_json letters = nlohmann::ordered_json::array();
    for (const Generator& g : m) {
        nlohmann::ordered_json letter;
        if (g.is_bockstein()) {
            letter["g"] = "b";
        } else {
            letter["g"] = "P";
            letter["k"] = g.power_index();
        }
        letters.push_back(std::move(letter));
    }
    return letters;
}

nlohmann::ordered_json element_to_json(const Element& e, const Prime& p)
{
    const Grading g = Grading::standard(p);
    nlohmann::ordered_json j;
    j["p"] = p.value();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [w, c] : display_sorted(e, p)) {
        nlohmann::ordered_json term;
        term["c"] = c;
        term["w"] = word_to_json(w);
        const Bidegree d = bidegree_of(w, g);
        term["deg"] = nlohmann::ordered_json::array({d.n, d.s});
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

nlohmann::ordered_json tensor_terms_to_json(const TensorElement& t, const Prime& p)
{
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : display_sorted(t, p)) {
        nlohmann::ordered_json term;
        term["c"] = c;
        term["l"] = word_to_json(m.left);
        term["r"] = word_to_json(m.right);
        terms.push_back(std::move(term));
    }
    return terms;
}

}  // namespace bp
