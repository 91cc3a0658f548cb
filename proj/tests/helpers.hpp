#pragma once

#include "bp/term.hpp"

inline bp::Generator B()
{
    return bp::Generator::bockstein();
}

inline bp::Generator P(int k)
{
    return bp::Generator::power(k);
}

inline bp::Monomial W(std::initializer_list<bp::Generator> letters)
{
    return bp::Monomial(letters);
}

// All words of length <= max_len over {b, P^0..P^max_index}.
inline std::vector<bp::Monomial> all_words(size_t max_len, int max_index)
{
    std::vector<bp::Generator> alphabet;
    alphabet.push_back(B());
    for (int k = 0; k <= max_index; ++k)
        alphabet.push_back(P(k));

    std::vector<bp::Monomial> words = {{}};
    std::vector<bp::Monomial> frontier = {{}};
    for (size_t len = 1; len <= max_len; ++len) {
        std::vector<bp::Monomial> next;
        for (const auto& w : frontier) {
            for (const auto& g : alphabet) {
                bp::Monomial longer = w;
                longer.push_back(g);
                next.push_back(longer);
            }
        }
        words.insert(words.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return words;
}
