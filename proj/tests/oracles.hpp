// Test-only oracles, deliberately independent of the engine's arithmetic:
// binomials come from exact 128-bit integer arithmetic rather than Lucas'
// theorem, and the basis oracle enumerates raw shape tuples and filters.
#pragma once

#include "bp/term.hpp"

#include <functional>
#include <vector>

namespace oracle {

// Exact C(n,k) as a 128-bit integer (multiplicative formula; every
// intermediate division is exact). Valid for n <= 124 without overflow.
inline unsigned __int128 binom_exact(long long n, long long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned __int128 result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= static_cast<unsigned __int128>(n - k + i);
        result /= static_cast<unsigned __int128>(i);
    }
    return result;
}

inline bp::Fp binom_mod(const bp::Prime& p, long long n, long long k)
{
    return static_cast<bp::Fp>(binom_exact(n, k) % static_cast<unsigned>(p.value()));
}

inline bp::Fp signed_binom(const bp::Prime& p, long long sign_exp, long long n, long long k)
{
    const bp::Fp c = binom_mod(p, n, k);
    return sign_exp % 2 == 0 ? c : p.neg(c);
}

inline bp::Fp coeff_a(const bp::Prime& p, long long k, long long r, long long j)
{
    return signed_binom(p, r + j, (p.value() - 1) * (k - j) - 1, r - p.value() * j);
}

inline bp::Fp coeff_b(const bp::Prime& p, long long k, long long r, long long j)
{
    return signed_binom(p, r + j, (p.value() - 1) * (k - j), r - p.value() * j);
}

// Direct expansion of P^a P^b (a < pb) as an element.
inline bp::Element pp_rhs(const bp::Prime& p, long long a, long long b)
{
    bp::Element rhs;
    for (long long t = 0; t <= a / p.value(); ++t)
        bp::add_term(rhs,
                     {bp::Generator::power(static_cast<int>(a + b - t)),
                      bp::Generator::power(static_cast<int>(t))},
                     coeff_a(p, b, a, t), p);
    return rhs;
}

// Direct expansion of P^a b P^b (a <= pb).
inline bp::Element pbp_rhs(const bp::Prime& p, long long a, long long b)
{
    bp::Element rhs;
    for (long long t = 0; t <= a / p.value(); ++t)
        bp::add_term(rhs,
                     {bp::Generator::bockstein(),
                      bp::Generator::power(static_cast<int>(a + b - t)),
                      bp::Generator::power(static_cast<int>(t))},
                     coeff_b(p, b, a, t), p);
    if (a >= 1)
        for (long long t = 0; t <= (a - 1) / p.value(); ++t)
            bp::add_term(rhs,
                         {bp::Generator::power(static_cast<int>(a + b - t)),
                          bp::Generator::bockstein(), bp::Generator::power(static_cast<int>(t))},
                         coeff_a(p, b, a - 1, t), p);
    return rhs;
}

// Brute-force basis: enumerate every shape tuple (eps_0, t_1, ..., t_s,
// eps_s) with t_i bounded by the degree budget and keep the words the
// engine-independent filters accept.
inline std::vector<bp::Monomial> brute_basis(const bp::Prime& p, long long n, int s)
{
    std::vector<bp::Monomial> out;
    const long long power_unit = 2LL * (p.value() - 1);

    std::vector<long long> t(static_cast<size_t>(s), 0);
    const long long t_cap = s > 0 ? n / power_unit : 0;

    auto shape_degree = [&](unsigned eps_mask) {
        long long deg = 0;
        for (int i = 0; i < s; ++i)
            deg += t[static_cast<size_t>(i)] * power_unit;
        for (int i = 0; i <= s; ++i)
            deg += (eps_mask >> i) & 1u;
        return deg;
    };
    auto shape_admissible = [&](unsigned eps_mask) {
        for (int j = 1; j < s; ++j)
            if (t[static_cast<size_t>(j - 1)] <
                p.value() * t[static_cast<size_t>(j)] + ((eps_mask >> j) & 1u))
                return false;
        return true;
    };
    auto build_word = [&](unsigned eps_mask) {
        bp::Monomial w;
        if (eps_mask & 1u)
            w.push_back(bp::Generator::bockstein());
        for (int i = 0; i < s; ++i) {
            w.push_back(bp::Generator::power(static_cast<int>(t[static_cast<size_t>(i)])));
            if ((eps_mask >> (i + 1)) & 1u)
                w.push_back(bp::Generator::bockstein());
        }
        return w;
    };

    const unsigned eps_count = 1u << (s + 1);
    std::function<void(int)> fill = [&](int i) {
        if (i == s) {
            for (unsigned eps = 0; eps < eps_count; ++eps)
                if (shape_degree(eps) == n && shape_admissible(eps))
                    out.push_back(build_word(eps));
            return;
        }
        for (long long v = 0; v <= t_cap; ++v) {
            t[static_cast<size_t>(i)] = v;
            fill(i + 1);
        }
    };
    fill(0);
    return out;
}

}  // namespace oracle
