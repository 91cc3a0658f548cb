#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

namespace bp {

// Coefficient residue in [0, p). Kept canonical everywhere; arithmetic goes
// through Prime so the modulus stays explicit.
using Fp = int;

// An odd prime p together with mod-p factorial tables. Copies share the
// tables, so Prime is cheap to pass by value.
class Prime {
public:
    // Rejects 2, composites and anything < 3.
    explicit Prime(int value);

    int value() const noexcept { return p_; }

    Fp reduce(long long n) const noexcept;
    Fp add(Fp a, Fp b) const noexcept;
    Fp sub(Fp a, Fp b) const noexcept;
    Fp mul(Fp a, Fp b) const noexcept;
    Fp neg(Fp a) const noexcept;
    // (-1)^e as a canonical residue.
    Fp sign(long long e) const noexcept;

    // C(n,k) mod p by Lucas' theorem, digit by digit in base p.
    // 0 when n < 0, k < 0 or k > n.
    Fp binom(long long n, long long k) const noexcept;

    bool operator==(const Prime& other) const noexcept { return p_ == other.p_; }

private:
    Fp digit_binom(int n, int k) const noexcept;  // pre: 0 <= n,k < p

    int p_ = 0;
    std::shared_ptr<const std::vector<int>> fact_;      // n! mod p for n < p
    std::shared_ptr<const std::vector<int>> inv_fact_;  // (n!)^{-1} mod p for n < p
};

Fp binom_mod_p(const Prime& p, long long n, long long k);

// Coefficients of the Adem-type rewriting rules:
//   adem_coeff_a(p,k,r,j) = (-1)^{r+j} C((p-1)(k-j)-1, r-pj) mod p
//   adem_coeff_b(p,k,r,j) = (-1)^{r+j} C((p-1)(k-j),   r-pj) mod p
// Out-of-range binomial indices yield 0, so both are total.
Fp adem_coeff_a(const Prime& p, long long k, long long r, long long j);
Fp adem_coeff_b(const Prime& p, long long k, long long r, long long j);

}  // namespace bp
