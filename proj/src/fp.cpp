#include "bp/fp.hpp"

#include <string>

namespace bp {

namespace {

bool is_odd_prime(int n)
{
    if (n < 3 || n % 2 == 0)
        return false;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

int pow_mod(long long base, long long exp, int mod)
{
    long long result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<int>(result);
}

}  // namespace

Prime::Prime(int value) : p_(value)
{
    if (!is_odd_prime(value))
        throw std::invalid_argument("Prime: expected an odd prime >= 3, got " + std::to_string(value));
    if (value > 1000003)
        throw std::invalid_argument("Prime: modulus too large for the factorial tables");

    auto fact = std::make_shared<std::vector<int>>(value);
    auto inv_fact = std::make_shared<std::vector<int>>(value);
    (*fact)[0] = 1;
    for (int i = 1; i < value; ++i)
        (*fact)[i] = static_cast<int>(1LL * (*fact)[i - 1] * i % value);
    (*inv_fact)[value - 1] = pow_mod((*fact)[value - 1], value - 2, value);
    for (int i = value - 1; i > 0; --i)
        (*inv_fact)[i - 1] = static_cast<int>(1LL * (*inv_fact)[i] * i % value);
    fact_ = std::move(fact);
    inv_fact_ = std::move(inv_fact);
}

Fp Prime::reduce(long long n) const noexcept
{
    long long r = n % p_;
    return static_cast<Fp>(r < 0 ? r + p_ : r);
}

Fp Prime::add(Fp a, Fp b) const noexcept
{
    int s = a + b;
    return s >= p_ ? s - p_ : s;
}

Fp Prime::sub(Fp a, Fp b) const noexcept
{
    int s = a - b;
    return s < 0 ? s + p_ : s;
}

Fp Prime::mul(Fp a, Fp b) const noexcept
{
    return static_cast<Fp>(1LL * a * b % p_);
}

Fp Prime::neg(Fp a) const noexcept
{
    return a == 0 ? 0 : p_ - a;
}

Fp Prime::sign(long long e) const noexcept
{
    return (e % 2 == 0) ? 1 : p_ - 1;
}

Fp Prime::digit_binom(int n, int k) const noexcept
{
    if (k > n)
        return 0;
    long long r = 1LL * (*fact_)[n] * (*inv_fact_)[k] % p_;
    return static_cast<Fp>(r * (*inv_fact_)[n - k] % p_);
}

Fp Prime::binom(long long n, long long k) const noexcept
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    long long result = 1;
    while ((n > 0 || k > 0) && result != 0) {
        result = result * digit_binom(static_cast<int>(n % p_), static_cast<int>(k % p_)) % p_;
        n /= p_;
        k /= p_;
    }
    return static_cast<Fp>(result);
}

Fp binom_mod_p(const Prime& p, long long n, long long k)
{
    return p.binom(n, k);
}

Fp adem_coeff_a(const Prime& p, long long k, long long r, long long j)
{
    const long long top = (p.value() - 1) * (k - j) - 1;
    Fp c = p.binom(top, r - p.value() * j);
    return (r + j) % 2 == 0 ? c : p.neg(c);
}

Fp adem_coeff_b(const Prime& p, long long k, long long r, long long j)
{
    const long long top = (p.value() - 1) * (k - j);
    Fp c = p.binom(top, r - p.value() * j);
    return (r + j) % 2 == 0 ? c : p.neg(c);
}

}  // namespace bp
