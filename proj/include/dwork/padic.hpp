#pragma once

#include <gmpxx.h>

#include <climits>
#include <deque>
#include <vector>

#include "dwork/errors.hpp"

namespace dwork {

// Absolute-precision sentinel for exact zeros.
inline constexpr long aprec_inf = LONG_MAX / 4;

// Shared modulus data: the prime p and cached powers p^k.
struct context {
    long p;
    long nu; // relative-precision cap for nonzero values

    context(long p, long nu);
    const mpz_class& pk(long k) const; // p^k for k >= 0

private:
    // deque: pk() hands out references that must survive later growth
    mutable std::deque<mpz_class> pows_;
};

// Factory matching the library-wide convention: nu = n + guard digits.
context ctx_new(long p, long n, long guard = 0);

bool is_prime(long p);
long ilog(long base, long x); // floor(log_base(x)), x >= 1

// Capped-relative p-adic number: a nonzero value is p^v * u with the unit u
// known modulo p^k (1 <= k <= nu), so its absolute precision is v + k.
// A zero only carries the absolute precision az: "0 mod p^az".
struct padic {
    bool zero = true;
    long v = 0;
    long k = 0;
    mpz_class u;
    long az = aprec_inf;

    long aprec() const { return zero ? az : v + k; }
    bool exact_zero() const { return zero && az >= aprec_inf; }
};

padic p_zero();
padic p_zero_mod(long aprec);
padic from_int(const context& C, const mpz_class& x);
padic from_int(const context& C, long x);
padic from_frac(const context& C, const mpz_class& num, const mpz_class& den);
padic from_frac(const context& C, long num, long den);

padic truncate_abs(const context& C, const padic& x, long aprec);

padic p_add(const context& C, const padic& x, const padic& y);
padic p_sub(const context& C, const padic& x, const padic& y);
padic p_neg(const context& C, const padic& x);
padic p_mul(const context& C, const padic& x, const padic& y);

// Inverse of a unit (valuation 0); anything else is a non-unit error.
padic unit_inverse(const context& C, const padic& x);

// Division by a nonzero w = p^e * w0: lowers the valuation by e, no rounding.
padic divide_exact(const context& C, const padic& x, const padic& w);
padic divide_exact(const context& C, const padic& x, long w);

padic pow_int(const context& C, const padic& x, long e);

// Canonical representative in [0, p^n); demands v >= 0 and enough precision.
mpz_class residue(const context& C, const padic& x, long n);

// Whether x == 0 mod p^n; errors out if x's precision cannot decide.
bool is_zero_mod(const context& C, const padic& x, long n);

std::string to_string(const context& C, const padic& x);

} // namespace dwork
