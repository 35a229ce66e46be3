#pragma once

#include <vector>

#include "dwork/padic.hpp"

namespace dwork {

// Unramified extension Zp[x]/(H) containing the N-th roots of unity, with H a
// monic degree-f lift of an irreducible factor of the N-th cyclotomic
// polynomial mod p (f = multiplicative order of p mod N).
struct zq_context {
    const context* C;
    long N;
    long f;
    mpz_class q; // p^f
    std::vector<long> H; // monic modulus, coefficients in [0, p)
};

// Elements are coordinate vectors of length f in the basis 1, x, ..., x^(f-1).
using zq_elem = std::vector<padic>;

zq_context zq_init(const context& C, long N);

zq_elem zq_lift(const zq_context& Q, const padic& x);
zq_elem zq_one(const zq_context& Q);
zq_elem zq_xbar(const zq_context& Q);
zq_elem zq_add(const zq_context& Q, const zq_elem& a, const zq_elem& b);
zq_elem zq_sub(const zq_context& Q, const zq_elem& a, const zq_elem& b);
zq_elem zq_scal(const zq_context& Q, const padic& c, const zq_elem& a);
zq_elem zq_mul(const zq_context& Q, const zq_elem& a, const zq_elem& b);
zq_elem zq_pow(const zq_context& Q, const zq_elem& a, const mpz_class& e);
zq_elem zq_inv(const zq_context& Q, const zq_elem& a);

// The root of unity congruent to a mod p, by iterating the q-th power map.
zq_elem zq_teichmuller(const zq_context& Q, const zq_elem& a);

// ln_1(z) = sum_{k>=1} p^(k-1) w(z)^k / k with w(z) = (1 - (1-z)^p/(1-z^p))/p;
// defined whenever 1-z and 1-z^p are units.
zq_elem zq_ln1p(const zq_context& Q, const zq_elem& z);

// Digamma-type limit value at i/N (p prime to N), as the root-of-unity sum
// sum_{eps in mu_N, eps != 1} (1 - eps^(-i)) ln_1(eps); a scalar in Zp.
padic psi_tilde(const context& C, long i, long N);

// Scalar helpers on Zp units.
padic teichmuller(const context& C, const padic& x);
padic log_one_plus(const context& C, const padic& x); // x = 1 mod p
padic iwasawa_log(const context& C, const padic& u);  // log(u / teichmuller(u))

// Coefficients of the N-th cyclotomic polynomial (lowest degree first).
std::vector<mpz_class> cyclotomic(long N);

// Monic irreducible degree-f factor mod p, found by seeded equal-degree
// splitting so results are reproducible.
std::vector<long> factor_cyclotomic_mod_p(long N, long p);

} // namespace dwork
