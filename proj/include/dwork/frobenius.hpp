#pragma once

#include <optional>

#include "dwork/series.hpp"
#include "dwork/zq.hpp"

namespace dwork {

// Largest k >= 1 with k - v_p(k!) < n (0 when none); dstar = p*e + 2p is the
// working truncation degree for the rationalized entries.
struct e_info {
    long e;
    long dstar;
};
e_info e_bound(long p, long n);

// F(t) = sum ((a)_k (b)_k / k!^2) t^k and its derivative, both to degree d.
struct hg_pair {
    series F;
    series dF;
};
hg_pair hg_series(const context& C, const rat& a, const rat& b, long d);

// tau with tau(0) = 0 solving t tau' = 1 - 1/((1-t)^(a+b) F^2).
series tau_series(const context& C, const rat& a, const rat& b, long d);

// Twist constant c = 1 mod p of sigma(t) = c t^p, with its provenance.
struct twist_config {
    padic c;
    bool from_beta = false;
};

// -psi~(a) - psi~(b); the parameter-independent part of the tau constant.
padic digamma_pair(const context& C, const rat& a, const rat& b);

// kappa = -psi~(a) - psi~(b) + log(c)/p.
padic tau_constant(const context& C, const rat& a, const rat& b, const padic& cval);

// tau^(sigma) = kappa + tau_{a,b}(t) - (1/p) tau_{a',b'}(c t^p); integral.
series tau_sigma_series(const context& C, const rat& a, const rat& b, const twist_config& tw, long d);
series tau_sigma_with_kappa(const context& C, const rat& a, const rat& b, const padic& cval, long d,
                            const padic& kappa);

// The four Frobenius-matrix entry series (A and C without the extra factor p)
// plus the unit prefactor data for E.
struct entry_set {
    series A, B, C, D;
    std::optional<series> E;
    rat ab;   // a + b
    rat apbp; // a' + b'
    long mk;  // exponent of the (1-t)^mk prefactor of E, <= 0
    long k = 0;
    long dstar = 0;
};

entry_set abcd_series(const context& C, const rat& a, const rat& b, const twist_config& tw, long d,
                      bool want_e = false);
entry_set abcd_with_kappa(const context& C, const rat& a, const rat& b, const padic& cval, long d,
                          const padic& kappa, bool want_e = false);

} // namespace dwork
