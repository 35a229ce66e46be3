#pragma once

#include "dwork/rational.hpp"

namespace dwork {

// Term-count cap for the brute-force evaluators.
struct oracle_budget {
    long max_terms = 500000;
};

struct condition_report {
    bool ok = true;
    long fail_index = -1; // orbit index of the first vanishing truncation
};

// Degree-<p truncations mod p over the whole Dwork orbit, evaluated at the
// residue of alpha; ok iff every one is nonzero.
condition_report check_condition(long p, const rat& a, const rat& b, const mpz_class& alpha);

// Truncated-ratio evaluator F_{a,b,<p^n}(alpha) / F_{a',b',<p^(n-1)}(c alpha^p) mod p^n.
mpz_class oracle_dwork(long p, long n, const rat& a, const rat& b, const mpz_class& alpha,
                       const mpz_class& c = 1, const oracle_budget& budget = {});

// Truncated logarithmic derivative F'_{<p^n}(alpha) / F_{<p^n}(alpha) mod p^n.
mpz_class oracle_df(long p, long n, const rat& a, const rat& b, const mpz_class& alpha,
                    const oracle_budget& budget = {});

// Limit-definition digamma: sum_{1 <= k < n_j, p !| k} 1/k mod p^j with n_j the
// representative of i/N in [0, p^(j+2)); the two extra digits absorb the
// convergence rate of the defining limit.
mpz_class oracle_psi(long i, long N, long p, long j, const oracle_budget& budget = {});

} // namespace dwork
