#pragma once

#include <vector>

#include "dwork/frobenius.hpp"

namespace dwork {

// Value at x of one rationalized entry: the polynomial part of
// (1 - c t^p)(1-t)^(p e_n) * entry, truncated at the per-kind degree bound,
// divided back by (1 - c x^p)(1 - x)^(p e_n).
enum class entry_kind { A, B, C, D };
padic step1_eval(const context& ctx, const series& entry, entry_kind kind, const padic& x,
                 const padic& cval, long e_n);

struct mat2 {
    padic m[2][2];
};
mat2 mat_mul(const context& ctx, const mat2& x, const mat2& y);
padic mat_det(const context& ctx, const mat2& x);
padic mat_tr(const context& ctx, const mat2& x);

// Unit root of x^2 - tr x + det by Newton from x0 = tr, plus the eigenvector
// scaled to second coordinate -1. The residual M v - lambda v is checked mod p^n.
struct eigen_data {
    padic lambda;
    padic v1; // eigenvector is (v1, -1)
    padic det;
};
eigen_data unit_eigen(const context& ctx, const mat2& M, long n);

// Same data from repeated application of M (cross-check mode).
eigen_data unit_eigen_power(const context& ctx, const mat2& M, long n, long m);

// Diagnostics for the acceptance checks.
struct chain_diag {
    std::vector<mat2> h;       // H-matrices in chain order
    std::vector<padic> h_dets; // their determinants
    mat2 product;
    padic lambda;
    padic v1;
    padic det;
    long m = 0;
    long n = 0;
};

struct solve_options {
    long guard = 0;              // extra working digits
    bool power_iteration = false; // use the iteration cross-check path
    chain_diag* diag = nullptr;  // optional diagnostics sink (chain at beta)
};

// F'(beta)/F(beta) mod p^n through the Frobenius-matrix chain at beta.
mpz_class df_value(long p, long n, const rat& a, const rat& b, const mpz_class& alpha,
                   const solve_options& opt = {});

// Special value of the p-adic hypergeometric ratio at alpha, twist c, mod p^n.
mpz_class dwork_value(long p, long n, const rat& a, const rat& b, const mpz_class& alpha,
                      const mpz_class& c, const solve_options& opt = {});

// Shared validation and sizing helpers.
long working_precision(long p, long n, long degree, long guard);
void validate_alpha(long p, const mpz_class& alpha);
void validate_twist(long p, const mpz_class& c);

} // namespace dwork
