#pragma once

#include <vector>

#include "dwork/padic.hpp"
#include "dwork/rational.hpp"

namespace dwork {

// Power series truncated at degree d: coefficients c[0..d].
struct series {
    std::vector<padic> c;

    long deg() const { return (long)c.size() - 1; }
    const padic& at(long i) const { return c[(size_t)i]; }
};

series s_zero(long d);
series s_one(const context& C, long d);
series s_trunc(const series& f, long d); // copy, pad with exact zeros
series s_shift1(const series& f);        // multiply by t, same degree

series s_add(const context& C, const series& f, const series& g);
series s_sub(const context& C, const series& f, const series& g);
series s_scal(const context& C, const padic& c, const series& f);
series s_mul(const context& C, const series& f, const series& g, long d);

// Inverse of a series with unit constant term, by the telescoping product
// 1/(1-h) = prod_i (1 + h^(2^i)).
series s_inv(const context& C, const series& f, long d);

// (1-t)^r for rational r with p-free denominator.
series s_binpow(const context& C, const rat& r, long d);

// f(c t^p) for a twist constant c = 1 mod p.
series s_subst_frob(const context& C, const series& f, const padic& cval, long d);

// Derivative truncated at degree d; needs f up to degree d+1.
series s_deriv(const context& C, const series& f, long d);

// Term-by-term antiderivative with zero constant term; degree grows by one.
series s_integrate(const context& C, const series& f);

// Evaluation at a point of nonnegative valuation.
padic s_eval(const context& C, const series& f, const padic& x);

} // namespace dwork
