#include "dwork/series.hpp"

namespace dwork {

series s_zero(long d) {
    series s;
    s.c.assign((size_t)d + 1, p_zero());
    return s;
}

series s_one(const context& C, long d) {
    series s = s_zero(d);
    s.c[0] = from_int(C, 1);
    return s;
}

series s_trunc(const series& f, long d) {
    series s = f;
    s.c.resize((size_t)d + 1, p_zero());
    return s;
}

series s_shift1(const series& f) {
    series s = f;
    s.c.insert(s.c.begin(), p_zero());
    s.c.pop_back();
    return s;
}

series s_add(const context& C, const series& f, const series& g) {
    long d = std::max(f.deg(), g.deg());
    series s = s_zero(d);
    for (long i = 0; i <= d; ++i) {
        const padic& a = i <= f.deg() ? f.at(i) : s.at(i);
        const padic& b = i <= g.deg() ? g.at(i) : s.at(i);
        s.c[(size_t)i] = p_add(C, a, b);
    }
    return s;
}

series s_sub(const context& C, const series& f, const series& g) {
    return s_add(C, f, s_scal(C, from_int(C, -1), g));
}

series s_scal(const context& C, const padic& c, const series& f) {
    series s = f;
    for (auto& x : s.c) x = p_mul(C, c, x);
    return s;
}

series s_mul(const context& C, const series& f, const series& g, long d) {
    series s = s_zero(d);
    long df = std::min(f.deg(), d), dg = g.deg();
    for (long i = 0; i <= df; ++i) {
        const padic& a = f.at(i);
        if (a.exact_zero()) continue;
        long jmax = std::min(dg, d - i);
        for (long j = 0; j <= jmax; ++j) {
            const padic& b = g.at(j);
            if (b.exact_zero()) continue;
            s.c[(size_t)(i + j)] = p_add(C, s.at(i + j), p_mul(C, a, b));
        }
    }
    return s;
}

series s_inv(const context& C, const series& f, long d) {
    if (f.deg() < 0 || f.at(0).zero || f.at(0).v != 0)
        fail(errc::non_invertible_series, "constant term is not a unit");
    padic inv0 = unit_inverse(C, f.at(0));
    // f = f0 (1 - h): peel off the constant, invert 1 - h, rescale.
    series h = s_zero(d);
    long lim = std::min(f.deg(), d);
    for (long i = 1; i <= lim; ++i) h.c[(size_t)i] = p_neg(C, p_mul(C, inv0, f.at(i)));
    series acc = s_one(C, d);
    series cur = h;
    for (long covered = 1; covered <= d; covered *= 2) {
        series fac = cur;
        fac.c[0] = p_add(C, fac.at(0), from_int(C, 1));
        acc = s_mul(C, acc, fac, d);
        if (2 * covered <= d) cur = s_mul(C, cur, cur, d);
    }
    return s_scal(C, inv0, acc);
}

series s_binpow(const context& C, const rat& r, long d) {
    series s = s_zero(d);
    padic c = from_int(C, 1);
    for (long k = 0; k <= d; ++k) {
        s.c[(size_t)k] = c;
        if (!c.exact_zero() && k < d)
            c = p_mul(C, c, from_frac(C, mpz_class(k) * r.den - r.num, r.den * (k + 1)));
    }
    return s;
}

series s_subst_frob(const context& C, const series& f, const padic& cval, long d) {
    if (cval.zero || cval.v != 0 || !is_zero_mod(C, p_sub(C, cval, from_int(C, 1)), 1))
        fail(errc::invalid_twist, "twist constant must be 1 mod p");
    series s = s_zero(d);
    padic cj = from_int(C, 1);
    for (long j = 0; j <= f.deg() && j * C.p <= d; ++j) {
        s.c[(size_t)(j * C.p)] = p_mul(C, f.at(j), cj);
        cj = p_mul(C, cj, cval);
    }
    return s;
}

series s_deriv(const context& C, const series& f, long d) {
    if (f.deg() < d + 1) fail(errc::internal_consistency, "derivative needs one extra coefficient");
    series s = s_zero(d);
    for (long k = 0; k <= d; ++k) s.c[(size_t)k] = p_mul(C, from_int(C, k + 1), f.at(k + 1));
    return s;
}

series s_integrate(const context& C, const series& f) {
    series s = s_zero(f.deg() + 1);
    for (long k = 0; k <= f.deg(); ++k) s.c[(size_t)(k + 1)] = divide_exact(C, f.at(k), k + 1);
    return s;
}

padic s_eval(const context& C, const series& f, const padic& x) {
    if (!x.zero && x.v < 0) fail(errc::out_of_domain, "evaluation point has negative valuation");
    padic acc = p_zero();
    for (long i = f.deg(); i >= 0; --i) acc = p_add(C, p_mul(C, acc, x), f.at(i));
    return acc;
}

} // namespace dwork
