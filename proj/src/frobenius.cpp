#include "dwork/frobenius.hpp"

namespace dwork {

e_info e_bound(long p, long n) {
    if (!is_prime(p) || p < 3) fail(errc::invalid_prime, "p must be an odd prime");
    if (n < 1) fail(errc::invalid_precision, "target exponent must be >= 1");
    // k - v_p(k!) is not monotone, so scan past the asymptotic slope (p-1)/(p-2)
    long limit = 2 * (((p - 1) * n) / (p - 2) + 10) + 22;
    long best = 0, vfac = 0;
    for (long k = 1; k <= limit; ++k) {
        long m = k;
        while (m % p == 0) {
            m /= p;
            ++vfac;
        }
        if (k - vfac < n) best = k;
    }
    return e_info{best, p * best + 2 * p};
}

hg_pair hg_series(const context& ctx, const rat& a, const rat& b, long d) {
    series full = s_zero(d + 1);
    padic c = from_int(ctx, 1);
    for (long k = 0; k <= d + 1; ++k) {
        full.c[(size_t)k] = c;
        if (k <= d) {
            mpz_class num = (a.num + k * a.den) * (b.num + k * b.den);
            mpz_class den = a.den * b.den * (k + 1) * (k + 1);
            c = p_mul(ctx, c, from_frac(ctx, num, den));
        }
    }
    hg_pair r;
    r.dF = s_deriv(ctx, full, d);
    r.F = s_trunc(full, d);
    return r;
}

series tau_series(const context& ctx, const rat& a, const rat& b, long d) {
    series F = hg_series(ctx, a, b, d).F;
    series u = s_mul(ctx, s_binpow(ctx, rat_add(a, b), d), s_mul(ctx, F, F, d), d);
    series iu = s_inv(ctx, u, d);
    // t tau' = 1 - 1/((1-t)^(a+b) F^2): integrate (1 - iu)/t term by term
    series h = s_zero(d - 1);
    for (long k = 1; k <= d; ++k) h.c[(size_t)(k - 1)] = p_neg(ctx, iu.at(k));
    return s_integrate(ctx, h);
}

padic digamma_pair(const context& ctx, const rat& a, const rat& b) {
    auto one_part = [&](const rat& x) {
        if (rat_is_integer(x)) return p_zero();
        return psi_tilde(ctx, (long)mpz_fdiv_ui(x.num.get_mpz_t(), mpz_get_ui(x.den.get_mpz_t())),
                         (long)mpz_get_ui(x.den.get_mpz_t()));
    };
    return p_neg(ctx, p_add(ctx, one_part(a), one_part(b)));
}

padic tau_constant(const context& ctx, const rat& a, const rat& b, const padic& cval) {
    if (cval.zero || cval.v != 0 || !is_zero_mod(ctx, p_sub(ctx, cval, from_int(ctx, 1)), 1))
        fail(errc::invalid_twist, "twist constant must be 1 mod p");
    padic logc = log_one_plus(ctx, cval);
    return p_add(ctx, digamma_pair(ctx, a, b), divide_exact(ctx, logc, from_int(ctx, ctx.p)));
}

series tau_sigma_with_kappa(const context& ctx, const rat& a, const rat& b, const padic& cval,
                            long d, const padic& kappa) {
    rat ap = dwork_prime(a, ctx.p), bp = dwork_prime(b, ctx.p);
    series t0 = tau_series(ctx, a, b, d);
    series t1 = tau_series(ctx, ap, bp, d / ctx.p);
    series ts = s_subst_frob(ctx, t1, cval, d);
    series r = s_sub(ctx, t0, s_scal(ctx, from_frac(ctx, 1, ctx.p), ts));
    r.c[0] = p_add(ctx, r.at(0), kappa);
    for (long i = 0; i <= d; ++i)
        if (!r.at(i).zero && r.at(i).v < 0)
            fail(errc::internal_consistency, "tau^(sigma) coefficient not integral");
    return r;
}

series tau_sigma_series(const context& ctx, const rat& a, const rat& b, const twist_config& tw,
                        long d) {
    return tau_sigma_with_kappa(ctx, a, b, tw.c, d, tau_constant(ctx, a, b, tw.c));
}

static long residue_of(const rat& x, long p) {
    // x mod p as an integer in [0, p)
    mpz_class pd(p), di;
    mpz_invert(di.get_mpz_t(), x.den.get_mpz_t(), pd.get_mpz_t());
    mpz_class r = (x.num * di) % pd;
    if (r < 0) r += pd;
    return (long)r.get_ui();
}

entry_set abcd_with_kappa(const context& ctx, const rat& a, const rat& b, const padic& cval,
                          long d, const padic& kappa, bool want_e) {
    long p = ctx.p;
    rat ap = dwork_prime(a, p), bp = dwork_prime(b, p);
    long dp = d / p;

    hg_pair hg0 = hg_series(ctx, a, b, d);
    hg_pair hg1 = hg_series(ctx, ap, bp, dp);
    const series &F = hg0.F, &Fd = hg0.dF;
    series Fs = s_subst_frob(ctx, hg1.F, cval, d);
    series Finv = s_inv(ctx, F, d);
    series F2inv = s_inv(ctx, hg1.F, dp);
    series Fsinv = s_subst_frob(ctx, F2inv, cval, d);
    series G = s_binpow(ctx, rat_add(a, b), d);
    series G1 = s_binpow(ctx, rat_sub(rat_add(a, b), rat_of(1)), d);
    series sub1 = s_subst_frob(ctx, s_binpow(ctx, rat_sub(rat_of(1), rat_add(ap, bp)), dp), cval, d);
    series tsig = tau_sigma_with_kappa(ctx, a, b, cval, d, kappa);

    series Fstsig = s_mul(ctx, Fs, tsig, d);
    entry_set es;
    es.A = s_sub(ctx, s_mul(ctx, Fs, Finv, d),
                 s_shift1(s_mul(ctx, s_mul(ctx, G, Fd, d), Fstsig, d)));
    es.C = s_mul(ctx, s_mul(ctx, G1, F, d), Fstsig, d);
    series Q = s_subst_frob(ctx, s_mul(ctx, hg1.dF, F2inv, dp), cval, d);
    // p t^sigma (1 - t^sigma) = p(c t^p - c^2 t^(2p))
    series pts = s_zero(d);
    if (p <= d) pts.c[(size_t)p] = p_mul(ctx, from_int(ctx, p), cval);
    if (2 * p <= d)
        pts.c[(size_t)(2 * p)] = p_neg(ctx, p_mul(ctx, from_int(ctx, p), p_mul(ctx, cval, cval)));
    es.B = s_sub(ctx, s_mul(ctx, pts, s_mul(ctx, Q, es.A, d), d),
                 s_shift1(s_mul(ctx, s_mul(ctx, G, sub1, d), s_mul(ctx, Fd, Fsinv, d), d)));
    es.D = s_add(ctx, s_mul(ctx, pts, s_mul(ctx, Q, es.C, d), d),
                 s_mul(ctx, s_mul(ctx, G1, sub1, d), s_mul(ctx, F, Fsinv, d), d));

    es.ab = rat_add(a, b);
    es.apbp = rat_add(ap, bp);
    long ka = (p - residue_of(a, p)) % p;
    long kb = (p - residue_of(b, p)) % p;
    es.mk = -(ka + kb);
    es.dstar = d;

    for (const series* s : {&es.A, &es.B, &es.C, &es.D})
        for (long i = 0; i <= d; ++i)
            if (!s->at(i).zero && s->at(i).v < 0)
                fail(errc::internal_consistency, "Frobenius entry coefficient not integral");

    if (want_e) {
        // E = (1-t)^mk sum_j p^j binom(a'+b', j) u(t)^j with 1 + p u = (1-t)^p/(1-c t^p)
        series onemts = s_one(ctx, d);
        if (p <= d) onemts.c[(size_t)p] = p_neg(ctx, cval);
        series base = s_mul(ctx, s_binpow(ctx, rat_of(p), d), s_inv(ctx, onemts, d), d);
        base.c[0] = p_sub(ctx, base.at(0), from_int(ctx, 1));
        series u = s_scal(ctx, from_frac(ctx, 1, p), base);
        for (long i = 0; i <= d; ++i)
            if (!u.at(i).zero && u.at(i).v < 0)
                fail(errc::internal_consistency, "unit-part series not integral");
        series acc = s_zero(d);
        series uk = s_one(ctx, d);
        padic binc = from_int(ctx, 1);
        for (long j = 0; j <= std::min(d, ctx.nu + 1); ++j) {
            padic w = p_mul(ctx, pow_int(ctx, from_int(ctx, p), j), binc);
            acc = s_add(ctx, acc, s_scal(ctx, w, uk));
            uk = s_mul(ctx, uk, u, d);
            binc = divide_exact(
                ctx, p_mul(ctx, binc, from_frac(ctx, es.apbp.num - j * es.apbp.den, es.apbp.den)),
                j + 1);
            if (binc.exact_zero()) break;
        }
        series pre = es.mk == 0 ? s_one(ctx, d)
                                : s_inv(ctx, s_binpow(ctx, rat_of(-es.mk), d), d);
        es.E = s_mul(ctx, pre, acc, d);
    }
    return es;
}

entry_set abcd_series(const context& ctx, const rat& a, const rat& b, const twist_config& tw,
                      long d, bool want_e) {
    return abcd_with_kappa(ctx, a, b, tw.c, d, tau_constant(ctx, a, b, tw.c), want_e);
}

} // namespace dwork
