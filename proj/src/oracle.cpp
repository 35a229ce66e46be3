#include "dwork/oracle.hpp"

#include "dwork/frobenius.hpp"
#include "dwork/solver.hpp"

namespace dwork {

namespace {

void validate_common(long p, const rat& a, const rat& b) {
    if (!is_prime(p) || p < 3) fail(errc::invalid_prime, "p must be an odd prime");
    validate_param(a, p);
    validate_param(b, p);
}

long checked_pow(long p, long n, const oracle_budget& budget) {
    long t = 1;
    for (long i = 0; i < n; ++i) {
        t *= p;
        if (t > budget.max_terms)
            fail(errc::budget_exceeded,
                 "oracle needs " + std::to_string(p) + "^" + std::to_string(n) +
                     " terms, cap is " + std::to_string(budget.max_terms));
    }
    return t;
}

void require_condition(long p, const rat& a, const rat& b, const mpz_class& alpha) {
    condition_report cr = check_condition(p, a, b, alpha);
    if (!cr.ok)
        fail(errc::condition_violated,
             "truncated series vanishes mod p at orbit index " + std::to_string(cr.fail_index));
}

// F_{a,b,<terms}(x) and optionally its derivative, by the Pochhammer recurrence.
struct dense_eval {
    padic value;
    padic dvalue;
};

dense_eval eval_truncated(const context& ctx, const rat& a, const rat& b, const padic& x,
                          long terms, bool want_d) {
    dense_eval r{p_zero(), p_zero()};
    padic c = from_int(ctx, 1);
    padic xk = from_int(ctx, 1); // x^k
    padic xk1 = from_int(ctx, 1); // x^(k-1), meaningful from k = 1
    for (long k = 0; k < terms; ++k) {
        r.value = p_add(ctx, r.value, p_mul(ctx, c, xk));
        if (want_d && k > 0)
            r.dvalue = p_add(ctx, r.dvalue, p_mul(ctx, from_int(ctx, k), p_mul(ctx, c, xk1)));
        mpz_class num = (a.num + k * a.den) * (b.num + k * b.den);
        mpz_class den = a.den * b.den * (k + 1) * (k + 1);
        c = p_mul(ctx, c, from_frac(ctx, num, den));
        xk1 = xk;
        xk = p_mul(ctx, xk, x);
    }
    return r;
}

} // namespace

condition_report check_condition(long p, const rat& a, const rat& b, const mpz_class& alpha) {
    validate_common(p, a, b);
    mpz_class am = alpha % p;
    if (am < 0) am += p;
    long ar = (long)am.get_ui();
    if (ar == 0) fail(errc::invalid_point, "alpha is divisible by p");
    auto inv_mod_p = [p](long x) {
        mpz_class r, xz(x), pz(p);
        mpz_invert(r.get_mpz_t(), xz.get_mpz_t(), pz.get_mpz_t());
        return (long)r.get_ui();
    };
    auto residue_mod_p = [&](const rat& r) {
        mpz_class nm = r.num % p, dm = r.den % p;
        if (nm < 0) nm += p;
        long n0 = (long)nm.get_ui(), d0 = (long)dm.get_ui();
        return n0 * inv_mod_p(d0) % p;
    };
    auto orb = param_orbit(a, b, p);
    for (size_t idx = 0; idx < orb.size(); ++idx) {
        long ra = residue_mod_p(orb[idx].first);
        long rb = residue_mod_p(orb[idx].second);
        long c = 1, val = 0, xk = 1;
        for (long k = 0; k < p; ++k) {
            val = (val + c * xk) % p;
            if (k + 1 < p)
                c = c * ((ra + k) % p) % p * ((rb + k) % p) % p *
                    inv_mod_p(((k + 1) * (k + 1)) % p) % p;
            xk = xk * ar % p;
        }
        if (val == 0) return condition_report{false, (long)idx};
    }
    return condition_report{true, -1};
}

mpz_class oracle_dwork(long p, long n, const rat& a, const rat& b, const mpz_class& alpha,
                       const mpz_class& c, const oracle_budget& budget) {
    validate_common(p, a, b);
    if (n < 1) fail(errc::invalid_precision, "n must be >= 1");
    validate_alpha(p, alpha);
    validate_twist(p, c);
    long terms = checked_pow(p, n, budget);
    require_condition(p, a, b, alpha);
    context ctx = ctx_new(p, n, 3);
    rat ap = dwork_prime(a, p), bp = dwork_prime(b, p);
    padic aval = from_int(ctx, alpha);
    padic beta = p_mul(ctx, from_int(ctx, c), pow_int(ctx, aval, p));
    padic num = eval_truncated(ctx, a, b, aval, terms, false).value;
    padic den = eval_truncated(ctx, ap, bp, beta, terms / p, false).value;
    if (den.zero || den.v != 0)
        fail(errc::internal_consistency, "truncated denominator is not a unit");
    return residue(ctx, p_mul(ctx, num, unit_inverse(ctx, den)), n);
}

mpz_class oracle_df(long p, long n, const rat& a, const rat& b, const mpz_class& alpha,
                    const oracle_budget& budget) {
    validate_common(p, a, b);
    if (n < 1) fail(errc::invalid_precision, "n must be >= 1");
    validate_alpha(p, alpha);
    long terms = checked_pow(p, n, budget);
    require_condition(p, a, b, alpha);
    context ctx = ctx_new(p, n, 3);
    padic aval = from_int(ctx, alpha);
    dense_eval e = eval_truncated(ctx, a, b, aval, terms, true);
    if (e.value.zero || e.value.v != 0)
        fail(errc::internal_consistency, "truncated series value is not a unit");
    return residue(ctx, p_mul(ctx, e.dvalue, unit_inverse(ctx, e.value)), n);
}

mpz_class oracle_psi(long i, long N, long p, long j, const oracle_budget& budget) {
    if (!is_prime(p) || p < 3) fail(errc::invalid_prime, "p must be an odd prime");
    if (N < 1 || N % p == 0) fail(errc::invalid_argument, "denominator must be >= 1 and p-free");
    if (j < 1) fail(errc::invalid_precision, "digit count must be >= 1");
    i %= N;
    if (i < 0) i += N;
    if (i == 0) return 0;
    long terms = checked_pow(p, j + 2, budget);
    mpz_class P(terms);
    mpz_class nj, Nz(N);
    mpz_invert(nj.get_mpz_t(), Nz.get_mpz_t(), P.get_mpz_t());
    nj = nj * i % P;
    mpz_class acc(0), inv;
    for (mpz_class k(1); k < nj; ++k) {
        if (mpz_divisible_ui_p(k.get_mpz_t(), (unsigned long)p)) continue;
        mpz_invert(inv.get_mpz_t(), k.get_mpz_t(), P.get_mpz_t());
        acc += inv;
    }
    mpz_class pj;
    mpz_ui_pow_ui(pj.get_mpz_t(), (unsigned long)p, (unsigned long)j);
    acc %= pj;
    return acc;
}

} // namespace dwork
