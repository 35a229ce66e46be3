#include "dwork/solver.hpp"

#include "dwork/oracle.hpp"

namespace dwork {

long working_precision(long p, long n, long degree, long guard) {
    return n + 2 * (ilog(p, degree + 1) + 1) + 6 + guard;
}

void validate_alpha(long p, const mpz_class& alpha) {
    mpz_class r = alpha % p;
    if (r < 0) r += p;
    if (r == 0 || r == 1)
        fail(errc::invalid_point, "alpha must be a unit with residue outside {0,1}");
}

void validate_twist(long p, const mpz_class& c) {
    mpz_class r = c % p;
    if (r < 0) r += p;
    if (r != 1) fail(errc::invalid_twist, "twist constant must be 1 mod p");
}

padic step1_eval(const context& ctx, const series& entry, entry_kind kind, const padic& x,
                 const padic& cval, long e_n) {
    long p = ctx.p;
    long pe = p * e_n;
    long bound = 0;
    switch (kind) {
    case entry_kind::A: bound = pe + p; break;
    case entry_kind::B: bound = pe + 2 * p; break;
    case entry_kind::C: bound = pe + p - 1; break;
    case entry_kind::D: bound = pe + 2 * p - 1; break;
    }
    if (entry.deg() < bound)
        fail(errc::internal_consistency, "entry series shorter than its truncation bound");
    padic one = from_int(ctx, 1);
    padic xs = p_mul(ctx, cval, pow_int(ctx, x, p)); // x^sigma
    padic d1 = p_sub(ctx, one, xs);
    padic d2 = p_sub(ctx, one, x);
    if (x.zero || x.v != 0 || d1.zero || d1.v != 0 || d2.zero || d2.v != 0)
        fail(errc::invalid_point, "evaluation point congruent to 0 or 1 mod p");
    series onemts = s_one(ctx, bound);
    if (p <= bound) onemts.c[(size_t)p] = p_neg(ctx, cval);
    series num = s_mul(ctx, s_mul(ctx, onemts, s_binpow(ctx, rat_of(pe), bound), bound),
                       s_trunc(entry, bound), bound);
    padic nval = s_eval(ctx, num, x);
    padic den = p_mul(ctx, d1, pow_int(ctx, d2, pe));
    return divide_exact(ctx, nval, den);
}

mat2 mat_mul(const context& ctx, const mat2& x, const mat2& y) {
    mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = p_add(ctx, p_mul(ctx, x.m[i][0], y.m[0][j]),
                              p_mul(ctx, x.m[i][1], y.m[1][j]));
    return r;
}

padic mat_det(const context& ctx, const mat2& x) {
    return p_sub(ctx, p_mul(ctx, x.m[0][0], x.m[1][1]), p_mul(ctx, x.m[0][1], x.m[1][0]));
}

padic mat_tr(const context& ctx, const mat2& x) { return p_add(ctx, x.m[0][0], x.m[1][1]); }

namespace {

// residual (M v - lambda v) must vanish mod p^n
void check_residual(const context& ctx, const mat2& M, const padic& lambda, const padic& v1,
                    long n) {
    padic v2 = from_int(ctx, -1);
    padic r1 = p_sub(ctx, p_add(ctx, p_mul(ctx, M.m[0][0], v1), p_mul(ctx, M.m[0][1], v2)),
                     p_mul(ctx, lambda, v1));
    padic r2 = p_sub(ctx, p_add(ctx, p_mul(ctx, M.m[1][0], v1), p_mul(ctx, M.m[1][1], v2)),
                     p_mul(ctx, lambda, v2));
    if (!is_zero_mod(ctx, r1, n) || !is_zero_mod(ctx, r2, n))
        fail(errc::internal_consistency, "eigenvector residual does not vanish");
}

padic eigen_column(const context& ctx, const mat2& M, const padic& lambda2) {
    // columns of M - lambda2 I span the unit eigenline; take the one whose
    // second coordinate is a unit and scale that coordinate to -1
    padic c1a = p_sub(ctx, M.m[0][0], lambda2), c1b = M.m[1][0];
    padic c2a = M.m[0][1], c2b = p_sub(ctx, M.m[1][1], lambda2);
    auto valof = [](const padic& x) { return x.zero ? aprec_inf : x.v; };
    const padic *ca = &c1a, *cb = &c1b;
    if (valof(c2b) < valof(c1b)) {
        ca = &c2a;
        cb = &c2b;
    }
    if (cb->zero || cb->v != 0)
        fail(errc::degenerate_eigenvector, "unit eigenvector has no unit second coordinate");
    return p_mul(ctx, *ca, p_neg(ctx, unit_inverse(ctx, *cb)));
}

} // namespace

eigen_data unit_eigen(const context& ctx, const mat2& M, long n) {
    padic tr = mat_tr(ctx, M);
    padic det = mat_det(ctx, M);
    if (tr.zero || tr.v != 0)
        fail(errc::degenerate_matrix, "trace is not a unit; no unit eigenvalue split");
    if (!det.zero && det.v <= 0)
        fail(errc::degenerate_matrix, "determinant is a unit; no unit eigenvalue split");
    padic x = tr;
    long steps = ilog(2, ctx.nu) + 2;
    for (long s = 0; s < steps; ++s) {
        padic fx = p_add(ctx, p_sub(ctx, p_mul(ctx, x, x), p_mul(ctx, tr, x)), det);
        padic fpx = p_sub(ctx, p_mul(ctx, from_int(ctx, 2), x), tr);
        x = p_sub(ctx, x, divide_exact(ctx, fx, fpx));
    }
    eigen_data r;
    r.lambda = x;
    r.det = det;
    padic lambda2 = divide_exact(ctx, det, x);
    r.v1 = eigen_column(ctx, M, lambda2);
    check_residual(ctx, M, r.lambda, r.v1, n);
    return r;
}

eigen_data unit_eigen_power(const context& ctx, const mat2& M, long n, long m) {
    padic tr = mat_tr(ctx, M);
    padic det = mat_det(ctx, M);
    if (tr.zero || tr.v != 0)
        fail(errc::degenerate_matrix, "trace is not a unit; no unit eigenvalue split");
    // the non-unit eigenvalue has valuation m, so (n/m)+1 applications of M
    // contract any start vector onto the unit eigenline mod p^n
    long steps = n / m + 2;
    auto iterate = [&](padic w1, padic w2) {
        for (long s = 0; s < steps; ++s) {
            padic t1 = p_add(ctx, p_mul(ctx, M.m[0][0], w1), p_mul(ctx, M.m[0][1], w2));
            padic t2 = p_add(ctx, p_mul(ctx, M.m[1][0], w1), p_mul(ctx, M.m[1][1], w2));
            w1 = t1;
            w2 = t2;
        }
        return std::make_pair(w1, w2);
    };
    auto [w1, w2] = iterate(from_int(ctx, 1), p_zero());
    if (w2.zero || w2.v != 0) {
        auto [y1, y2] = iterate(p_zero(), from_int(ctx, 1));
        w1 = y1;
        w2 = y2;
    }
    if (w2.zero || w2.v != 0)
        fail(errc::degenerate_eigenvector, "power iteration found no unit second coordinate");
    eigen_data r;
    r.det = det;
    r.v1 = p_mul(ctx, w1, p_neg(ctx, unit_inverse(ctx, w2)));
    // lambda = second coordinate of M (v1, -1), negated
    r.lambda = p_neg(ctx, p_add(ctx, p_mul(ctx, M.m[1][0], r.v1),
                                p_mul(ctx, M.m[1][1], from_int(ctx, -1))));
    check_residual(ctx, M, r.lambda, r.v1, n);
    return r;
}

namespace {

// DF^(kstart)(beta) through the full orbit chain under the beta twist.
padic chain_df(const context& ctx, const std::vector<std::pair<rat, rat>>& orb, const padic& beta,
               long n, long e_n, long kstart, const std::vector<padic>& psis,
               const solve_options& opt) {
    long p = ctx.p;
    long m = (long)orb.size();
    padic cbeta = unit_inverse(ctx, pow_int(ctx, beta, p - 1)); // beta^(1-p)
    padic logc_over_p = divide_exact(
        ctx, p_mul(ctx, from_int(ctx, 1 - p), iwasawa_log(ctx, beta)), from_int(ctx, p));
    long dstar = p * e_n + 2 * p;
    std::vector<mat2> hs((size_t)m);
    std::vector<padic> hdets((size_t)m);
    for (long k = 0; k < m; ++k) {
        padic kap = p_add(ctx, psis[(size_t)k], logc_over_p);
        entry_set es = abcd_with_kappa(ctx, orb[(size_t)k].first, orb[(size_t)k].second, cbeta,
                                       dstar, kap, false);
        mat2 H;
        padic pf = from_int(ctx, p);
        H.m[0][0] = p_mul(ctx, pf, step1_eval(ctx, es.A, entry_kind::A, beta, cbeta, e_n));
        H.m[0][1] = step1_eval(ctx, es.B, entry_kind::B, beta, cbeta, e_n);
        H.m[1][0] = p_mul(ctx, pf, step1_eval(ctx, es.C, entry_kind::C, beta, cbeta, e_n));
        H.m[1][1] = step1_eval(ctx, es.D, entry_kind::D, beta, cbeta, e_n);
        padic det = mat_det(ctx, H);
        if (det.zero || det.v != 1)
            fail(errc::internal_consistency, "H-matrix determinant valuation is not 1");
        hs[(size_t)k] = H;
        hdets[(size_t)k] = det;
    }
    mat2 P = hs[(size_t)(kstart % m)];
    for (long j = 1; j < m; ++j) P = mat_mul(ctx, P, hs[(size_t)((kstart + j) % m)]);
    eigen_data eig = opt.power_iteration ? unit_eigen_power(ctx, P, n, m) : unit_eigen(ctx, P, n);
    if (eig.det.zero || eig.det.v != m)
        fail(errc::internal_consistency, "chain determinant valuation is not the orbit length");
    if (opt.diag) {
        chain_diag& dg = *opt.diag;
        dg.h.clear();
        dg.h_dets.clear();
        for (long j = 0; j < m; ++j) {
            dg.h.push_back(hs[(size_t)((kstart + j) % m)]);
            dg.h_dets.push_back(hdets[(size_t)((kstart + j) % m)]);
        }
        dg.product = P;
        dg.lambda = eig.lambda;
        dg.v1 = eig.v1;
        dg.det = eig.det;
        dg.m = m;
        dg.n = n;
    }
    padic denom = p_mul(ctx, beta, p_sub(ctx, from_int(ctx, 1), beta));
    return divide_exact(ctx, eig.v1, denom);
}

std::vector<padic> orbit_digammas(const context& ctx,
                                  const std::vector<std::pair<rat, rat>>& orb) {
    std::vector<padic> psis;
    psis.reserve(orb.size());
    for (const auto& [ak, bk] : orb) psis.push_back(digamma_pair(ctx, ak, bk));
    return psis;
}

void validate_inputs(long p, long n, const rat& a, const rat& b) {
    if (!is_prime(p) || p < 3) fail(errc::invalid_prime, "p must be an odd prime");
    if (n < 1) fail(errc::invalid_precision, "n must be >= 1");
    validate_param(a, p);
    validate_param(b, p);
}

} // namespace

mpz_class df_value(long p, long n, const rat& a, const rat& b, const mpz_class& alpha,
                   const solve_options& opt) {
    validate_inputs(p, n, a, b);
    validate_alpha(p, alpha);
    condition_report cr = check_condition(p, a, b, alpha);
    if (!cr.ok)
        fail(errc::condition_violated,
             "truncated series vanishes mod p at orbit index " + std::to_string(cr.fail_index));
    e_info e = e_bound(p, n);
    context ctx = ctx_new(p, working_precision(p, n, e.dstar, opt.guard));
    auto orb = param_orbit(a, b, p);
    auto psis = orbit_digammas(ctx, orb);
    padic aval = from_int(ctx, alpha);
    padic df = chain_df(ctx, orb, aval, n, e.e, 0, psis, opt);
    return residue(ctx, df, n);
}

mpz_class dwork_value(long p, long n, const rat& a, const rat& b, const mpz_class& alpha,
                      const mpz_class& c, const solve_options& opt) {
    validate_inputs(p, n, a, b);
    validate_alpha(p, alpha);
    validate_twist(p, c);
    condition_report cr = check_condition(p, a, b, alpha);
    if (!cr.ok)
        fail(errc::condition_violated,
             "truncated series vanishes mod p at orbit index " + std::to_string(cr.fail_index));
    e_info e = e_bound(p, n);
    context ctx = ctx_new(p, working_precision(p, n, e.dstar, opt.guard));
    auto orb = param_orbit(a, b, p);
    long m = (long)orb.size();
    auto psis = orbit_digammas(ctx, orb);
    padic one = from_int(ctx, 1);
    padic cval = from_int(ctx, c);
    padic aval = from_int(ctx, alpha);
    padic beta = p_mul(ctx, cval, pow_int(ctx, aval, p));

    // chain at beta under its own twist gives DF^(1)(beta)
    padic df1 = chain_df(ctx, orb, beta, n, e.e, 1 % m, psis, opt);

    // entries at alpha under the user twist
    padic kap0 = p_add(ctx, psis[0],
                       divide_exact(ctx, log_one_plus(ctx, cval), from_int(ctx, p)));
    entry_set es = abcd_with_kappa(ctx, a, b, cval, e.dstar, kap0, false);
    padic pf = from_int(ctx, p);
    padic pCv = p_mul(ctx, pf, step1_eval(ctx, es.C, entry_kind::C, aval, cval, e.e));
    padic Dv = step1_eval(ctx, es.D, entry_kind::D, aval, cval, e.e);

    // E(alpha) = (1-alpha)^mk sum_j p^j binom(a'+b', j) u^j with
    // u = ((1-alpha)^p - (1-beta)) / (p (1-beta))
    padic r1 = pow_int(ctx, p_sub(ctx, one, aval), p);
    padic r2 = p_sub(ctx, one, beta);
    padic u = divide_exact(ctx, p_mul(ctx, p_sub(ctx, r1, r2), unit_inverse(ctx, r2)),
                           from_int(ctx, p));
    if (!u.zero && u.v < 0) fail(errc::internal_consistency, "unit-part value not integral");
    padic Ev = p_zero();
    padic uk = one;
    padic binc = one;
    for (long j = 0; j <= ctx.nu + 1; ++j) {
        Ev = p_add(ctx, Ev, p_mul(ctx, pow_int(ctx, pf, j), p_mul(ctx, binc, uk)));
        uk = p_mul(ctx, uk, u);
        binc = divide_exact(
            ctx, p_mul(ctx, binc, from_frac(ctx, es.apbp.num - j * es.apbp.den, es.apbp.den)),
            j + 1);
        if (binc.exact_zero()) break;
    }
    Ev = p_mul(ctx, Ev, pow_int(ctx, p_sub(ctx, one, aval), es.mk));

    padic num = p_sub(ctx, Dv, p_mul(ctx, p_mul(ctx, beta, r2), p_mul(ctx, pCv, df1)));
    num = p_mul(ctx, num, p_sub(ctx, one, aval));
    padic den = p_mul(ctx, r2, Ev);
    return residue(ctx, divide_exact(ctx, num, den), n);
}

} // namespace dwork
