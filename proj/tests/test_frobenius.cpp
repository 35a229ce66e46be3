#include "doctest.h"
#include "test_util.hpp"

#include "dwork/frobenius.hpp"

using namespace dwork;

TEST_CASE("truncation exponent e_n") {
    CHECK(e_bound(5, 1).e == 0);
    CHECK(e_bound(5, 2).e == 1);
    CHECK(e_bound(5, 3).e == 2);
    CHECK(e_bound(5, 5).e == 5);
    CHECK(e_bound(5, 20).e == 25);
    CHECK(e_bound(5, 20).dstar == 135);
    CHECK(e_bound(5, 1000).e == 1330);
    CHECK_FAILS(errc::invalid_prime, e_bound(6, 3));
    CHECK_FAILS(errc::invalid_precision, e_bound(5, 0));

    // defining property: k - v_p(k!) < n holds at e_n and fails beyond it
    for (long n : {2L, 3L, 7L, 20L}) {
        long e = e_bound(5, n).e;
        auto vfac = [](long k) {
            long v = 0;
            for (long q = 5; q <= k; q *= 5) v += k / q;
            return v;
        };
        CHECK(e - vfac(e) < n);
        for (long k = e + 1; k <= 3 * e + 20; ++k) CHECK(k - vfac(k) >= n);
    }
}

TEST_CASE("hypergeometric series mod 5") {
    context C = ctx_new(5, 1);
    hg_pair hg = hg_series(C, rat_of(1, 2), rat_of(1, 2), 4);
    long expect[5] = {1, 4, 1, 0, 0};
    for (long i = 0; i <= 4; ++i) CHECK(residue(C, hg.F.at(i), 1) == expect[i]);
    // derivative is the termwise one
    context C3 = ctx_new(5, 3);
    hg_pair h3 = hg_series(C3, rat_of(1, 3), rat_of(2, 3), 6);
    for (long i = 0; i <= 6; ++i)
        CHECK(residue(C3, h3.dF.at(i), 2) ==
              residue(C3, p_mul(C3, from_int(C3, i + 1),
                                // coefficient i+1 of F via the recurrence on F itself
                                hg_series(C3, rat_of(1, 3), rat_of(2, 3), 7).F.at(i + 1)),
                      2));
}

TEST_CASE("tau series") {
    context C = ctx_new(5, 4);
    series tau = tau_series(C, rat_of(1, 2), rat_of(1, 2), 8);
    CHECK(tau.at(0).exact_zero());
    CHECK(residue(C, tau.at(1), 2) == 12); // 2ab - a - b = -1/2

    // ODE k tau_k = -(1/((1-t)^(a+b) F^2))_k for k >= 1
    series F = hg_series(C, rat_of(1, 2), rat_of(1, 2), 8).F;
    series u = s_mul(C, s_binpow(C, rat_of(1), 8), s_mul(C, F, F, 8), 8);
    series iu = s_inv(C, u, 8);
    for (long k = 1; k <= 8; ++k)
        CHECK(residue(C, p_mul(C, from_int(C, k), tau.at(k)), 3) ==
              residue(C, p_neg(C, iu.at(k)), 3));
}

TEST_CASE("tau constant") {
    context C = ctx_new(5, 8);
    CHECK(digamma_pair(C, rat_of(1), rat_of(1)).exact_zero());
    padic kap = tau_constant(C, rat_of(1, 2), rat_of(1, 2), from_int(C, 1));
    CHECK(residue(C, kap, 1) == 2); // -2 psi~(1/2) = -8 = 2 mod 5
    CHECK_FAILS(errc::invalid_twist, tau_constant(C, rat_of(1, 2), rat_of(1, 2), from_int(C, 2)));
}

TEST_CASE("tau^(sigma) is integral with unit twists") {
    context C = ctx_new(5, 6);
    for (long cv : {1L, 6L}) {
        twist_config tw{from_int(C, cv), false};
        series ts = tau_sigma_series(C, rat_of(1, 3), rat_of(2, 3), tw, 30);
        for (long i = 0; i <= 30; ++i)
            CHECK((ts.at(i).zero || ts.at(i).v >= 0));
    }
}

TEST_CASE("entry series values at t = 0") {
    context C = ctx_new(5, 8);
    twist_config tw{from_int(C, 1), false};
    entry_set es = abcd_series(C, rat_of(1, 2), rat_of(1, 2), tw, 25);
    CHECK(residue(C, es.A.at(0), 6) == 1);
    CHECK(is_zero_mod(C, es.B.at(0), 6));
    CHECK(residue(C, es.D.at(0), 6) == 1);
    padic kap = tau_constant(C, rat_of(1, 2), rat_of(1, 2), from_int(C, 1));
    CHECK(residue(C, es.C.at(0), 6) == residue(C, kap, 6));
    CHECK(es.mk == -4);
    CHECK(es.ab == rat_of(1));
    CHECK(es.apbp == rat_of(1));
}

TEST_CASE("determinant of the entry matrix is the stated binomial product") {
    context C = ctx_new(5, 8);
    long d = 40;
    for (long cv : {1L, 6L}) {
        padic cval = from_int(C, cv);
        rat a = rat_of(1, 2), b = rat_of(1, 3);
        padic kap = tau_constant(C, a, b, cval);
        entry_set es = abcd_with_kappa(C, a, b, cval, d, kap);
        series lhs = s_scal(C, from_int(C, 5),
                            s_sub(C, s_mul(C, es.A, es.D, d), s_mul(C, es.B, es.C, d)));
        rat ap = dwork_prime(a, 5), bp = dwork_prime(b, 5);
        series rhs = s_scal(
            C, from_int(C, 5),
            s_mul(C, s_binpow(C, rat_sub(rat_add(a, b), rat_of(1)), d),
                  s_subst_frob(C, s_binpow(C, rat_sub(rat_of(1), rat_add(ap, bp)), d / 5), cval, d),
                  d));
        for (long i = 0; i <= d; ++i) {
            CAPTURE(cv);
            CAPTURE(i);
            CHECK(residue(C, lhs.at(i), 6) == residue(C, rhs.at(i), 6));
        }
    }
}

TEST_CASE("unit-part series matches its point expansion") {
    context C = ctx_new(5, 8);
    long d = 20;
    padic cval = from_int(C, 6);
    rat a = rat_of(1, 2), b = rat_of(1, 2);
    entry_set es = abcd_with_kappa(C, a, b, cval, d, from_int(C, 0), true);
    REQUIRE(es.E.has_value());

    padic one = from_int(C, 1);
    padic t0 = from_int(C, 5); // positive valuation, so the tail is invisible mod 5^6
    padic r1 = pow_int(C, p_sub(C, one, t0), 5);
    padic r2 = p_sub(C, one, p_mul(C, cval, pow_int(C, t0, 5)));
    padic u = divide_exact(C, p_mul(C, p_sub(C, r1, r2), unit_inverse(C, r2)), from_int(C, 5));
    padic ev = p_zero();
    padic uk = one, binc = one;
    for (long j = 0; j <= C.nu + 1; ++j) {
        ev = p_add(C, ev, p_mul(C, pow_int(C, from_int(C, 5), j), p_mul(C, binc, uk)));
        uk = p_mul(C, uk, u);
        binc = divide_exact(C, p_mul(C, binc, from_frac(C, es.apbp.num - j * es.apbp.den, es.apbp.den)),
                            j + 1);
        if (binc.exact_zero()) break;
    }
    ev = p_mul(C, ev, pow_int(C, p_sub(C, one, t0), es.mk));
    CHECK(residue(C, s_eval(C, *es.E, t0), 6) == residue(C, ev, 6));
}

TEST_CASE("entry coefficients are p-integral") {
    context C = ctx_new(5, 6);
    twist_config tw{from_int(C, 6), false};
    entry_set es = abcd_series(C, rat_of(1, 4), rat_of(3, 4), tw, 35, true);
    for (const series* s : {&es.A, &es.B, &es.C, &es.D, &*es.E})
        for (long i = 0; i <= s->deg(); ++i)
            CHECK((s->at(i).zero || s->at(i).v >= 0));
}
