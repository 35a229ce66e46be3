#include "doctest.h"
#include "test_util.hpp"

#include "dwork/frobenius.hpp"
#include "dwork/oracle.hpp"
#include "dwork/zq.hpp"

using namespace dwork;

TEST_CASE("truncated ratio frozen values") {
    CHECK(oracle_dwork(5, 1, rat_of(1, 2), rat_of(1, 2), 2) == 3);
    CHECK(oracle_dwork(5, 1, rat_of(1, 2), rat_of(1, 2), 3) == 2);
    CHECK(oracle_dwork(5, 1, rat_of(1, 2), rat_of(1, 2), 4) == 3);
    CHECK(oracle_df(5, 1, rat_of(1, 2), rat_of(1, 2), 2) == 1);
}

TEST_CASE("truncated ratios stabilize in n") {
    for (long n : {1L, 2L, 3L}) {
        mpz_class lo = oracle_dwork(5, n, rat_of(1, 3), rat_of(2, 3), 2);
        mpz_class hi = oracle_dwork(5, n + 1, rat_of(1, 3), rat_of(2, 3), 2);
        mpz_class m;
        mpz_ui_pow_ui(m.get_mpz_t(), 5, (unsigned long)n);
        CHECK((hi - lo) % m == 0);

        mpz_class dlo = oracle_df(5, n, rat_of(1, 3), rat_of(2, 3), 2);
        mpz_class dhi = oracle_df(5, n + 1, rat_of(1, 3), rat_of(2, 3), 2);
        CHECK((dhi - dlo) % m == 0);
    }
}

TEST_CASE("budget enforcement") {
    CHECK_FAILS(errc::budget_exceeded, oracle_dwork(5, 9, rat_of(1, 2), rat_of(1, 2), 2));
    CHECK_FAILS(errc::budget_exceeded, oracle_df(5, 9, rat_of(1, 2), rat_of(1, 2), 2));
    oracle_budget tight{100};
    CHECK_FAILS(errc::budget_exceeded, oracle_dwork(5, 3, rat_of(1, 2), rat_of(1, 2), 2, 1, tight));
    CHECK(oracle_dwork(5, 2, rat_of(1, 2), rat_of(1, 2), 2, 1, tight) ==
          oracle_dwork(5, 2, rat_of(1, 2), rat_of(1, 2), 2));
}

TEST_CASE("input validation") {
    CHECK_FAILS(errc::invalid_prime, oracle_dwork(4, 1, rat_of(1, 2), rat_of(1, 2), 2));
    CHECK_FAILS(errc::invalid_precision, oracle_dwork(5, 0, rat_of(1, 2), rat_of(1, 2), 2));
    CHECK_FAILS(errc::invalid_parameter, oracle_dwork(5, 1, rat_of(1, 5), rat_of(1, 2), 2));
    CHECK_FAILS(errc::invalid_point, oracle_dwork(5, 1, rat_of(1, 2), rat_of(1, 2), 5));
    CHECK_FAILS(errc::invalid_point, oracle_dwork(5, 1, rat_of(1, 2), rat_of(1, 2), 6));
    CHECK_FAILS(errc::invalid_twist, oracle_dwork(5, 1, rat_of(1, 2), rat_of(1, 2), 2, 2));
}

TEST_CASE("nonvanishing condition over the orbit") {
    for (long al : {2L, 3L, 4L})
        CHECK(check_condition(5, rat_of(1, 2), rat_of(1, 2), al).ok);
    CHECK(!check_condition(5, rat_of(1, 3), rat_of(2, 3), 3).ok);
    CHECK(!check_condition(5, rat_of(1, 2), rat_of(1, 3), 2).ok);
    CHECK(!check_condition(5, rat_of(1, 4), rat_of(3, 4), 3).ok);
    CHECK(check_condition(7, rat_of(1, 2), rat_of(1, 2), 3).ok);
    CHECK(check_condition(7, rat_of(1, 2), rat_of(1, 2), 5).ok);
    for (long al : {2L, 4L, 6L}) {
        condition_report cr = check_condition(7, rat_of(1, 2), rat_of(1, 2), al);
        CHECK(!cr.ok);
        CHECK(cr.fail_index >= 0);
    }
    CHECK(!check_condition(7, rat_of(1, 4), rat_of(3, 4), 4).ok);
    // residues are what matters, not the lift
    CHECK(!check_condition(5, rat_of(1, 3), rat_of(2, 3), 13).ok);
    CHECK_FAILS(errc::invalid_point, check_condition(5, rat_of(1, 2), rat_of(1, 2), 10));

    CHECK_FAILS(errc::condition_violated, oracle_dwork(5, 2, rat_of(1, 2), rat_of(1, 3), 2));
    CHECK_FAILS(errc::condition_violated, oracle_df(5, 2, rat_of(1, 2), rat_of(1, 3), 2));
}

TEST_CASE("mod-p factorization of the dense truncation") {
    // F_{<p^n} = prod_i (F_{(a_i, b_i), <p})^(p^i) mod p over the orbit chain
    long p = 5, n = 3;
    long terms = 125;
    context C = ctx_new(p, 1);
    rat a = rat_of(1, 2), b = rat_of(1, 3);
    hg_pair dense = hg_series(C, a, b, terms - 1);

    auto polymul = [&](const std::vector<long>& f, const std::vector<long>& g) {
        std::vector<long> r(std::min((size_t)terms, f.size() + g.size() - 1), 0);
        for (size_t i = 0; i < f.size(); ++i) {
            if (!f[i]) continue;
            for (size_t j = 0; j < g.size() && i + j < (size_t)terms; ++j)
                r[i + j] = (r[i + j] + f[i] * g[j]) % p;
        }
        return r;
    };
    std::vector<long> rhs{1};
    rat ai = a, bi = b;
    for (long i = 0; i < n; ++i) {
        hg_pair fi = hg_series(C, ai, bi, p - 1);
        std::vector<long> base((size_t)p);
        for (long k = 0; k < p; ++k) base[(size_t)k] = (long)residue(C, fi.F.at(k), 1).get_ui();
        long reps = 1;
        for (long t = 0; t < i; ++t) reps *= p;
        for (long t = 0; t < reps; ++t) rhs = polymul(rhs, base);
        ai = dwork_prime(ai, p);
        bi = dwork_prime(bi, p);
    }
    rhs.resize((size_t)terms, 0);
    for (long k = 0; k < terms; ++k) {
        CAPTURE(k);
        CHECK(residue(C, dense.F.at(k), 1) == rhs[(size_t)k]);
    }
}

TEST_CASE("digamma limit sum") {
    CHECK(oracle_psi(1, 2, 5, 1) == 4);
    CHECK(oracle_psi(0, 7, 5, 3) == 0);
    CHECK(oracle_psi(3, 2, 5, 2) == oracle_psi(1, 2, 5, 2));
    CHECK_FAILS(errc::invalid_argument, oracle_psi(1, 5, 5, 2));
    CHECK_FAILS(errc::invalid_precision, oracle_psi(1, 2, 5, 0));
    oracle_budget tight{100};
    CHECK_FAILS(errc::budget_exceeded, oracle_psi(1, 2, 5, 3, tight));

    // successive digit counts agree
    mpz_class lo = oracle_psi(1, 3, 5, 2);
    mpz_class hi = oracle_psi(1, 3, 5, 3);
    CHECK((hi - lo) % 25 == 0);
}

TEST_CASE("digamma limit matches the root-of-unity sum") {
    context C = ctx_new(5, 20);
    CHECK(residue(C, psi_tilde(C, 1, 2), 4) == oracle_psi(1, 2, 5, 4));
    CHECK(residue(C, psi_tilde(C, 1, 3), 4) == oracle_psi(1, 3, 5, 4));
}
