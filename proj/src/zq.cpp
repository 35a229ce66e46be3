#include "dwork/zq.hpp"

#include <random>

namespace dwork {

std::vector<mpz_class> cyclotomic(long N) {
    // Phi_N = prod_{d | N} (x^d - 1)^mu(N/d), assembled as numerator / denominator.
    auto mobius = [](long n) {
        long r = 1;
        for (long q = 2; q * q <= n; ++q) {
            if (n % q == 0) {
                n /= q;
                if (n % q == 0) return 0L;
                r = -r;
            }
        }
        if (n > 1) r = -r;
        return r;
    };
    auto mul = [](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
        std::vector<mpz_class> r(a.size() + b.size() - 1, mpz_class(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    std::vector<mpz_class> num{1}, den{1};
    for (long d = 1; d <= N; ++d) {
        if (N % d) continue;
        long m = mobius(N / d);
        if (m == 0) continue;
        std::vector<mpz_class> f((size_t)d + 1, mpz_class(0));
        f[0] = -1;
        f[(size_t)d] = 1;
        (m == 1 ? num : den) = mul(m == 1 ? num : den, f);
    }
    // exact division num / den (den is monic up to sign of its lead, here monic)
    std::vector<mpz_class> q(num.size() - den.size() + 1, mpz_class(0));
    for (long i = (long)q.size() - 1; i >= 0; --i) {
        q[(size_t)i] = num[(size_t)i + den.size() - 1];
        for (size_t j = 0; j < den.size(); ++j) num[(size_t)i + j] -= q[(size_t)i] * den[j];
    }
    return q;
}

namespace {

using polyp = std::vector<long>; // dense mod-p polynomial, lowest degree first

long pmod_inv(long a, long p) {
    mpz_class r, az(a), pz(p);
    mpz_invert(r.get_mpz_t(), az.get_mpz_t(), pz.get_mpz_t());
    return r.get_si();
}

polyp pp_trim(polyp a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

polyp pp_mul(const polyp& a, const polyp& b, long p) {
    polyp r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

polyp pp_rem(polyp a, const polyp& m, long p) {
    long dm = (long)m.size() - 1;
    long inv = pmod_inv(m.back(), p);
    a = pp_trim(std::move(a));
    while ((long)a.size() - 1 >= dm) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        long c = a.back() * inv % p;
        size_t sh = a.size() - 1 - (size_t)dm;
        for (size_t j = 0; j < m.size(); ++j) a[sh + j] = ((a[sh + j] - c * m[j]) % p + p) % p;
        a.pop_back();
        while (a.size() > 1 && a.back() == 0) a.pop_back();
    }
    return a;
}

bool pp_is_zero(const polyp& a) {
    for (long x : a)
        if (x) return false;
    return true;
}

polyp pp_gcd(polyp a, polyp b, long p) {
    while (!pp_is_zero(b)) {
        polyp r = pp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    a = pp_trim(std::move(a));
    long inv = pmod_inv(a.back(), p);
    for (auto& x : a) x = x * inv % p;
    return a;
}

polyp pp_powmod(polyp a, mpz_class e, const polyp& m, long p) {
    polyp r{1};
    a = pp_rem(std::move(a), m, p);
    while (e > 0) {
        if (mpz_tstbit(e.get_mpz_t(), 0)) r = pp_rem(pp_mul(r, a, p), m, p);
        a = pp_rem(pp_mul(a, a, p), m, p);
        e >>= 1;
    }
    return r;
}

polyp pp_div_exact(polyp a, const polyp& b, long p) {
    long db = (long)b.size() - 1;
    long inv = pmod_inv(b.back(), p);
    polyp q(a.size() - (size_t)db, 0);
    for (long i = (long)q.size() - 1; i >= 0; --i) {
        long c = a[(size_t)i + db] * inv % p;
        q[(size_t)i] = c;
        for (size_t j = 0; j < b.size(); ++j)
            a[(size_t)i + j] = ((a[(size_t)i + j] - c * b[j]) % p + p) % p;
    }
    return q;
}

long order_mod(long p, long N) {
    if (N == 1) return 1;
    long f = 1, r = p % N;
    while (r != 1) {
        r = r * (p % N) % N;
        if (++f > N) fail(errc::invalid_order, "p is not invertible mod N");
    }
    return f;
}

} // namespace

std::vector<long> factor_cyclotomic_mod_p(long N, long p) {
    long f = order_mod(p, N);
    auto phi = cyclotomic(N);
    polyp cur(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) {
        mpz_class r = phi[i] % p;
        if (r < 0) r += p;
        cur[i] = r.get_si();
    }
    mpz_class qf;
    mpz_ui_pow_ui(qf.get_mpz_t(), (unsigned long)p, (unsigned long)f);
    mpz_class half = (qf - 1) / 2;
    std::mt19937_64 rng(0x5EED);
    // every irreducible factor has degree f; split until a single one remains
    while ((long)cur.size() - 1 > f) {
        polyp g((size_t)((long)cur.size() - 1), 0);
        for (auto& x : g) x = (long)(rng() % (unsigned long)p);
        g.push_back(1);
        polyp h = pp_powmod(g, half, cur, p);
        h[0] = ((h[0] - 1) % p + p) % p;
        if (pp_is_zero(h)) continue;
        polyp d = pp_gcd(cur, h, p);
        long dd = (long)d.size() - 1;
        long dc = (long)cur.size() - 1;
        if (dd == 0 || dd == dc) continue;
        cur = (dd <= dc - dd) ? d : pp_div_exact(cur, d, p);
    }
    return cur;
}

zq_context zq_init(const context& C, long N) {
    if (N < 1) fail(errc::invalid_order, "root-of-unity order must be >= 1");
    if (N % C.p == 0) fail(errc::invalid_order, "root-of-unity order divisible by p");
    zq_context Q;
    Q.C = &C;
    Q.N = N;
    Q.H = factor_cyclotomic_mod_p(N, C.p);
    Q.f = (long)Q.H.size() - 1;
    mpz_ui_pow_ui(Q.q.get_mpz_t(), (unsigned long)C.p, (unsigned long)Q.f);
    return Q;
}

zq_elem zq_lift(const zq_context& Q, const padic& x) {
    zq_elem e((size_t)Q.f, p_zero());
    e[0] = x;
    return e;
}

zq_elem zq_one(const zq_context& Q) { return zq_lift(Q, from_int(*Q.C, 1)); }

zq_elem zq_xbar(const zq_context& Q) {
    zq_elem e((size_t)Q.f, p_zero());
    if (Q.f == 1)
        e[0] = from_int(*Q.C, -Q.H[0]);
    else
        e[1] = from_int(*Q.C, 1);
    return e;
}

zq_elem zq_add(const zq_context& Q, const zq_elem& a, const zq_elem& b) {
    zq_elem r((size_t)Q.f);
    for (long i = 0; i < Q.f; ++i) r[(size_t)i] = p_add(*Q.C, a[(size_t)i], b[(size_t)i]);
    return r;
}

zq_elem zq_sub(const zq_context& Q, const zq_elem& a, const zq_elem& b) {
    zq_elem r((size_t)Q.f);
    for (long i = 0; i < Q.f; ++i) r[(size_t)i] = p_sub(*Q.C, a[(size_t)i], b[(size_t)i]);
    return r;
}

zq_elem zq_scal(const zq_context& Q, const padic& c, const zq_elem& a) {
    zq_elem r((size_t)Q.f);
    for (long i = 0; i < Q.f; ++i) r[(size_t)i] = p_mul(*Q.C, c, a[(size_t)i]);
    return r;
}

zq_elem zq_mul(const zq_context& Q, const zq_elem& a, const zq_elem& b) {
    const context& C = *Q.C;
    std::vector<padic> r((size_t)(2 * Q.f - 1), p_zero());
    for (long i = 0; i < Q.f; ++i) {
        if (a[(size_t)i].exact_zero()) continue;
        for (long j = 0; j < Q.f; ++j) {
            if (b[(size_t)j].exact_zero()) continue;
            r[(size_t)(i + j)] = p_add(C, r[(size_t)(i + j)], p_mul(C, a[(size_t)i], b[(size_t)j]));
        }
    }
    // x^f = -sum_j H[j] x^j since H is monic
    for (long k = 2 * Q.f - 2; k >= Q.f; --k) {
        padic c = r[(size_t)k];
        if (c.exact_zero()) continue;
        r[(size_t)k] = p_zero();
        for (long j = 0; j < Q.f; ++j) {
            if (!Q.H[(size_t)j]) continue;
            r[(size_t)(k - Q.f + j)] =
                p_sub(C, r[(size_t)(k - Q.f + j)], p_mul(C, c, from_int(C, Q.H[(size_t)j])));
        }
    }
    r.resize((size_t)Q.f);
    return r;
}

zq_elem zq_pow(const zq_context& Q, const zq_elem& a, const mpz_class& e) {
    if (e < 0) fail(errc::invalid_exponent, "negative extension exponent");
    zq_elem r = zq_one(Q);
    long bits = e == 0 ? 0 : (long)mpz_sizeinbase(e.get_mpz_t(), 2);
    for (long i = bits - 1; i >= 0; --i) {
        r = zq_mul(Q, r, r);
        if (mpz_tstbit(e.get_mpz_t(), (unsigned long)i)) r = zq_mul(Q, r, a);
    }
    return r;
}

zq_elem zq_inv(const zq_context& Q, const zq_elem& a) {
    const context& C = *Q.C;
    bool unit = false;
    for (const auto& c : a)
        if (!c.zero && c.v == 0) unit = true;
    if (!unit) fail(errc::non_unit, "extension element is zero mod p");
    // a^(q-2) is the inverse mod p; Newton y <- y(2 - ay) lifts it
    zq_elem y = zq_pow(Q, a, Q.q - 2);
    zq_elem two = zq_lift(Q, from_int(C, 2));
    long steps = ilog(2, C.nu) + 2;
    for (long s = 0; s < steps; ++s) y = zq_mul(Q, y, zq_sub(Q, two, zq_mul(Q, a, y)));
    zq_elem check = zq_sub(Q, zq_mul(Q, a, y), zq_one(Q));
    for (const auto& c : check)
        if (!c.zero && c.v < C.nu - 3)
            fail(errc::internal_consistency, "extension inverse failed to converge");
    return y;
}

zq_elem zq_teichmuller(const zq_context& Q, const zq_elem& a) {
    zq_elem x = a;
    for (long s = 0; s < Q.C->nu + 2; ++s) x = zq_pow(Q, x, Q.q);
    return x;
}

zq_elem zq_ln1p(const zq_context& Q, const zq_elem& z) {
    const context& C = *Q.C;
    long p = C.p;
    zq_elem one = zq_one(Q);
    zq_elem num = zq_pow(Q, zq_sub(Q, one, z), mpz_class(p));      // (1-z)^p
    zq_elem den = zq_inv(Q, zq_sub(Q, one, zq_pow(Q, z, mpz_class(p)))); // 1/(1-z^p)
    zq_elem w = zq_scal(Q, from_frac(C, -1, p), zq_sub(Q, zq_mul(Q, num, den), one));
    for (const auto& c : w)
        if (!c.zero && c.v < 0) fail(errc::internal_consistency, "log argument not integral");
    zq_elem acc((size_t)Q.f, p_zero());
    zq_elem wk = one;
    long K = C.nu + 2 * (ilog(p, C.nu + 1) + 2) + 4;
    for (long k = 1; k <= K; ++k) {
        wk = zq_mul(Q, wk, w);
        padic coef = divide_exact(C, pow_int(C, from_int(C, p), k - 1), k);
        acc = zq_add(Q, acc, zq_scal(Q, coef, wk));
    }
    return acc;
}

padic psi_tilde(const context& C, long i, long N) {
    if (N < 1) fail(errc::invalid_argument, "denominator must be >= 1");
    if (N % C.p == 0) fail(errc::invalid_argument, "digamma argument has p in its denominator");
    i %= N;
    if (i < 0) i += N;
    if (i == 0) return p_zero();
    zq_context Q = zq_init(C, N);
    zq_elem zeta = zq_teichmuller(Q, zq_xbar(Q));
    std::vector<zq_elem> zp((size_t)N); // zeta^0 .. zeta^(N-1)
    zp[0] = zq_one(Q);
    for (long j = 1; j < N; ++j) zp[(size_t)j] = zq_mul(Q, zp[(size_t)(j - 1)], zeta);
    zq_elem acc((size_t)Q.f, p_zero());
    for (long j = 1; j < N; ++j) {
        zq_elem l = zq_ln1p(Q, zp[(size_t)j]);
        zq_elem coef = zq_sub(Q, zp[0], zp[(size_t)(((-i * j) % N + N) % N)]);
        acc = zq_add(Q, acc, zq_mul(Q, coef, l));
    }
    long reserve = 2 * (ilog(C.p, C.nu + 1) + 2) + 6;
    for (long j = 1; j < Q.f; ++j) {
        const padic& c = acc[(size_t)j];
        if (!c.zero && c.v < C.nu - reserve)
            fail(errc::internal_consistency, "digamma value has a nonscalar component");
    }
    return acc[0];
}

padic teichmuller(const context& C, const padic& x) {
    if (x.zero || x.v != 0) fail(errc::non_unit, "Teichmuller lift needs a unit");
    padic y = x;
    for (long s = 0; s < C.nu + 2; ++s) y = pow_int(C, y, C.p);
    return y;
}

padic log_one_plus(const context& C, const padic& x) {
    padic t = p_sub(C, from_int(C, 1), x); // 1 - x, valuation >= 1
    if (!t.zero && t.v < 1) fail(errc::invalid_argument, "log argument is not 1 mod p");
    padic acc = p_zero();
    padic tk = from_int(C, 1);
    long K = C.nu + ilog(C.p, C.nu + 1) + 3;
    for (long k = 1; k <= K; ++k) {
        tk = p_mul(C, tk, t);
        acc = p_add(C, acc, divide_exact(C, tk, k));
    }
    return p_neg(C, acc);
}

padic iwasawa_log(const context& C, const padic& u) {
    if (u.zero || u.v != 0) fail(errc::non_unit, "Iwasawa log needs a unit");
    padic w = teichmuller(C, u);
    return log_one_plus(C, p_mul(C, u, unit_inverse(C, w)));
}

} // namespace dwork
