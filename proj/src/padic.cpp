#include "dwork/padic.hpp"

#include <sstream>

namespace dwork {

namespace {

long sat_add(long a, long b) {
    if (a >= aprec_inf || b >= aprec_inf) return aprec_inf;
    long s = a + b;
    return s >= aprec_inf ? aprec_inf : s;
}

long sat_mul(long a, long e) {
    if (a >= aprec_inf / (e > 0 ? e : 1)) return aprec_inf;
    return a * e;
}

} // namespace

bool is_prime(long p) {
    if (p < 2) return false;
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

long ilog(long base, long x) {
    long r = 0;
    for (long y = x; y >= base; y /= base) ++r;
    return r;
}

context::context(long p, long nu) : p(p), nu(nu) {
    if (!is_prime(p) || p < 3) fail(errc::invalid_prime, "p must be an odd prime, got " + std::to_string(p));
    if (nu < 1) fail(errc::invalid_precision, "precision must be >= 1, got " + std::to_string(nu));
    pows_.emplace_back(1);
}

const mpz_class& context::pk(long k) const {
    if (k < 0) fail(errc::internal_consistency, "negative power of p requested");
    while ((long)pows_.size() <= k) pows_.push_back(pows_.back() * p);
    return pows_[k];
}

context ctx_new(long p, long n, long guard) {
    if (guard < 0) fail(errc::invalid_precision, "guard must be >= 0");
    return context(p, n + guard);
}

padic p_zero() { return padic{}; }

padic p_zero_mod(long aprec) {
    padic z;
    z.az = aprec >= aprec_inf ? aprec_inf : aprec;
    return z;
}

// Normalize p^v * w. For exact w (aprec_inf) the valuation is stripped first;
// for bounded precision w is only known mod p^(aprec - v), so reduce first to
// detect a value that is zero at that precision.
static padic norm(const context& C, long v, mpz_class w, long aprec) {
    padic r;
    mpz_class pz(C.p);
    if (aprec >= aprec_inf) {
        if (w == 0) return p_zero();
        long e = mpz_remove(w.get_mpz_t(), w.get_mpz_t(), pz.get_mpz_t());
        r.zero = false;
        r.v = v + e;
        r.k = C.nu;
        mpz_mod(w.get_mpz_t(), w.get_mpz_t(), C.pk(C.nu).get_mpz_t());
        r.u = std::move(w);
        r.az = 0;
        return r;
    }
    long room = aprec - v;
    if (room <= 0) return p_zero_mod(aprec);
    mpz_mod(w.get_mpz_t(), w.get_mpz_t(), C.pk(room).get_mpz_t());
    if (w == 0) return p_zero_mod(aprec);
    long e = mpz_remove(w.get_mpz_t(), w.get_mpz_t(), pz.get_mpz_t());
    r.zero = false;
    r.v = v + e;
    r.k = std::min(room - e, C.nu);
    mpz_mod(w.get_mpz_t(), w.get_mpz_t(), C.pk(r.k).get_mpz_t());
    r.u = std::move(w);
    r.az = 0;
    return r;
}

padic from_int(const context& C, const mpz_class& x) {
    if (x == 0) return p_zero();
    return norm(C, 0, x, aprec_inf);
}

padic from_int(const context& C, long x) { return from_int(C, mpz_class(x)); }

padic from_frac(const context& C, const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(errc::invalid_argument, "zero denominator");
    if (num == 0) return p_zero();
    mpz_class n = num, d = den, pz(C.p);
    long vn = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
    long vd = mpz_remove(d.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
    padic r;
    r.zero = false;
    r.v = vn - vd;
    r.k = C.nu;
    mpz_class di;
    if (mpz_invert(di.get_mpz_t(), d.get_mpz_t(), C.pk(C.nu).get_mpz_t()) == 0)
        fail(errc::internal_consistency, "denominator not invertible");
    r.u = n * di;
    mpz_mod(r.u.get_mpz_t(), r.u.get_mpz_t(), C.pk(C.nu).get_mpz_t());
    r.az = 0;
    return r;
}

padic from_frac(const context& C, long num, long den) {
    return from_frac(C, mpz_class(num), mpz_class(den));
}

padic truncate_abs(const context& C, const padic& x, long aprec) {
    if (aprec >= x.aprec()) return x;
    if (x.zero) return p_zero_mod(aprec);
    if (aprec <= x.v) return p_zero_mod(aprec);
    padic r = x;
    r.k = aprec - x.v;
    mpz_mod(r.u.get_mpz_t(), r.u.get_mpz_t(), C.pk(r.k).get_mpz_t());
    if (r.u == 0) fail(errc::internal_consistency, "unit residue vanished in truncation");
    return r;
}

padic p_add(const context& C, const padic& x, const padic& y) {
    long a = std::min(x.aprec(), y.aprec());
    if (x.zero) return truncate_abs(C, y, a);
    if (y.zero) return truncate_abs(C, x, a);
    long vm = std::min(x.v, y.v);
    mpz_class w = x.u * C.pk(x.v - vm) + y.u * C.pk(y.v - vm);
    return norm(C, vm, std::move(w), a);
}

padic p_neg(const context& C, const padic& x) {
    if (x.zero) return x;
    padic r = x;
    r.u = C.pk(x.k) - x.u;
    return r;
}

padic p_sub(const context& C, const padic& x, const padic& y) {
    return p_add(C, x, p_neg(C, y));
}

padic p_mul(const context& C, const padic& x, const padic& y) {
    if (x.zero || y.zero) {
        if (x.exact_zero() || y.exact_zero()) return p_zero();
        long ax = x.zero ? x.az : x.v;
        long ay = y.zero ? y.az : y.v;
        return p_zero_mod(sat_add(ax, ay));
    }
    padic r;
    r.zero = false;
    r.v = x.v + y.v;
    r.k = std::min(x.k, y.k);
    r.u = x.u * y.u;
    mpz_mod(r.u.get_mpz_t(), r.u.get_mpz_t(), C.pk(r.k).get_mpz_t());
    r.az = 0;
    return r;
}

padic unit_inverse(const context& C, const padic& x) {
    if (x.zero || x.v != 0) fail(errc::non_unit, "inverse requires a unit");
    padic r = x;
    if (mpz_invert(r.u.get_mpz_t(), x.u.get_mpz_t(), C.pk(x.k).get_mpz_t()) == 0)
        fail(errc::internal_consistency, "unit residue not invertible");
    return r;
}

padic divide_exact(const context& C, const padic& x, const padic& w) {
    if (w.zero) fail(errc::non_unit, "division by zero");
    if (x.zero) {
        if (x.exact_zero()) return x;
        return p_zero_mod(x.az - w.v);
    }
    padic r;
    r.zero = false;
    r.v = x.v - w.v;
    r.k = std::min(x.k, w.k);
    mpz_class wi;
    mpz_invert(wi.get_mpz_t(), w.u.get_mpz_t(), C.pk(r.k).get_mpz_t());
    r.u = x.u * wi;
    mpz_mod(r.u.get_mpz_t(), r.u.get_mpz_t(), C.pk(r.k).get_mpz_t());
    r.az = 0;
    return r;
}

padic divide_exact(const context& C, const padic& x, long w) {
    if (w == 0) fail(errc::non_unit, "division by zero");
    return divide_exact(C, x, from_int(C, w));
}

padic pow_int(const context& C, const padic& x, long e) {
    if (e == 0) return from_int(C, 1);
    if (x.zero) {
        if (e < 0) fail(errc::invalid_exponent, "negative power of zero");
        if (x.exact_zero()) return x;
        return p_zero_mod(sat_mul(x.az, e));
    }
    padic b = x;
    if (e < 0) {
        b = divide_exact(C, from_int(C, 1), x);
        e = -e;
    }
    padic r;
    r.zero = false;
    r.v = b.v * e;
    r.k = b.k;
    mpz_powm_ui(r.u.get_mpz_t(), b.u.get_mpz_t(), (unsigned long)e, C.pk(b.k).get_mpz_t());
    r.az = 0;
    return r;
}

mpz_class residue(const context& C, const padic& x, long n) {
    if (n < 0) fail(errc::invalid_precision, "negative modulus exponent");
    if (n == 0) return 0;
    if (x.aprec() < n)
        fail(errc::internal_consistency,
             "precision shortfall: have " + std::to_string(x.aprec()) + ", need " + std::to_string(n));
    if (x.zero) return 0;
    if (x.v < 0) fail(errc::internal_consistency, "negative valuation in residue");
    if (x.v >= n) return 0;
    mpz_class r = x.u * C.pk(x.v);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), C.pk(n).get_mpz_t());
    return r;
}

bool is_zero_mod(const context&, const padic& x, long n) {
    if (x.zero) {
        if (x.az < n)
            fail(errc::internal_consistency,
                 "precision shortfall: zero known mod p^" + std::to_string(x.az) +
                     ", asked mod p^" + std::to_string(n));
        return true;
    }
    return x.v >= n;
}

std::string to_string(const context& C, const padic& x) {
    std::ostringstream os;
    if (x.zero) {
        os << "O(p^" << (x.exact_zero() ? std::string("inf") : std::to_string(x.az)) << ")";
    } else {
        os << x.u.get_str() << "*p^" << x.v << " + O(p^" << x.aprec() << ")";
    }
    (void)C;
    return os.str();
}

} // namespace dwork
