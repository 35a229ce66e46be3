#include "dwork/rational.hpp"

namespace dwork {

rat rat_make(mpz_class num, mpz_class den) {
    if (den == 0) fail(errc::invalid_parameter, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return rat{std::move(num), std::move(den)};
}

rat rat_of(long num, long den) { return rat_make(mpz_class(num), mpz_class(den)); }

rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rat_make(mpz_class(s), 1);
        return rat_make(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        fail(errc::invalid_parameter, "cannot parse fraction '" + s + "'");
    }
}

rat rat_add(const rat& a, const rat& b) { return rat_make(a.num * b.den + b.num * a.den, a.den * b.den); }
rat rat_sub(const rat& a, const rat& b) { return rat_make(a.num * b.den - b.num * a.den, a.den * b.den); }
rat rat_neg(const rat& a) { return rat{-a.num, a.den}; }
bool rat_is_integer(const rat& a) { return a.den == 1; }

std::string rat_str(const rat& a) {
    if (a.den == 1) return a.num.get_str();
    return a.num.get_str() + "/" + a.den.get_str();
}

padic rat_padic(const context& C, const rat& a) { return from_frac(C, a.num, a.den); }

void validate_param(const rat& a, long p) {
    if (a.num <= 0 || a.num > a.den)
        fail(errc::invalid_parameter, "parameter " + rat_str(a) + " must lie in (0, 1]");
    if (mpz_divisible_ui_p(a.den.get_mpz_t(), (unsigned long)p))
        fail(errc::invalid_parameter, "parameter denominator divisible by p");
}

rat dwork_prime(const rat& a, long p) {
    if (mpz_divisible_ui_p(a.den.get_mpz_t(), (unsigned long)p))
        fail(errc::invalid_parameter, "parameter denominator divisible by p");
    // k = -num/den mod p
    mpz_class pd(p), di;
    mpz_invert(di.get_mpz_t(), a.den.get_mpz_t(), pd.get_mpz_t());
    mpz_class k = (-a.num * di) % pd;
    if (k < 0) k += pd;
    mpz_class num = a.num + k * a.den;
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), (unsigned long)p);
    return rat_make(std::move(num), a.den);
}

std::vector<std::pair<rat, rat>> param_orbit(const rat& a, const rat& b, long p) {
    std::vector<std::pair<rat, rat>> orb{{a, b}};
    for (;;) {
        const auto& last = orb.back();
        auto next = std::make_pair(dwork_prime(last.first, p), dwork_prime(last.second, p));
        if (next == orb.front()) return orb;
        orb.push_back(std::move(next));
        if (orb.size() > 100000) fail(errc::internal_consistency, "parameter orbit does not close");
    }
}

long orbit_length(const rat& a, const rat& b, long p) { return (long)param_orbit(a, b, p).size(); }

} // namespace dwork
