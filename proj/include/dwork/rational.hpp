#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "dwork/errors.hpp"
#include "dwork/padic.hpp"

namespace dwork {

// Reduced fraction with positive denominator.
struct rat {
    mpz_class num;
    mpz_class den;

    bool operator==(const rat& o) const { return num == o.num && den == o.den; }
};

rat rat_make(mpz_class num, mpz_class den);
rat rat_of(long num, long den = 1);
rat rat_parse(const std::string& s); // "r/N" or plain integer
rat rat_add(const rat& a, const rat& b);
rat rat_sub(const rat& a, const rat& b);
rat rat_neg(const rat& a);
bool rat_is_integer(const rat& a);
std::string rat_str(const rat& a);

padic rat_padic(const context& C, const rat& a);

// Hypergeometric parameter: a rational in (0, 1] whose denominator is prime to p.
void validate_param(const rat& a, long p);

// The unique a' = (a + k)/p with k in [0, p-1] and a + k = 0 mod p.
rat dwork_prime(const rat& a, long p);

// Iterated parameter pairs until the first pair recurs.
std::vector<std::pair<rat, rat>> param_orbit(const rat& a, const rat& b, long p);
long orbit_length(const rat& a, const rat& b, long p);

} // namespace dwork
