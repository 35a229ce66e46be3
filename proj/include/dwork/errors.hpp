#pragma once

#include <stdexcept>
#include <string>

namespace dwork {

// Failure taxonomy. Exit-code mapping (used by the CLI):
//   invalid input -> 2, condition violated -> 3,
//   internal consistency -> 4, budget exceeded -> 5.
enum class errc {
    invalid_prime,
    invalid_precision,
    invalid_parameter,
    invalid_argument,
    invalid_exponent,
    invalid_twist,
    invalid_point,
    invalid_order,
    non_unit,
    non_invertible_series,
    out_of_domain,
    condition_violated,
    degenerate_matrix,
    degenerate_eigenvector,
    internal_consistency,
    budget_exceeded,
};

const char* errc_name(errc c);
int errc_exit_code(errc c);

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& msg);
};

[[noreturn]] void fail(errc c, const std::string& msg);

} // namespace dwork
