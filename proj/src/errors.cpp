#include "dwork/errors.hpp"

namespace dwork {

const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_prime: return "invalid-prime";
    case errc::invalid_precision: return "invalid-precision";
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::invalid_argument: return "invalid-argument";
    case errc::invalid_exponent: return "invalid-exponent";
    case errc::invalid_twist: return "invalid-twist";
    case errc::invalid_point: return "invalid-point";
    case errc::invalid_order: return "invalid-order";
    case errc::non_unit: return "non-unit";
    case errc::non_invertible_series: return "non-invertible-series";
    case errc::out_of_domain: return "out-of-domain";
    case errc::condition_violated: return "condition-violated";
    case errc::degenerate_matrix: return "degenerate-matrix";
    case errc::degenerate_eigenvector: return "degenerate-eigenvector";
    case errc::internal_consistency: return "internal-consistency";
    case errc::budget_exceeded: return "budget-exceeded";
    }
    return "unknown";
}

int errc_exit_code(errc c) {
    switch (c) {
    case errc::condition_violated:
        return 3;
    case errc::degenerate_matrix:
    case errc::degenerate_eigenvector:
    case errc::internal_consistency:
        return 4;
    case errc::budget_exceeded:
        return 5;
    default:
        return 2;
    }
}

error::error(errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}

void fail(errc c, const std::string& msg) { throw error(c, msg); }

} // namespace dwork
