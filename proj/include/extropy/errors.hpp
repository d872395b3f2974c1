#pragma once

#include <stdexcept>
#include <string>

namespace extropy {

enum class ErrorKind {
    invalid_parameter,
    out_of_support,
    degenerate_denominator,
    divergent_integral,
    invalid_index,
    diverged,
    not_converged,
    unbounded_support,
    too_few_observations,
    negative_value,
    non_finite_value,
    invalid_level,
    empty_grid,
    zero_denominator,
    domain_error,
    evaluation_failed,
    io_error,
    invalid_config,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_parameter: return "InvalidParameter";
        case ErrorKind::out_of_support: return "OutOfSupport";
        case ErrorKind::degenerate_denominator: return "DegenerateDenominator";
        case ErrorKind::divergent_integral: return "DivergentIntegral";
        case ErrorKind::invalid_index: return "InvalidIndex";
        case ErrorKind::diverged: return "Diverged";
        case ErrorKind::not_converged: return "NotConverged";
        case ErrorKind::unbounded_support: return "UnboundedSupport";
        case ErrorKind::too_few_observations: return "TooFewObservations";
        case ErrorKind::negative_value: return "NegativeValue";
        case ErrorKind::non_finite_value: return "NonFiniteValue";
        case ErrorKind::invalid_level: return "InvalidLevel";
        case ErrorKind::empty_grid: return "EmptyGrid";
        case ErrorKind::zero_denominator: return "ZeroDenominator";
        case ErrorKind::domain_error: return "DomainError";
        case ErrorKind::evaluation_failed: return "EvaluationFailed";
        case ErrorKind::io_error: return "IoError";
        case ErrorKind::invalid_config: return "InvalidConfig";
    }
    return "UnknownError";
}

/// Domain error carrying a machine-dispatchable kind next to the message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Non-fatal computation notes attached to measure results.
enum class Warning {
    signed_weight,   // weight takes negative values on the integration domain
    sign_erratum,    // customary closed form for this case is printed as a magnitude
};

inline const char* to_string(Warning w) {
    switch (w) {
        case Warning::signed_weight: return "signed-weight";
        case Warning::sign_erratum: return "sign-erratum";
    }
    return "unknown-warning";
}

}  // namespace extropy
