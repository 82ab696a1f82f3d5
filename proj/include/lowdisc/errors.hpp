#pragma once

#include <stdexcept>
#include <string>

namespace lowdisc {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Precondition violations: bad arguments, values outside an operation's
/// stated domain. The CLI maps these to exit code 3.
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

/// m*alpha is an exact integer, so 1/||m*alpha|| has a pole.
struct zero_norm_error : domain_error {
    explicit zero_norm_error(const std::string& msg) : domain_error(msg) {}
};

/// A summation range touches a pole of the summand (rational alpha only).
struct pole_in_range_error : domain_error {
    explicit pole_in_range_error(const std::string& msg) : domain_error(msg) {}
};

/// A convergent table is too short for the requested query.
struct needs_more_terms_error : domain_error {
    long terms_available;
    needs_more_terms_error(const std::string& msg, long available)
        : domain_error(msg), terms_available(available) {}
};

/// The number description cannot be refined to the requested width
/// (finite quotient list exhausted, or the precision cap was hit).
struct precision_exhausted_error : error {
    long index_reached;
    precision_exhausted_error(const std::string& msg, long index)
        : error(msg), index_reached(index) {}
};

/// Argument outside a hard-coded support table (zeta exponents,
/// Bernoulli degree cap, named constants).
struct unsupported_error : domain_error {
    explicit unsupported_error(const std::string& msg) : domain_error(msg) {}
};

struct unknown_constant_error : domain_error {
    explicit unknown_constant_error(const std::string& msg) : domain_error(msg) {}
};

} // namespace lowdisc
