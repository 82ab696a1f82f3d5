#pragma once

#include <string_view>

#include "lowdisc/realspec.hpp"

namespace lowdisc {

/// Parses the CLI alpha grammar:
///   "a/b"               exact rational (plain integers allowed)
///   "surd:P,D,Q"        (P + sqrt(D)) / Q
///   "sqrt2"|"sqrt3"|"phi"|"e"
///   "cf:[a0;a1,a2,...]" explicit continued fraction prefix
/// Throws domain_error with the grammar echoed on failure.
RealSpec parse_alpha(std::string_view text);

} // namespace lowdisc
