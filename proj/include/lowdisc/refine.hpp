#pragma once

#include "lowdisc/enclosure.hpp"
#include "lowdisc/realspec.hpp"

namespace lowdisc {

/// Global cap on refinement precision (bits). Default 4096; the CLI sets
/// this from LOWDISC_MAX_BITS. Escalation loops that would exceed the cap
/// throw precision_exhausted_error.
long precision_limit();
void set_precision_limit(long bits);

/// Certified enclosure of the real value described by `spec`, of width
/// <= 2^-bits. Rationals come back as point intervals; quadratic surds are
/// bracketed by consecutive convergents of their own continued fraction
/// (which alternate around the value); e uses the factorial series with
/// its tail bound. Enclosures at higher `bits` are nested inside those at
/// lower `bits`.
Enclosure refine(const RealSpec& spec, long bits);

} // namespace lowdisc
