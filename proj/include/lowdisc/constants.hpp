#pragma once

#include "lowdisc/enclosure.hpp"

namespace lowdisc {

/// Enclosure of pi with width <= 2^-bits. Evaluated by a Machin arctangent
/// combination whose alternating-series remainder gives the certificate.
/// Cached per precision; the cache is thread-safe (mutex on first fill).
Enclosure pi_enclosure(long bits);

/// Enclosure of ln 2 with width <= 2^-bits (cached like pi).
Enclosure ln2_enclosure(long bits);

/// Enclosure of ln x for exact rational x > 0, width <= 2^-bits.
Enclosure log_enclosure(const Rational& x, long bits);

/// ln over an interval with positive lower endpoint (monotone extension).
Enclosure log_enclosure(const Enclosure& x, long bits);

/// n-th root of x >= 0 with width <= 2^-bits, certified by integer root
/// extraction on scaled numerators.
Enclosure nth_root(const Rational& x, unsigned long n, long bits);
Enclosure nth_root(const Enclosure& x, unsigned long n, long bits);

inline Enclosure sqrt_enclosure(const Rational& x, long bits) { return nth_root(x, 2, bits); }

/// base^e for rational exponent e and base > 0 (width <= 2^-bits roughly;
/// exact when e is an integer).
Enclosure pow_rational(const Rational& base, const Rational& e, long bits);
Enclosure pow_rational(const Enclosure& base, const Rational& e, long bits);

/// zeta(two_p) = coefficient * pi^two_p for two_p in {2, 4, 6, 8}.
/// The enclosure has width <= 2^-64. Other arguments are rejected
/// (use zeta_real for general exponents).
struct ZetaEven {
    Rational coefficient;
    Enclosure value;
};
ZetaEven zeta_even(int two_p);

/// zeta(s) for rational s >= 3/2 with width <= eps, via partial sum plus
/// the integral tail bound sum_{k>K} k^-s <= K^(1-s)/(s-1).
Enclosure zeta_real(const Rational& s, const Rational& eps);

/// zeta(2p) routed to the exact-coefficient table when 2p in {2,4,6,8},
/// zeta_real otherwise.
Enclosure zeta_2p(const Rational& p, const Rational& eps);

} // namespace lowdisc
