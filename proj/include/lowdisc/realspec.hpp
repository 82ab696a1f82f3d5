#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lowdisc/rational.hpp"

namespace lowdisc {

/// Exact rational value a/b (stored canonical, so a, b are coprime).
struct RationalValue {
    Rational value;
};

/// (P + sqrt(D)) / Q with integer P, Q != 0 and D >= 2 a non-square.
/// Always irrational.
struct QuadraticSurd {
    Int p;
    Int d;
    Int q;
};

/// Euler's number e.
struct EulerE {};

/// A real number known only through a continued fraction prefix
/// [a0; tail...]. The prefix pins the value to the interval between the
/// last two convergents; asking for more precision than that interval
/// provides is a precision_exhausted error.
struct ExplicitCF {
    Int a0;
    std::vector<Int> tail; // all entries >= 1
};

/// Symbolic description of the real number alpha.
using RealSpec = std::variant<RationalValue, QuadraticSurd, EulerE, ExplicitCF>;

/// Throws domain_error if the spec violates its invariants
/// (D non-square >= 2, Q != 0, tail entries >= 1).
void validate(const RealSpec& spec);

inline bool is_rational(const RealSpec& spec) {
    return std::holds_alternative<RationalValue>(spec);
}

RealSpec make_rational(const Rational& r);
RealSpec make_surd(const Int& p, const Int& d, const Int& q);

inline RealSpec sqrt2_spec() { return make_surd(0, 2, 1); }
inline RealSpec sqrt3_spec() { return make_surd(0, 3, 1); }
inline RealSpec phi_spec()   { return make_surd(1, 5, 2); }
inline RealSpec e_spec()     { return EulerE{}; }

std::string describe(const RealSpec& spec);

} // namespace lowdisc
