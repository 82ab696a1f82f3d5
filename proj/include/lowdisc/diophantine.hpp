#pragma once

#include <vector>

#include "lowdisc/contfrac.hpp"
#include "lowdisc/enclosure.hpp"
#include "lowdisc/realspec.hpp"

namespace lowdisc {

/// Distance of m*alpha from the nearest integer.
struct NormValue {
    Int m;
    Enclosure value; // point interval when exact
    bool exact;
};

/// ||m*alpha|| as a certified value. For rational alpha = a/b the result is
/// the exact rational min(r, b-r)/b with r = (m a) mod b; b | m is a pole
/// (zero_norm_error). For irrational alpha the enclosure has relative width
/// <= eps, obtained by refining alpha until the nearest integer to m*alpha
/// is unambiguous.
NormValue norm_dist(const RealSpec& spec, const Int& m, const Rational& eps);

/// sum_{m=1}^{n} 1/(m^p ||m alpha||^p).
struct SumResult {
    Enclosure value;
    unsigned long n;
    Rational p;
    unsigned long term_count;
};

/// Certified evaluation of the power sum above, total width <= eps.
/// Rational alpha with integer p >= 2 takes the exact path (point result,
/// requires n < b); otherwise p >= 3/2 and the sum is accumulated as a
/// dyadic interval from a single high-precision enclosure of alpha, chosen
/// fine enough that every nearest-integer decision for m <= n is
/// unambiguous.
SumResult dsum(const RealSpec& spec, const Rational& p, unsigned long n, const Rational& eps);

/// Exact rational value of the sum for alpha = a/b, integer p >= 2, n < b.
Rational dsum_exact_rational(const Int& a, const Int& b, long p, unsigned long n);

/// sum_{m=1}^{n} 1/||m alpha||^p for integer p >= 1 (no m^p factor),
/// certified; exact for rational alpha (requires n < b).
Enclosure norm_power_sum(const RealSpec& spec, long p, unsigned long n, const Rational& eps);

/// The sum over one denominator block q_l <= m < q_{l+1}, split across
/// index classes of m mod q_l:
///   C: multiples of q_l (the main contributors),
///   B: m = a q_l + q_{l-1} (with q_0 = 0),
///   A: everything else.
/// For q_l = 1 every residue condition degenerates; C then absorbs the
/// whole block and A, B are empty.
struct BlockDecomposition {
    size_t ell;
    Int a_ell;
    Enclosure total;             // = part_a + part_b + part_c
    Enclosure part_a, part_b, part_c;
    std::vector<long long> members_b, members_c;
    Enclosure dev_from_main;     // |total - zeta(2p) a_l^p|
};

BlockDecomposition block_sum(const RealSpec& spec, long p, size_t ell);

/// Estimate of dsum(q_l - 1)^(1/p) from the partial quotients:
///   main = (zeta(2p) * sum_{0<k<l} a_k^p)^(1/p),
/// with the guaranteed additive bound 6^p * 4p^2/(p-1)^2 * l^(1/p)
/// on |dsum^(1/p) - main|.
struct QuotientEstimate {
    Enclosure main;
    Enclosure additive_bound;
};

QuotientEstimate quotient_estimate(const CFExpansion& cf, const Rational& p, size_t ell);

/// The three quadratic irrationals whose logarithmic growth constant
///   sum_{m<=n} 1/(4 pi^4 m^2 ||m alpha||^2) = c(alpha) log n + O(1)
/// ships in closed form.
enum class BeckName { sqrt2, sqrt3, phi };

BeckName beck_name_from_string(const std::string& name);
RealSpec beck_spec(BeckName name);

/// Closed-form c(alpha), enclosure width <= 1e-9:
///   c(sqrt2) = 1/(24 sqrt2 log(1+sqrt2)),
///   c(sqrt3) = 1/(12 sqrt3 log(2+sqrt3)),
///   c(phi)   = 1/(30 sqrt5 log phi).
Enclosure beck_constant(BeckName name);

/// The bounded deviation (1/(4 pi^4)) dsum(alpha, 2, n) - c(alpha) log n
/// (log n taken as 0 at n = 1), enclosure width <= eps.
Enclosure beck_deviation(BeckName name, unsigned long n, const Rational& eps);

} // namespace lowdisc
