#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lowdisc/contfrac.hpp"
#include "lowdisc/diophantine.hpp"
#include "lowdisc/enclosure.hpp"
#include "lowdisc/realspec.hpp"

namespace lowdisc {

/// Finite point set in the unit square. Coordinates are exact rationals;
/// sets built by davenport_set carry dyadic x-coordinates rounded from
/// certified enclosures, with per-coordinate absolute error <= coord_error
/// (zero for exactly constructed sets).
struct PointSet2D {
    std::vector<std::pair<Rational, Rational>> points;
    unsigned long n_generator = 0;
    std::optional<RealSpec> provenance;
    Rational coord_error = Rational(0);

    size_t size() const { return points.size(); }
};

/// The symmetrized set {({+-k alpha}, k/n) : 1 <= k <= n} of 2n points.
/// Requires irrational alpha. Stored x-coordinates are dyadics on the
/// 2^-g grid, g = max(bits, 60), so each carries error <= 2^-g; the pair
/// at height k/n satisfies x+ + x- = 1 exactly.
PointSet2D davenport_set(unsigned long n, const RealSpec& spec, long bits = 60);

/// Exact evaluation of the integral of (S(x,y) - N x y)^2 over the unit
/// square via the pairwise identity
///   sum_{k,l} (1-max(x_k,x_l))(1-max(y_k,y_l))
///   - (N/2) sum_k (1-x_k^2)(1-y_k^2) + N^2/9,
/// computed in exact rational arithmetic over the stored coordinates.
/// Rectangles are half-open [0,x) x [0,y): a point with a coordinate equal
/// to 1 is never counted, which the identity reflects automatically.
/// The output enclosure folds in the 2 N^2 coord_error perturbation budget.
Enclosure l2sq_exact(const PointSet2D& set);

/// The exact rational value of the pairwise formula over the stored
/// coordinates (the center of l2sq_exact before error folding).
Rational l2sq_formula_value(const PointSet2D& set);

/// sum_{m=1}^n 1/(4 pi^4 m^2 ||m alpha||^2), width <= eps. Zero at n = 0.
Enclosure main_term(const RealSpec& spec, unsigned long n, const Rational& eps);

/// (1/360) sum_{k=1}^l a_k^2 with l = locate_index(table, n).
Rational quotient_sq_term(const CFExpansion& cf, const ConvergentTable& table, const Int& n);

/// Ordinary least squares through (x, y) pairs; >= 3 points with
/// non-degenerate abscissae required.
struct SlopeFit {
    double slope;
    double intercept;
    double max_abs_residual;
};
SlopeFit slope_fit(const std::vector<std::pair<double, double>>& pairs);

/// CSV serialization: header "x,y", 18 significant digits per coordinate.
std::string point_set_csv(const PointSet2D& set);

struct DiscrepancyReport {
    unsigned long n = 0;
    std::optional<Enclosure> l2sq;
    std::optional<Enclosure> main_term;   // the Diophantine predictor
    std::optional<Rational> cor4_term;    // the quotient-square predictor
    std::optional<Enclosure> c_log_n;     // c(alpha) log n when c is known
    std::optional<Enclosure> residual_main;
    std::optional<Enclosure> residual_cor4;
    std::optional<Enclosure> residual_c_log_n;
};

/// Assembles the side-by-side report. Methods: exact (pairwise l2sq),
/// main (Diophantine sum), cor4 (quotient squares); any subset.
DiscrepancyReport disc_report(const RealSpec& spec, unsigned long n,
                              bool want_exact, bool want_main, bool want_cor4,
                              const Rational& eps, long bits = 60);

} // namespace lowdisc
