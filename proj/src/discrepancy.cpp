#include "lowdisc/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "lowdisc/constants.hpp"
#include "lowdisc/refine.hpp"

namespace lowdisc {

namespace {

long bitlen(const Int& x) { return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)); }

} // namespace

PointSet2D davenport_set(unsigned long n, const RealSpec& spec, long bits) {
    validate(spec);
    if (n < 1) throw domain_error("davenport_set: n must be positive");
    if (is_rational(spec))
        throw domain_error("davenport_set: alpha must be irrational (got " + describe(spec) + ")");
    long g = std::max<long>(bits, 60);
    // alpha precision: fine enough that floor(k alpha) is unambiguous for
    // all k <= n, and that k*width stays two bits under the grid
    CFExpansion cf = cf_expand_until_q_exceeds(spec, Int(n));
    ConvergentTable table = convergent_table(cf);
    size_t l = locate_index(table, Int(n));
    Int guard = table.q(l + 1);
    guard *= 8 * n;
    long alpha_bits = std::max<long>(g + bitlen(Int(n)) + 3, bitlen(guard) + 1);

    PointSet2D set;
    set.n_generator = n;
    set.provenance = spec;
    set.coord_error = pow2(-g);
    set.points.reserve(2 * n);
    for (;;) {
        if (alpha_bits > precision_limit())
            throw precision_exhausted_error("davenport_set: precision limit reached", alpha_bits);
        Enclosure alpha = refine(spec, alpha_bits);
        set.points.clear();
        bool ok = true;
        Int scale = 1;
        scale <<= static_cast<unsigned long>(g);
        for (unsigned long k = 1; k <= n && ok; ++k) {
            Enclosure t = alpha * Rational(Int(k));
            Int f_lo = t.lo().floor(), f_hi = t.hi().floor();
            if (f_lo != f_hi) { ok = false; break; }
            Enclosure frac = t - Rational(f_lo);
            // nearest grid point to the midpoint
            Rational mid = frac.mid();
            Int xi = (mid * Rational(scale)).round();
            if (xi < 0) xi = 0;
            if (xi > scale) xi = scale;
            Rational x_plus(xi, scale);
            set.points.emplace_back(x_plus, Rational(Int(k), Int(n)));
            set.points.emplace_back(Rational(1) - x_plus, Rational(Int(k), Int(n)));
        }
        if (ok) break;
        alpha_bits *= 2;
    }
    return set;
}

namespace {

// Pairwise sum with a shared-denominator integer kernel when everything
// fits in 128-bit products, otherwise plain mpz. Both are exact.
Rational pairwise_value(const PointSet2D& set) {
    const size_t N = set.size();
    if (N == 0) return Rational(0);
    Int dx(1), dy(1);
    for (const auto& [x, y] : set.points) {
        mpz_lcm(dx.get_mpz_t(), dx.get_mpz_t(), x.denominator().get_mpz_t());
        mpz_lcm(dy.get_mpz_t(), dy.get_mpz_t(), y.denominator().get_mpz_t());
    }
    Rational pair_sum(0);
    long nb = static_cast<long>(std::bit_width(N));
    if (bitlen(dx) <= 62 && bitlen(dy) <= 62 && bitlen(dx) + bitlen(dy) + 2 * nb <= 124) {
        // u_k = dx - x_k dx, v_k = dy - y_k dy; term = min(u) * min(v)
        std::vector<unsigned long> u(N), v(N);
        for (size_t k = 0; k < N; ++k) {
            const auto& [x, y] = set.points[k];
            u[k] = mpz_get_ui(Int(dx - x.numerator() * (dx / x.denominator())).get_mpz_t());
            v[k] = mpz_get_ui(Int(dy - y.numerator() * (dy / y.denominator())).get_mpz_t());
        }
        unsigned __int128 acc = 0;
        for (size_t k = 0; k < N; ++k) {
            unsigned long uk = u[k], vk = v[k];
            for (size_t l = k + 1; l < N; ++l) {
                unsigned long um = std::min(uk, u[l]);
                unsigned long vm = std::min(vk, v[l]);
                acc += static_cast<unsigned __int128>(um) * vm;
            }
        }
        acc *= 2;
        for (size_t k = 0; k < N; ++k)
            acc += static_cast<unsigned __int128>(u[k]) * v[k];
        // acc / (dx dy)
        Int acc_z;
        {
            unsigned long hi = static_cast<unsigned long>(acc >> 64);
            unsigned long lo = static_cast<unsigned long>(acc);
            acc_z = Int(hi);
            acc_z <<= 64;
            acc_z += lo;
        }
        pair_sum = Rational(acc_z, dx * dy);
    } else {
        std::vector<Int> u(N), v(N);
        for (size_t k = 0; k < N; ++k) {
            u[k] = dx - set.points[k].first.numerator() * (dx / set.points[k].first.denominator());
            v[k] = dy - set.points[k].second.numerator() * (dy / set.points[k].second.denominator());
        }
        Int acc(0);
        for (size_t k = 0; k < N; ++k)
            for (size_t l = k; l < N; ++l) {
                Int term = (u[k] < u[l] ? u[k] : u[l]) * (v[k] < v[l] ? v[k] : v[l]);
                acc += (l == k) ? term : Int(2 * term);
            }
        pair_sum = Rational(acc, dx * dy);
    }
    // -(N/2) sum_k (1 - x^2)(1 - y^2)
    Rational second(0);
    for (const auto& [x, y] : set.points)
        second += (Rational(1) - x * x) * (Rational(1) - y * y);
    Rational nN{Int(N)};
    return pair_sum - nN / Rational(2) * second + nN * nN / Rational(9);
}

} // namespace

Rational l2sq_formula_value(const PointSet2D& set) { return pairwise_value(set); }

Enclosure l2sq_exact(const PointSet2D& set) {
    Rational v = pairwise_value(set);
    if (set.coord_error.is_zero()) return Enclosure(v);
    Rational nN{Int(set.size())};
    Rational budget = Rational(2) * nN * nN * set.coord_error;
    Rational lo = v - budget;
    if (lo.sign() < 0) lo = Rational(0); // the integral is nonnegative
    return Enclosure(lo, v + budget);
}

Enclosure main_term(const RealSpec& spec, unsigned long n, const Rational& eps) {
    if (is_rational(spec))
        throw domain_error("main_term: alpha must be irrational");
    if (eps.sign() <= 0) throw domain_error("main_term: eps must be positive");
    if (n == 0) return Enclosure(Rational(0));
    SumResult s = dsum(spec, Rational(2), n, eps * Rational(380));
    Enclosure pi4 = pi_enclosure(96).pow(4) * Rational(4);
    return s.value / pi4;
}

Rational quotient_sq_term(const CFExpansion& cf, const ConvergentTable& table, const Int& n) {
    size_t l = locate_index(table, n);
    Int s(0);
    for (size_t k = 1; k <= l; ++k) s += cf.a(k) * cf.a(k);
    return Rational(s, 360);
}

SlopeFit slope_fit(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.size() < 3) throw domain_error("slope_fit: need at least 3 pairs");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(pairs.size());
    for (const auto& [x, y] : pairs) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double det = n * sxx - sx * sx;
    double span = sxx - sx * sx / n;
    if (!(span > 0))
        throw domain_error("slope_fit: degenerate abscissae (rank deficient)");
    SlopeFit f{};
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / n;
    f.max_abs_residual = 0;
    for (const auto& [x, y] : pairs)
        f.max_abs_residual = std::max(f.max_abs_residual,
                                      std::fabs(y - f.slope * x - f.intercept));
    return f;
}

std::string point_set_csv(const PointSet2D& set) {
    std::string out = "x,y\n";
    for (const auto& [x, y] : set.points)
        out += x.to_decimal(18) + "," + y.to_decimal(18) + "\n";
    return out;
}

namespace {

std::optional<BeckName> beck_name_of(const RealSpec& spec) {
    const auto* s = std::get_if<QuadraticSurd>(&spec);
    if (!s) return std::nullopt;
    if (s->p == 0 && s->d == 2 && s->q == 1) return BeckName::sqrt2;
    if (s->p == 0 && s->d == 3 && s->q == 1) return BeckName::sqrt3;
    if (s->p == 1 && s->d == 5 && s->q == 2) return BeckName::phi;
    return std::nullopt;
}

} // namespace

DiscrepancyReport disc_report(const RealSpec& spec, unsigned long n,
                              bool want_exact, bool want_main, bool want_cor4,
                              const Rational& eps, long bits) {
    DiscrepancyReport rep;
    rep.n = n;
    if (want_exact) rep.l2sq = l2sq_exact(davenport_set(n, spec, bits));
    if (want_main) rep.main_term = main_term(spec, n, eps);
    if (want_cor4) {
        CFExpansion cf = cf_expand_until_q_exceeds(spec, Int(n));
        ConvergentTable table = convergent_table(cf);
        rep.cor4_term = quotient_sq_term(cf, table, Int(n));
    }
    if (auto name = beck_name_of(spec)) {
        if (n >= 2) {
            Enclosure logn = log_enclosure(Rational(Int(n)), 80);
            rep.c_log_n = beck_constant(*name) * logn;
        } else if (n == 1) {
            rep.c_log_n = Enclosure(Rational(0));
        }
    }
    if (rep.l2sq && rep.main_term) rep.residual_main = *rep.l2sq - *rep.main_term;
    if (rep.l2sq && rep.cor4_term)
        rep.residual_cor4 = *rep.l2sq - Enclosure(*rep.cor4_term);
    if (rep.l2sq && rep.c_log_n) rep.residual_c_log_n = *rep.l2sq - *rep.c_log_n;
    return rep;
}

} // namespace lowdisc
