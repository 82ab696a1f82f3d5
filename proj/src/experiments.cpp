#include "lowdisc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "lowdisc/constants.hpp"
#include "lowdisc/dedekind.hpp"
#include "lowdisc/diophantine.hpp"
#include "lowdisc/discrepancy.hpp"
#include "lowdisc/refine.hpp"

namespace lowdisc {

namespace {

// ------------------------------------------------------------ baselines
//
// Sweep statistics recorded on the first run of each sweep and asserted
// stable (+-10%) on every later run. The underlying claims are boundedness
// claims without explicit constants, so the recorded level is the contract.
constexpr double kResidualLevelPhi = 0.43399728403479826;   // thm1-equivalence max |residual|
constexpr double kResidualLevelSqrt2 = 0.43627670641270838; // thm1-equivalence max |residual|
constexpr double kBeckWidthPhi = 0.011095077868305653;         // beck-bounded max-min
constexpr double kBeckWidthSqrt2 = 0.018574904699778447;       // beck-bounded max-min

struct Csv {
    std::ostringstream out;
    void comment(const std::string& s) { out << "# " << s << "\n"; }
    void row(const std::string& s) { out << s << "\n"; }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct AlphaCase {
    std::string name;
    RealSpec spec;
};

std::vector<AlphaCase> alpha_grid() {
    return {{"phi", phi_spec()},
            {"sqrt2", sqrt2_spec()},
            {"sqrt3", sqrt3_spec()},
            {"e", e_spec()}};
}

// Deterministic PRNG (xorshift64*), so sweeps are identical across runs
// and platforms.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return s * 0x2545F4914F6CDD1Dull;
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// ------------------------------------------------- criterion 1: thm2-scan

ExperimentResult thm2_scan() {
    ExperimentResult res;
    res.name = "thm2-scan";
    Csv csv;
    csv.comment("spectral-defect scan: 0 < E < 5*2^p for coprime (a,b), 2<=b<=200, p in {2,4}");
    csv.row("a,b,p,E_lo,E_hi,bound,ok");
    long checked = 0;
    for (int p : {2, 4}) {
        for (long b = 2; b <= 200; ++b) {
            for (long a = 1; a < b; ++a) {
                if (std::gcd(a, b) != 1) continue;
                SpectralError e = spectral_error(a, b, static_cast<unsigned>(p));
                bool ok = e.value.lo() > Rational(0) && e.value.hi() < e.bound;
                if (!ok) ++res.violations;
                ++checked;
                csv.row(std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(p) +
                        "," + e.value.lo().to_decimal(17, -1) + "," +
                        e.value.hi().to_decimal(17, 1) + "," + e.bound.str() + "," +
                        (ok ? "1" : "0"));
            }
        }
    }
    // The k >= 1 variant must breach the lower bound at (1,2,2): the k = 0
    // term B_p(0)^2 is what the bound needs for even p.
    SpectralError probe = spectral_error(1, 2, 2);
    bool nok0_breaches = probe.value_without_k0.hi() < Rational(0);
    csv.comment("contrast: E without the k=0 term at (1,2,2) = " +
                probe.value_without_k0.str(9) + " (must be negative)");
    res.summary.push_back("pairs checked: " + std::to_string(checked) +
                          ", violations: " + std::to_string(res.violations));
    res.summary.push_back(std::string("k0-less variant breaches lower bound at (1,2,2): ") +
                          (nok0_breaches ? "yes" : "NO"));
    res.pass = res.violations == 0 && nok0_breaches;
    res.csv = csv.out.str();
    return res;
}

// ---------------------------------------------- criterion 2: block-bound

ExperimentResult block_bound() {
    ExperimentResult res;
    res.name = "block-bound";
    Csv csv;
    csv.comment("per-block deviation |total - zeta(2p) a_l^p| < 6^p 4p^2/(p-1)^2 a_l^(p-1)");
    csv.comment("plus the class bounds: A <= 2^(p+1) zeta(p)^2, B <= 2*6^p zeta(p)");
    csv.row("alpha,p,ell,a_ell,total_lo,total_hi,dev_hi,bound,partA_hi,boundA,partB_hi,boundB,ok");
    for (const auto& [name, spec] : alpha_grid()) {
        CFExpansion cf = cf_expand(spec, 24);
        ConvergentTable table = convergent_table(cf);
        for (long p : {2, 3}) {
            Rational coef = Rational(4 * p * p, (p - 1) * (p - 1)) * Rational(6).pow(p);
            Enclosure zp = p == 2 ? zeta_even(2).value : zeta_real(Rational(3), pow2(-40));
            Rational bound_a = (zp * zp * pow2(p + 1)).hi();
            Rational bound_b = (zp * Rational(2) * Rational(6).pow(p)).hi();
            for (size_t ell = 1; ell <= 18; ++ell) {
                BlockDecomposition bd = block_sum(spec, p, ell);
                Rational rhs = coef * Rational(bd.a_ell).pow(p - 1);
                bool ok = bd.dev_from_main.hi() < rhs;
                // class bounds apply once the proof's standing assumptions
                // (ell >= 2, q_ell >= 2) hold
                if (ell >= 2 && table.q(ell) >= 2) {
                    ok = ok && bd.part_a.hi() <= bound_a && bd.part_b.hi() <= bound_b;
                }
                if (!ok) ++res.violations;
                csv.row(std::string(name) + "," + std::to_string(p) + "," + std::to_string(ell) +
                        "," + bd.a_ell.get_str() + "," + bd.total.lo().to_decimal(17, -1) + "," +
                        bd.total.hi().to_decimal(17, 1) + "," + bd.dev_from_main.hi().to_decimal(17, 1) +
                        "," + rhs.to_decimal(17, -1) + "," + bd.part_a.hi().to_decimal(17, 1) + "," +
                        bound_a.to_decimal(17, -1) + "," + bd.part_b.hi().to_decimal(17, 1) + "," +
                        bound_b.to_decimal(17, -1) + "," + (ok ? "1" : "0"));
            }
        }
    }
    res.summary.push_back("violations: " + std::to_string(res.violations));
    res.pass = res.violations == 0;
    res.csv = csv.out.str();
    return res;
}

// ------------------------------------------- criterion 3: thm3-aggregate

ExperimentResult thm3_aggregate() {
    ExperimentResult res;
    res.name = "thm3-aggregate";
    Csv csv;
    csv.comment("|dsum(q_l - 1)^(1/2) - (zeta(4) sum a_k^2)^(1/2)| <= 576 sqrt(l), p = 2");
    csv.row("alpha,ell,n,lhs_root,main,abs_diff_hi,bound,ok");
    for (const auto& [name, spec] : alpha_grid()) {
        CFExpansion cf = cf_expand(spec, 24);
        ConvergentTable table = convergent_table(cf);
        for (size_t ell = 2; ell <= 18; ++ell) {
            QuotientEstimate est = quotient_estimate(cf, Rational(2), ell);
            Int n_z = table.q(ell) - 1;
            Enclosure root(Rational(0));
            unsigned long n = mpz_get_ui(n_z.get_mpz_t());
            if (n >= 1) {
                SumResult s = dsum(spec, Rational(2), n, pow2(-20));
                root = nth_root(s.value, 2, 64);
            }
            Enclosure diff = (root - est.main).abs();
            bool ok = diff.hi() <= est.additive_bound.lo();
            if (!ok) ++res.violations;
            csv.row(std::string(name) + "," + std::to_string(ell) + "," + n_z.get_str() + "," +
                    root.mid().to_decimal(12) + "," + est.main.mid().to_decimal(12) + "," +
                    diff.hi().to_decimal(12, 1) + "," + est.additive_bound.lo().to_decimal(12, -1) +
                    "," + (ok ? "1" : "0"));
        }
    }
    res.summary.push_back("violations: " + std::to_string(res.violations));
    res.pass = res.violations == 0;
    res.csv = csv.out.str();
    return res;
}

// --------------------------------------------- criterion 4: prop5-suite

ExperimentResult prop5_suite() {
    ExperimentResult res;
    res.name = "prop5-suite";
    Csv csv;
    csv.comment("continued fraction fact suite over the alpha grid plus 20 random rationals");
    csv.row("alpha,property,k,detail,ok");
    std::vector<AlphaCase> grid = alpha_grid();
    Rng rng(20240811);
    for (int i = 0; i < 20; ++i) {
        long b = static_cast<long>(rng.below(999'998)) + 2;
        long a = static_cast<long>(rng.below(static_cast<std::uint64_t>(b - 1))) + 1;
        long g = std::gcd(a, b);
        a /= g;
        b /= g;
        Rational v(a, b);
        grid.push_back({v.str(), make_rational(v)});
    }
    auto check = [&](const std::string& alpha, const std::string& prop, size_t k, bool ok,
                     const std::string& detail) {
        if (!ok) ++res.violations;
        csv.row(alpha + "," + prop + "," + std::to_string(k) + "," + detail + "," +
                (ok ? "1" : "0"));
    };
    for (const auto& [name, spec] : grid) {
        CFExpansion cf = cf_expand(spec, 26);
        ConvergentTable table = convergent_table(cf);
        size_t kmax = std::min<size_t>(25, table.size());
        const bool rational = is_rational(spec);
        // (i) two-sided norm bound, via the verifying path
        for (size_t k = 1; k + 1 <= table.size() && k <= kmax; ++k) {
            if (k == 1 && cf.a(1) == 1) continue;
            bool ok = true;
            std::string detail = "qnorm";
            try {
                qnorm_bounds(spec, cf, table, k, /*verify=*/true);
            } catch (const error& e) {
                ok = false;
                detail = e.what();
            }
            check(name, "i", k, ok, detail);
        }
        // (iii) determinant identity and coprimality
        for (size_t k = 2; k <= kmax; ++k) {
            Int det = table.p(k) * table.q(k - 1) - table.q(k) * table.p(k - 1);
            Int g;
            mpz_gcd(g.get_mpz_t(), table.p(k).get_mpz_t(), table.q(k).get_mpz_t());
            bool ok = det == (k % 2 == 0 ? 1 : -1) && g == 1;
            check(name, "iii", k, ok, "det=" + det.get_str());
        }
        // (iv) sign alternation of q_k alpha - p_k
        for (size_t k = 1; k <= kmax; ++k) {
            int want = k % 2 == 1 ? 1 : -1;
            int got = 0;
            if (rational) {
                const Rational& v = std::get<RationalValue>(spec).value;
                Rational d = Rational(table.q(k)) * v - Rational(table.p(k));
                if (d.is_zero()) continue; // the final convergent is exact
                got = d.sign();
            } else {
                long bits = 64;
                for (;;) {
                    Enclosure d = refine(spec, bits) * Rational(table.q(k)) - Rational(table.p(k));
                    got = d.sign();
                    if (got != 0) break;
                    bits *= 2;
                    if (bits > precision_limit()) break;
                }
            }
            check(name, "iv", k, got == want, "sign=" + std::to_string(got));
        }
        // (v) partial sums of denominators
        {
            Int acc(0);
            for (size_t k = 1; k <= kmax; ++k) {
                acc += table.q(k);
                check(name, "v", k, acc <= 3 * table.q(k), "sum=" + acc.get_str());
            }
        }
        // (vi), (vii): certified norm-power sums for q_k <= 1e4, k >= 2
        for (size_t k = 2; k <= table.size(); ++k) {
            if (table.q(k) > 10000) break;
            unsigned long qk = mpz_get_ui(table.q(k).get_mpz_t());
            if (qk < 2) continue; // empty sum
            Enclosure s1 = norm_power_sum(spec, 1, qk - 1, Rational(1, 1024));
            // rhs = 8 q log2(2q) = 8 q (1 + ln q / ln 2)
            Enclosure lnq = log_enclosure(Rational(table.q(k)), 64);
            Enclosure rhs = (lnq / ln2_enclosure(64) + Rational(1)) * Rational(Int(8 * table.q(k)));
            check(name, "vi", k, s1.hi() <= rhs.lo(),
                  "sum=" + s1.hi().to_decimal(10, 1) + " rhs=" + rhs.lo().to_decimal(10, -1));
            for (long p : {2, 3, 4}) {
                Enclosure sp = norm_power_sum(spec, p, qk - 1, Rational(1, 1024));
                Rational rhs_p = Rational(4).pow(p + 1) / (Rational(2).pow(p) - Rational(2)) *
                                 Rational(table.q(k)).pow(p);
                check(name, "vii-p" + std::to_string(p), k, sp.hi() <= rhs_p,
                      "sum=" + sp.hi().to_decimal(10, 1));
            }
        }
    }
    res.summary.push_back("violations: " + std::to_string(res.violations));
    res.pass = res.violations == 0;
    res.csv = csv.out.str();
    return res;
}

// ------------------------------------------ criterion 5: warnock-oracle

namespace oracle {

// Exact integral of (S(x,y) - N x y)^2 by cell decomposition: S is constant
// on each open cell of the grid induced by the point coordinates.
Rational cell_integral(const PointSet2D& set) {
    std::vector<Rational> xs{Rational(0), Rational(1)}, ys{Rational(0), Rational(1)};
    for (const auto& [x, y] : set.points) {
        xs.push_back(x);
        ys.push_back(y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    Rational total(0);
    Rational nN(Int(set.size()));
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        for (size_t j = 0; j + 1 < ys.size(); ++j) {
            // S on (x_i, x_{i+1}] x (y_j, y_{j+1}] counts points with
            // coordinates <= the cell's lower-left corner
            long s = 0;
            for (const auto& [px, py] : set.points)
                if (px <= xs[i] && py <= ys[j]) ++s;
            Rational sv(s);
            Rational dx = xs[i + 1] - xs[i], dy = ys[j + 1] - ys[j];
            Rational ix = (xs[i + 1] * xs[i + 1] - xs[i] * xs[i]) / Rational(2);
            Rational iy = (ys[j + 1] * ys[j + 1] - ys[j] * ys[j]) / Rational(2);
            Rational ix2 = (xs[i + 1].pow(3) - xs[i].pow(3)) / Rational(3);
            Rational iy2 = (ys[j + 1].pow(3) - ys[j].pow(3)) / Rational(3);
            total += sv * sv * dx * dy - Rational(2) * nN * sv * ix * iy + nN * nN * ix2 * iy2;
        }
    }
    return total;
}

} // namespace oracle

void check_anchor(ExperimentResult& res, Csv& csv, const std::string& name, bool ok) {
    if (!ok) ++res.violations;
    csv.row("anchor-" + name + ",,,," + (ok ? "1" : "0"));
}

ExperimentResult warnock_oracle() {
    ExperimentResult res;
    res.name = "warnock-oracle";
    Csv csv;
    csv.comment("pairwise formula vs symbolic cell-decomposition integral, exact equality");
    csv.row("set,points,pairwise,oracle,ok");
    Rng rng(987654321);
    long checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        PointSet2D set;
        size_t npts = rng.below(13);
        for (size_t i = 0; i < npts; ++i) {
            long dx = static_cast<long>(rng.below(16)) + 1;
            long dy = static_cast<long>(rng.below(16)) + 1;
            set.points.emplace_back(Rational(static_cast<long>(rng.below(dx + 1)), dx),
                                    Rational(static_cast<long>(rng.below(dy + 1)), dy));
        }
        Rational lhs = l2sq_exact(set).lo(); // exact sets give point enclosures
        Rational rhs = oracle::cell_integral(set);
        bool ok = lhs == rhs;
        if (!ok) ++res.violations;
        ++checked;
        csv.row(std::to_string(trial) + "," + std::to_string(npts) + "," + lhs.str() + "," +
                rhs.str() + "," + (ok ? "1" : "0"));
    }
    // closed-form anchors
    {
        PointSet2D empty;
        bool ok = l2sq_exact(empty).lo() == Rational(0);
        check_anchor(res, csv, "empty", ok);
    }
    {
        PointSet2D one;
        one.points.emplace_back(Rational(0), Rational(0));
        bool ok = l2sq_exact(one).lo() == Rational(11, 18);
        check_anchor(res, csv, "origin", ok);
    }
    {
        PointSet2D one;
        one.points.emplace_back(Rational(1), Rational(1));
        bool ok = l2sq_exact(one).lo() == Rational(1, 9);
        check_anchor(res, csv, "corner", ok);
    }
    {
        PointSet2D dav = davenport_set(1, phi_spec());
        Enclosure v = l2sq_exact(dav);
        bool ok = v.contains(Rational(4, 9)) && v.width() < Rational(1, 1000000);
        check_anchor(res, csv, "davenport-1-phi", ok);
    }
    res.summary.push_back("sets checked: " + std::to_string(checked) +
                          " + 4 anchors, violations: " + std::to_string(res.violations));
    res.pass = res.violations == 0;
    res.csv = csv.out.str();
    return res;
}

// ------------------------------------- criterion 6: thm1-equivalence

ExperimentResult thm1_equivalence() {
    ExperimentResult res;
    res.name = "thm1-equivalence";
    Csv csv;
    csv.comment("residual l2sq - main_term for n = 2^8..2^13; slope and level checks");
    csv.row("alpha,n,l2sq,main,residual");
    struct Case {
        const char* name;
        RealSpec spec;
        double level;
    };
    const Case cases[] = {{"phi", phi_spec(), kResidualLevelPhi},
                          {"sqrt2", sqrt2_spec(), kResidualLevelSqrt2}};
    for (const auto& c : cases) {
        std::vector<std::pair<double, double>> pts;
        double max_res = 0;
        for (int k = 8; k <= 13; ++k) {
            unsigned long n = 1ul << k;
            Enclosure l2 = l2sq_exact(davenport_set(n, c.spec));
            Enclosure mt = main_term(c.spec, n, pow2(-30));
            double resid = (l2 - mt).mid().to_double();
            pts.push_back({std::log(static_cast<double>(n)), resid});
            max_res = std::max(max_res, std::fabs(resid));
            csv.row(std::string(c.name) + "," + std::to_string(n) + "," +
                    l2.mid().to_decimal(17) + "," + mt.mid().to_decimal(17) + "," + fmt(resid));
        }
        SlopeFit f = slope_fit(pts);
        bool slope_ok = std::fabs(f.slope) <= 0.02;
        bool level_ok = max_res <= 1.1 * c.level && max_res >= 0.9 * c.level;
        if (!slope_ok || !level_ok) ++res.violations;
        csv.comment(std::string(c.name) + " slope=" + fmt(f.slope) + " max_res=" + fmt(max_res) +
                    " level=" + fmt(c.level) + " ok=" + ((slope_ok && level_ok) ? "1" : "0"));
        res.summary.push_back(std::string(c.name) + ": residual slope " + fmt(f.slope) +
                              " (|.| <= 0.02), max |residual| " + fmt(max_res) +
                              " vs recorded " + fmt(c.level) + " +-10%");
    }
    res.pass = res.violations == 0;
    res.csv = csv.out.str();
    return res;
}

// ------------------------------------------ criterion 7: c-constants

ExperimentResult c_constants() {
    ExperimentResult res;
    res.name = "c-constants";
    Csv csv;
    csv.comment("slope of main_term vs log n over n = 2^6..2^20 against the closed-form c(alpha)");
    csv.row("alpha,n,log_n,main_mid");
    struct Case {
        const char* name;
        RealSpec spec;
        double target;
    };
    const Case cases[] = {{"phi", phi_spec(), 0.030978},
                          {"sqrt2", sqrt2_spec(), 0.0334273},
                          {"sqrt3", sqrt3_spec(), 0.0365368}};
    for (const auto& c : cases) {
        std::vector<std::pair<double, double>> pts;
        for (int k = 6; k <= 20; ++k) {
            unsigned long n = 1ul << k;
            Enclosure mt = main_term(c.spec, n, pow2(-24));
            double x = std::log(static_cast<double>(n));
            pts.push_back({x, mt.mid().to_double()});
            csv.row(std::string(c.name) + "," + std::to_string(n) + "," + fmt(x) + "," +
                    fmt(mt.mid().to_double()));
        }
        SlopeFit f = slope_fit(pts);
        double rel = std::fabs(f.slope / c.target - 1.0);
        bool ok = rel <= 0.03;
        if (!ok) ++res.violations;
        csv.comment(std::string(c.name) + " main slope=" + fmt(f.slope) + " target=" +
                    fmt(c.target) + " rel=" + fmt(rel) + " ok=" + (ok ? "1" : "0"));
        res.summary.push_back(std::string(c.name) + ": main-term slope " + fmt(f.slope) +
                              " vs " + fmt(c.target) + " (rel " + fmt(rel) + ", tol 3%)");
    }
    // l2sq slope for phi over n = 2^6..2^13, 15% tolerance
    {
        std::vector<std::pair<double, double>> pts;
        for (int k = 6; k <= 13; ++k) {
            unsigned long n = 1ul << k;
            Enclosure l2 = l2sq_exact(davenport_set(n, phi_spec()));
            pts.push_back({std::log(static_cast<double>(n)), l2.mid().to_double()});
            csv.row("phi-l2sq," + std::to_string(n) + "," +
                    fmt(std::log(static_cast<double>(n))) + "," + fmt(l2.mid().to_double()));
        }
        SlopeFit f = slope_fit(pts);
        double rel = std::fabs(f.slope / 0.030978 - 1.0);
        bool ok = rel <= 0.15;
        if (!ok) ++res.violations;
        csv.comment("phi l2sq slope=" + fmt(f.slope) + " rel=" + fmt(rel) + " ok=" +
                    (ok ? "1" : "0"));
        res.summary.push_back("phi: l2sq slope " + fmt(f.slope) + " vs 0.030978 (rel " +
                              fmt(rel) + ", tol 15%)");
    }
    res.pass = res.violations == 0;
    res.csv = csv.out.str();
    return res;
}

// ------------------------------------------ criterion 8: beck-bounded

ExperimentResult beck_bounded() {
    ExperimentResult res;
    res.name = "beck-bounded";
    Csv csv;
    csv.comment("deviation sweep main - c(alpha) log n at n = 2^5..2^17");
    csv.row("alpha,k,n,deviation");
    struct Case {
        const char* name;
        BeckName id;
        double width_level;
    };
    const Case cases[] = {{"sqrt2", BeckName::sqrt2, kBeckWidthSqrt2},
                          {"phi", BeckName::phi, kBeckWidthPhi}};
    for (const auto& c : cases) {
        double lo = 1e300, hi = -1e300;
        for (int k = 5; k <= 17; ++k) {
            unsigned long n = 1ul << k;
            Enclosure dev = beck_deviation(c.id, n, pow2(-30));
            double d = dev.mid().to_double();
            lo = std::min(lo, d);
            hi = std::max(hi, d);
            csv.row(std::string(c.name) + "," + std::to_string(k) + "," + std::to_string(n) +
                    "," + fmt(d));
        }
        double width = hi - lo;
        bool ok = width <= 1.1 * c.width_level && width >= 0.9 * c.width_level;
        if (!ok) ++res.violations;
        csv.comment(std::string(c.name) + " width=" + fmt(width) + " level=" +
                    fmt(c.width_level) + " ok=" + (ok ? "1" : "0"));
        res.summary.push_back(std::string(c.name) + ": sweep width " + fmt(width) +
                              " vs recorded " + fmt(c.width_level) + " +-10%");
    }
    res.pass = res.violations == 0;
    res.csv = csv.out.str();
    return res;
}

// ---------------------------------------- criterion 9: dedekind-fast

ExperimentResult dedekind_fast_check() {
    ExperimentResult res;
    res.name = "dedekind-fast";
    Csv csv;
    csv.comment("fast quotient estimate vs exact k0-inclusive sum, p = 2");
    csv.row("b,estimate,exact,rel_err,3*rel_indicator,ok");
    for (long b : {1000L, 10001L, 100003L}) {
        FastDedekind fast = dedekind_fast(1, b, 2);
        Rational exact = dedekind_sum(1, b, 2, 2, true).value;
        // p = 2 puts the estimate on the exact path (point enclosure)
        Rational est = fast.estimate.lo();
        Rational rel = (est - exact).abs() / exact;
        Rational tol = fast.rel_indicator.lo() * Rational(3);
        bool ok = rel <= tol;
        if (!ok) ++res.violations;
        csv.row(std::to_string(b) + "," + est.to_decimal(17) + "," + exact.to_decimal(17) + "," +
                rel.to_decimal(8, 1) + "," + tol.to_decimal(8, -1) + "," + (ok ? "1" : "0"));
        res.summary.push_back("b=" + std::to_string(b) + ": rel err " + rel.to_decimal(4, 1) +
                              " <= " + tol.to_decimal(4, -1));
    }
    res.pass = res.violations == 0;
    res.csv = csv.out.str();
    return res;
}

// ------------------------------------- criterion 10: cor4-consistency

ExperimentResult cor4_consistency() {
    ExperimentResult res;
    res.name = "cor4-consistency";
    Csv csv;
    csv.comment("alpha = e: ratio main_term / quotient_sq_term at n = q_l - 1, l = 10..16");
    csv.row("ell,n,main,quotient_term,ratio,abs_ratio_minus_1,decreasing_ok");
    RealSpec spec = e_spec();
    CFExpansion cf = cf_expand(spec, 24);
    ConvergentTable table = convergent_table(cf);
    double prev = 1e300;
    double final_dev = 1e300;
    bool decreasing = true;
    for (size_t ell = 10; ell <= 16; ++ell) {
        Int n_z = table.q(ell) - 1;
        unsigned long n = mpz_get_ui(n_z.get_mpz_t());
        Enclosure mt = main_term(spec, n, pow2(-20));
        Rational qt = quotient_sq_term(cf, table, n_z);
        double ratio = (mt.mid() / qt).to_double();
        double dev = std::fabs(ratio - 1.0);
        bool step_ok = dev <= prev;
        if (!step_ok) decreasing = false;
        csv.row(std::to_string(ell) + "," + n_z.get_str() + "," + mt.mid().to_decimal(12) + "," +
                qt.to_decimal(12) + "," + fmt(ratio) + "," + fmt(dev) + "," +
                (step_ok ? "1" : "0"));
        prev = dev;
        final_dev = dev;
    }
    bool final_ok = final_dev <= 0.25;
    if (!decreasing) ++res.violations;
    if (!final_ok) ++res.violations;
    csv.comment(std::string("monotone decrease: ") + (decreasing ? "yes" : "NO") +
                "; |ratio-1| at l=16: " + fmt(final_dev) + " (required <= 0.25)");
    res.summary.push_back(std::string("|ratio-1| decreasing at every step: ") +
                          (decreasing ? "yes" : "NO"));
    res.summary.push_back("|ratio-1| at l=16: " + fmt(final_dev) + " (required <= 0.25)");
    res.pass = res.violations == 0;
    res.csv = csv.out.str();
    return res;
}

} // namespace

std::vector<std::string> experiment_names() {
    return {"thm2-scan",      "block-bound", "thm3-aggregate", "prop5-suite",
            "warnock-oracle", "thm1-equivalence", "c-constants", "beck-bounded",
            "dedekind-fast",  "cor4-consistency"};
}

std::string experiment_columns(const std::string& name) {
    if (name == "thm2-scan") return "a,b,p,E_lo,E_hi,bound,ok";
    if (name == "block-bound")
        return "alpha,p,ell,a_ell,total_lo,total_hi,dev_hi,bound,partA_hi,boundA,partB_hi,boundB,ok";
    if (name == "thm3-aggregate") return "alpha,ell,n,lhs_root,main,abs_diff_hi,bound,ok";
    if (name == "prop5-suite") return "alpha,property,k,detail,ok";
    if (name == "warnock-oracle") return "set,points,pairwise,oracle,ok";
    if (name == "thm1-equivalence") return "alpha,n,l2sq,main,residual";
    if (name == "c-constants") return "alpha,n,log_n,main_mid";
    if (name == "beck-bounded") return "alpha,k,n,deviation";
    if (name == "dedekind-fast") return "b,estimate,exact,rel_err,3*rel_indicator,ok";
    if (name == "cor4-consistency")
        return "ell,n,main,quotient_term,ratio,abs_ratio_minus_1,decreasing_ok";
    throw domain_error("unknown experiment '" + name + "'");
}

ExperimentResult run_experiment(const std::string& name) {
    if (name == "thm2-scan") return thm2_scan();
    if (name == "block-bound") return block_bound();
    if (name == "thm3-aggregate") return thm3_aggregate();
    if (name == "prop5-suite") return prop5_suite();
    if (name == "warnock-oracle") return warnock_oracle();
    if (name == "thm1-equivalence") return thm1_equivalence();
    if (name == "c-constants") return c_constants();
    if (name == "beck-bounded") return beck_bounded();
    if (name == "dedekind-fast") return dedekind_fast_check();
    if (name == "cor4-consistency") return cor4_consistency();
    throw domain_error("unknown experiment '" + name + "'");
}

bool revalidate_csv(const std::string& name, const std::string& csv) {
    // Row-level verdicts live in the trailing ok column (0/1); summary
    // checks are re-derivable from the '#' comment lines that carry
    // " ok=0" / " ok=1" markers. A CSV revalidates to pass iff no row and
    // no marker reports a failure.
    (void)name;
    std::istringstream in(csv);
    std::string line;
    bool pass = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find(" ok=0") != std::string::npos) pass = false;
            if (line.find("(must be negative)") != std::string::npos) {
                // the contrast value must indeed be negative
                auto lb = line.find('[');
                if (lb != std::string::npos) {
                    auto payload = line.substr(lb);
                    try {
                        if (!(Enclosure::parse(payload).hi() < Rational(0))) pass = false;
                    } catch (const error&) {
                        pass = false;
                    }
                }
            }
            continue;
        }
        auto comma = line.rfind(',');
        if (comma == std::string::npos) continue;
        std::string last = line.substr(comma + 1);
        if (last == "0") pass = false;
    }
    return pass;
}

} // namespace lowdisc
