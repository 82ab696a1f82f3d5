#include <doctest.h>

#include <cmath>

#include "lowdisc/constants.hpp"
#include "lowdisc/discrepancy.hpp"
#include "lowdisc/refine.hpp"

using namespace lowdisc;

namespace {

// direct evaluation of the pairwise identity with plain rationals
Rational direct_formula(const std::vector<std::pair<Rational, Rational>>& pts) {
    Rational nN{Int(pts.size())};
    Rational pair_sum(0), second(0);
    for (const auto& [xk, yk] : pts)
        for (const auto& [xl, yl] : pts)
            pair_sum += (Rational(1) - max(xk, xl)) * (Rational(1) - max(yk, yl));
    for (const auto& [x, y] : pts) second += (Rational(1) - x * x) * (Rational(1) - y * y);
    return pair_sum - nN / Rational(2) * second + nN * nN / Rational(9);
}

} // namespace

TEST_CASE("davenport_set: coordinates, heights and symmetry") {
    PointSet2D set = davenport_set(2, phi_spec());
    REQUIRE(set.size() == 4);
    CHECK(set.n_generator == 2);
    // points come in (x, 1-x) pairs at each height k/n, k ascending
    CHECK(set.points[0].second == Rational(1, 2));
    CHECK(set.points[1].second == Rational(1, 2));
    CHECK(set.points[2].second == Rational(1));
    CHECK(set.points[0].first + set.points[1].first == Rational(1));
    CHECK(set.points[2].first + set.points[3].first == Rational(1));
    // stored x within 2^-60 of the true fractional part
    Enclosure phi = refine(phi_spec(), 90);
    Enclosure frac1 = phi - Rational(1);           // {phi}
    Enclosure frac2 = phi * Rational(2) - Rational(3); // {2 phi}
    CHECK((Enclosure(set.points[0].first) - frac1).abs().hi() <= pow2(-60));
    CHECK((Enclosure(set.points[2].first) - frac2).abs().hi() <= pow2(-60));
    CHECK(set.points[0].first.to_double() == doctest::Approx(0.618034).epsilon(1e-6));
    CHECK(set.points[1].first.to_double() == doctest::Approx(0.381966).epsilon(1e-6));
    CHECK(set.points[2].first.to_double() == doctest::Approx(0.236068).epsilon(1e-6));

    PointSet2D s2 = davenport_set(1, sqrt2_spec());
    CHECK(s2.points[0].first.to_double() == doctest::Approx(0.414214).epsilon(1e-6));
    CHECK(s2.points[1].first.to_double() == doctest::Approx(0.585786).epsilon(1e-6));

    CHECK_THROWS_AS(davenport_set(1, make_rational(Rational(1, 3))), domain_error);
    CHECK_THROWS_AS(davenport_set(0, phi_spec()), domain_error);

    // finer storage grid when more bits are requested
    PointSet2D fine = davenport_set(1, phi_spec(), 80);
    CHECK(fine.coord_error == pow2(-80));
    Enclosure phi80 = refine(phi_spec(), 120);
    CHECK((Enclosure(fine.points[0].first) - (phi80 - Rational(1))).abs().hi() <= pow2(-80));
}

TEST_CASE("l2sq_exact: closed-form anchors") {
    PointSet2D empty;
    CHECK(l2sq_exact(empty).lo() == Rational(0));

    PointSet2D origin;
    origin.points.emplace_back(Rational(0), Rational(0));
    CHECK(l2sq_exact(origin).lo() == Rational(11, 18));

    PointSet2D corner;
    corner.points.emplace_back(Rational(1), Rational(1));
    CHECK(l2sq_exact(corner).lo() == Rational(1, 9));

    // Davenport n = 1: both points at height 1, never counted; N^2/9 = 4/9
    PointSet2D dav = davenport_set(1, phi_spec());
    CHECK(l2sq_formula_value(dav) == Rational(4, 9));
    Enclosure e = l2sq_exact(dav);
    CHECK(e.contains(Rational(4, 9)));
    CHECK(e.width() <= Rational(1, Int("100000000000000")));
}

TEST_CASE("l2sq_exact: integer kernel and mpz fallback agree with the formula") {
    // small denominators: fast kernel
    PointSet2D a;
    a.points = {{Rational(1, 3), Rational(1, 4)},
                {Rational(2, 5), Rational(1)},
                {Rational(0), Rational(5, 7)},
                {Rational(9, 11), Rational(2, 3)}};
    CHECK(l2sq_exact(a).lo() == direct_formula(a.points));
    // gigantic denominators: exact mpz fallback
    Int big = Int(1) << 80;
    PointSet2D b;
    b.points = {{Rational(Int(big / 3), big), Rational(1, 3)},
                {Rational(Int(big / 7), big), Rational(2, 3)},
                {Rational(Int(2 * (big / 5)), big), Rational(1, 5)}};
    CHECK(l2sq_exact(b).lo() == direct_formula(b.points));
}

TEST_CASE("main_term: scaled Diophantine sum") {
    CHECK(main_term(phi_spec(), 0, Rational(1, 1000)).lo() == Rational(0));
    Enclosure m1 = main_term(phi_spec(), 1, Rational(1, Int("1000000000")));
    CHECK(m1.mid().to_double() == doctest::Approx(0.0175910).epsilon(2e-5));
    // sqrt2, n = 2: (29/4 + 5 sqrt2) / (4 pi^4)
    Enclosure m2 = main_term(sqrt2_spec(), 2, Rational(1, Int("1000000000")));
    Enclosure target = (sqrt_enclosure(Rational(2), 96) * Rational(5) + Rational(29, 4)) /
                       (pi_enclosure(96).pow(4) * Rational(4));
    CHECK(m2.intersects(target));
    CHECK(m2.mid().to_double() == doctest::Approx(0.0367550).epsilon(1e-5));
    CHECK_THROWS_AS(main_term(make_rational(Rational(1, 3)), 2, Rational(1, 100)), domain_error);
}

TEST_CASE("quotient_sq_term: partial quotient squares over 360") {
    CFExpansion ecf = cf_expand(e_spec(), 10);
    ConvergentTable et = convergent_table(ecf);
    CHECK(quotient_sq_term(ecf, et, 32) == Rational(1, 15)); // 24/360
    CFExpansion pcf = cf_expand(phi_spec(), 10);
    ConvergentTable pt = convergent_table(pcf);
    CHECK(quotient_sq_term(pcf, pt, 12) == Rational(1, 60)); // l = 6
    CHECK(quotient_sq_term(pcf, pt, 1) == Rational(1, 180)); // l = 2 by tie-break
}

TEST_CASE("slope_fit: ordinary least squares") {
    SlopeFit f = slope_fit({{1, 2}, {2, 4}, {3, 6}});
    CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(f.intercept == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    CHECK(f.max_abs_residual == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    SlopeFit c = slope_fit({{1, 5}, {2, 5}, {3, 5}});
    CHECK(c.slope == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    CHECK_THROWS_AS(slope_fit({{1, 1}, {2, 2}}), domain_error);
    CHECK_THROWS_AS(slope_fit({{1, 1}, {1, 2}, {1, 3}}), domain_error);
}

TEST_CASE("point_set_csv round-trips") {
    PointSet2D set = davenport_set(2, sqrt2_spec());
    std::string csv = point_set_csv(set);
    CHECK(csv.rfind("x,y\n", 0) == 0);
    // every line re-parses and stays within the stored coordinate's error
    size_t pos = 4, row = 0;
    while (pos < csv.size()) {
        size_t nl = csv.find('\n', pos);
        std::string line = csv.substr(pos, nl - pos);
        size_t comma = line.find(',');
        Rational x = Rational::from_decimal(line.substr(0, comma));
        Rational y = Rational::from_decimal(line.substr(comma + 1));
        CHECK((x - set.points[row].first).abs() <= Rational(1, Int("1000000000000000")));
        CHECK((y - set.points[row].second).abs() <= Rational(1, Int("1000000000000000")));
        pos = nl + 1;
        ++row;
    }
    CHECK(row == set.size());
}

TEST_CASE("disc_report assembles consistent fields") {
    DiscrepancyReport rep =
        disc_report(phi_spec(), 4, true, true, true, Rational(1, Int("1000000000")));
    REQUIRE(rep.l2sq);
    REQUIRE(rep.main_term);
    REQUIRE(rep.cor4_term);
    REQUIRE(rep.c_log_n); // phi has a known growth constant
    REQUIRE(rep.residual_main);
    CHECK(rep.residual_main->intersects(*rep.l2sq - *rep.main_term));
    CHECK(rep.residual_cor4->intersects(*rep.l2sq - Enclosure(*rep.cor4_term)));
    // e has no shipped constant
    DiscrepancyReport erep =
        disc_report(e_spec(), 4, false, true, true, Rational(1, Int("1000000000")));
    CHECK_FALSE(erep.c_log_n);
    CHECK_FALSE(erep.l2sq);
    CHECK(erep.main_term);
}
