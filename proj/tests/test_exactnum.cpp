#include <doctest.h>

#include <cstdint>

#include "lowdisc/accum.hpp"
#include "lowdisc/constants.hpp"
#include "lowdisc/enclosure.hpp"
#include "lowdisc/rational.hpp"
#include "lowdisc/realspec.hpp"
#include "lowdisc/refine.hpp"
#include "oracle_constants.hpp"

using namespace lowdisc;

namespace {

// enclosure agrees with a reference decimal to within tol
bool near(const Enclosure& e, const char* literal, const Rational& tol) {
    Rational v = Rational::from_decimal(literal);
    return e.lo() <= v + tol && v - tol <= e.hi();
}

struct Rng {
    std::uint64_t s = 0x853c49e6748fea9bull;
    std::uint64_t next() {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return s * 0x2545F4914F6CDD1Dull;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

} // namespace

TEST_CASE("rational canonical form is unique") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        long n = rng.range(-500, 500);
        long d = rng.range(1, 400);
        long k = rng.range(1, 50) * (rng.range(0, 1) ? 1 : -1);
        Rational a(n, d), b(k * n, k * d);
        CHECK(a == b);
        CHECK(a.numerator() == b.numerator());
        CHECK(a.denominator() == b.denominator());
        CHECK(a.denominator() >= 1);
    }
    CHECK(Rational(7, -5).str() == "-7/5");
    CHECK(Rational(0, 17).str() == "0/1");
    CHECK(Rational(-6, -4).str() == "3/2");
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-3") == Rational(-3));
    CHECK_THROWS_AS(Rational::from_string("a/b"), domain_error);
    CHECK_THROWS_AS(Rational::from_string("1/0"), domain_error);
    CHECK(Rational::from_decimal("0.25") == Rational(1, 4));
    CHECK(Rational::from_decimal("-1.5e2") == Rational(-150));
    CHECK(Rational::from_decimal("1e-3") == Rational(1, 1000));
    CHECK(Rational::from_decimal(Rational(7, 8).to_decimal(10)) == Rational(7, 8));
    // directed rounding brackets the true value
    Rational third(1, 3);
    CHECK(Rational::from_decimal(third.to_decimal(12, -1)) <= third);
    CHECK(Rational::from_decimal(third.to_decimal(12, 1)) >= third);
}

TEST_CASE("interval arithmetic is outward (contains exact results)") {
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        Rational a(rng.range(-100, 100), rng.range(1, 60));
        Rational b(rng.range(-100, 100), rng.range(1, 60));
        Rational da(rng.range(0, 5), 97), db(rng.range(0, 5), 89);
        Enclosure ea(a - da, a + da), eb(b - db, b + db);
        CHECK((ea + eb).contains(a + b));
        CHECK((ea - eb).contains(a - b));
        CHECK((ea * eb).contains(a * b));
        if (!eb.contains(Rational(0))) CHECK((ea / eb).contains(a / b));
        CHECK(ea.pow(3).contains(a.pow(3)));
        CHECK(ea.pow(4).contains(a.pow(4)));
        CHECK(ea.abs().contains(a.abs()));
    }
}

TEST_CASE("enclosure compare is three-valued") {
    Enclosure e(Rational(1, 3), Rational(1, 2));
    CHECK(e.compare(Rational(1, 4)) == Position::above);
    CHECK(e.compare(Rational(2, 3)) == Position::below);
    CHECK(e.compare(Rational(2, 5)) == Position::straddles);
    CHECK(e.compare(Rational(1, 3)) == Position::straddles); // closed endpoints
}

TEST_CASE("enclosure printing is outward and re-parseable") {
    Enclosure e(Rational(1, 3), Rational(2, 3));
    Enclosure back = Enclosure::parse(e.str());
    CHECK(back.contains(e));
    CHECK(back.width() <= e.width() + Rational(1, Int("10000000000000000")));
}

TEST_CASE("refine: rational is exact") {
    Enclosure e = refine(make_rational(Rational(7, 5)), 10);
    CHECK(e.is_point());
    CHECK(e.lo() == Rational(7, 5));
}

TEST_CASE("refine: quadratic surd") {
    Enclosure e = refine(sqrt2_spec(), 20);
    CHECK(e.width() <= pow2(-20));
    CHECK(near(e, anchors::sqrt2, pow2(-18)));
    Enclosure tight = refine(sqrt2_spec(), 200);
    CHECK(tight.width() <= pow2(-200));
    CHECK(near(tight, anchors::sqrt2, Rational(1, Int("10000000000000000000000", 10))));
    // negative-Q and shifted forms
    Enclosure shifted = refine(make_surd(-3, 2, -2), 64); // (-3+sqrt2)/(-2)
    Enclosure expect = (Enclosure(Rational(3)) - refine(sqrt2_spec(), 80)) / Rational(2);
    CHECK(shifted.intersects(expect));
}

TEST_CASE("refine: Euler e") {
    Enclosure e = refine(e_spec(), 30);
    CHECK(e.width() <= pow2(-30));
    CHECK(near(e, anchors::e, pow2(-28)));
    Enclosure tight = refine(e_spec(), 250);
    CHECK(near(tight, anchors::e, Rational(1, Int("100000000000000000000"))));
}

TEST_CASE("refine: explicit prefix determines only an interval") {
    ExplicitCF cf{0, {Int(1000)}};
    Enclosure e = refine(RealSpec(cf), 10);
    CHECK(e.contains(Rational(1, 1000)));
    CHECK(e.contains(Rational(1, 1001)));
    CHECK_THROWS_AS(refine(RealSpec(cf), 40), precision_exhausted_error);
    try {
        refine(RealSpec(cf), 40);
    } catch (const precision_exhausted_error& ex) {
        CHECK(ex.index_reached == 1);
    }
    ExplicitCF bare{3, {}};
    CHECK_THROWS_AS(refine(RealSpec(bare), 4), precision_exhausted_error);
}

TEST_CASE("refine monotonicity: more bits nest inside fewer") {
    for (const RealSpec& spec :
         {sqrt2_spec(), sqrt3_spec(), phi_spec(), e_spec(), make_surd(7, 19, -3)}) {
        for (long bits : {16L, 40L, 96L}) {
            Enclosure coarse = refine(spec, bits);
            Enclosure fine = refine(spec, bits + 8);
            CHECK(coarse.contains(fine));
        }
    }
}

TEST_CASE("refine respects the precision limit") {
    CHECK_THROWS_AS(refine(sqrt2_spec(), precision_limit() + 1), domain_error);
    CHECK_THROWS_AS(refine(sqrt2_spec(), 0), domain_error);
}

TEST_CASE("pi enclosure") {
    Enclosure p = pi_enclosure(64);
    CHECK(p.width() <= pow2(-64));
    CHECK(near(p, anchors::pi, pow2(-60)));
    CHECK(near(pi_enclosure(128), anchors::pi, Rational(1, Int("100000000000000000000"))));
}

TEST_CASE("log enclosures") {
    CHECK(near(ln2_enclosure(80), anchors::ln2, pow2(-76)));
    CHECK(near(log_enclosure(Rational(1048576), 64) / Rational(20), anchors::ln2, pow2(-56)));
    CHECK(log_enclosure(Rational(1), 32).contains(Rational(0)));
    Enclosure half = log_enclosure(Rational(1, 2), 64);
    CHECK(near(-half, anchors::ln2, pow2(-60)));
    CHECK_THROWS_AS(log_enclosure(Rational(0), 16), domain_error);
}

TEST_CASE("nth_root certified brackets") {
    Enclosure r = nth_root(Rational(2), 2, 100);
    CHECK(r.width() <= pow2(-100));
    CHECK(near(r, anchors::sqrt2, Rational(1, Int("10000000000000000000000", 10))));
    Enclosure c = nth_root(Rational(27, 8), 3, 64);
    CHECK(c.contains(Rational(3, 2)));
    CHECK(nth_root(Rational(0), 5, 16).is_point());
    // rational exponent path
    Enclosure p = pow_rational(Rational(4), Rational(3, 2), 64);
    CHECK(p.contains(Rational(8)));
    Enclosure inv = pow_rational(Rational(4), Rational(-1, 2), 64);
    CHECK(inv.contains(Rational(1, 2)));
}

TEST_CASE("zeta at even integers: exact pi coefficients") {
    auto z2 = zeta_even(2);
    CHECK(z2.coefficient == Rational(1, 6));
    CHECK(near(z2.value, anchors::zeta2, pow2(-60)));
    auto z4 = zeta_even(4);
    CHECK(z4.coefficient == Rational(1, 90));
    CHECK(near(z4.value, anchors::zeta4, pow2(-60)));
    auto z6 = zeta_even(6);
    CHECK(z6.coefficient == Rational(1, 945));
    CHECK(near(z6.value, anchors::zeta6, pow2(-60)));
    auto z8 = zeta_even(8);
    CHECK(z8.coefficient == Rational(1, 9450));
    CHECK(near(z8.value, anchors::zeta8, pow2(-60)));
    CHECK(z8.value.width() <= pow2(-64));
    CHECK_THROWS_AS(zeta_even(10), unsupported_error);
    CHECK_THROWS_AS(zeta_even(3), unsupported_error);
}

TEST_CASE("zeta_real: tail-bounded partial sums") {
    Enclosure z4 = zeta_real(Rational(4), Rational(1, Int("10000000000")));
    CHECK(z4.width() <= Rational(1, Int("10000000000")));
    CHECK(near(z4, anchors::zeta4, Rational(1, Int("10000000000"))));
    Enclosure z6 = zeta_real(Rational(6), Rational(1, Int("10000000000")));
    CHECK(near(z6, anchors::zeta6, Rational(1, Int("10000000000"))));
    Enclosure z3 = zeta_real(Rational(3), Rational(1, 1000000));
    CHECK(near(z3, anchors::zeta3, Rational(1, 1000000)));
    CHECK_THROWS_AS(zeta_real(Rational(14, 10), Rational(1, 100)), domain_error);
    // non-integer exponent via the root path
    Enclosure z25 = zeta_real(Rational(5, 2), Rational(1, 10000));
    CHECK(z25.contains(Rational::from_decimal("1.341487257")));
}

TEST_CASE("zeta_real and zeta_even enclosures intersect") {
    for (int tp : {2, 4, 6, 8}) {
        Rational eps = tp == 2 ? Rational(1, 10000) : Rational(1, 100000000);
        CHECK(zeta_real(Rational(tp), eps).intersects(zeta_even(tp).value));
    }
}

TEST_CASE("dyadic accumulator is outward") {
    DyadicAccumulator acc(40);
    Rational total(0);
    Rng rng;
    for (int i = 0; i < 500; ++i) {
        Rational t(rng.range(1, 1000), rng.range(1, 997));
        total += t;
        acc.add_point(t);
    }
    Enclosure s = acc.result();
    CHECK(s.contains(total));
    CHECK(s.width() <= Rational(1000) * pow2(-40));
    CHECK(acc.count() == 500);
}

TEST_CASE("realspec validation") {
    CHECK_THROWS_AS(make_surd(0, 4, 1), domain_error);  // square
    CHECK_THROWS_AS(make_surd(0, 1, 1), domain_error);  // < 2
    CHECK_THROWS_AS(make_surd(0, 2, 0), domain_error);  // zero Q
    CHECK_THROWS_AS(validate(RealSpec(ExplicitCF{1, {Int(0)}})), domain_error);
}
