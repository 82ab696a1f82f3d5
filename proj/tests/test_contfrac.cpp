#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "lowdisc/contfrac.hpp"
#include "lowdisc/refine.hpp"

using namespace lowdisc;

namespace {

std::vector<long> quotients_of(const CFExpansion& cf) {
    std::vector<long> out;
    for (const Int& a : cf.quotients) out.push_back(static_cast<long>(a.get_si()));
    return out;
}

Int fib(size_t k) { // F_1 = F_2 = 1
    Int a = 1, b = 1;
    for (size_t i = 2; i < k; ++i) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return k == 0 ? Int(0) : b;
}

struct Rng {
    std::uint64_t s = 0xdeadbeef12345ull;
    std::uint64_t next() {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return s * 0x2545F4914F6CDD1Dull;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

} // namespace

TEST_CASE("cf_expand: rationals via the Euclidean algorithm") {
    CFExpansion cf = cf_expand(make_rational(Rational(7, 5)), 10);
    CHECK(cf.a0 == 1);
    CHECK(quotients_of(cf) == std::vector<long>{2, 2});
    CHECK(cf.exact);
    CHECK(cf.str() == "[1; 2, 2]");

    CFExpansion neg = cf_expand(make_rational(Rational(-7, 5)), 10);
    CHECK(neg.a0 == -2); // floor(-1.4) = -2
    CHECK(neg.exact);

    CFExpansion integer = cf_expand(make_rational(Rational(4)), 10);
    CHECK(integer.a0 == 4);
    CHECK(integer.terms() == 0);
    CHECK(integer.exact);

    CFExpansion truncated = cf_expand(make_rational(Rational(355, 113)), 1);
    CHECK_FALSE(truncated.exact);
    CHECK(truncated.terms() == 1);
}

TEST_CASE("cf_expand: golden ratio is all ones") {
    CFExpansion cf = cf_expand(phi_spec(), 6);
    CHECK(cf.a0 == 1);
    CHECK(quotients_of(cf) == std::vector<long>{1, 1, 1, 1, 1, 1});
    CHECK_FALSE(cf.exact);
}

TEST_CASE("cf_expand: e follows the 1,1,2k pattern") {
    CFExpansion cf = cf_expand(e_spec(), 8);
    CHECK(cf.a0 == 2);
    CHECK(quotients_of(cf) == std::vector<long>{1, 2, 1, 1, 4, 1, 1, 6});
    // cross-check against re-expansion of a refined enclosure: both
    // endpoints of a tight interval around e share this quotient prefix
    Enclosure e = refine(e_spec(), 200);
    CFExpansion lo = cf_expand(make_rational(e.lo()), 9);
    CFExpansion hi = cf_expand(make_rational(e.hi()), 9);
    for (size_t k = 1; k <= 8; ++k) {
        CHECK(lo.a(k) == cf.a(k));
        CHECK(hi.a(k) == cf.a(k));
    }
}

TEST_CASE("cf_expand: surds, including shifted and negative forms") {
    CHECK(quotients_of(cf_expand(sqrt2_spec(), 5)) == std::vector<long>{2, 2, 2, 2, 2});
    CHECK(quotients_of(cf_expand(sqrt3_spec(), 6)) == std::vector<long>{1, 2, 1, 2, 1, 2});
    // (1+sqrt5)/2: the golden ratio again, via the surd route
    CFExpansion phi = cf_expand(make_surd(1, 5, 2), 6);
    CHECK(phi.a0 == 1);
    CHECK(quotients_of(phi) == std::vector<long>{1, 1, 1, 1, 1, 1});
    // sqrt(7) = [2; 1,1,1,4 ...]
    CHECK(quotients_of(cf_expand(make_surd(0, 7, 1), 8)) ==
          std::vector<long>{1, 1, 1, 4, 1, 1, 1, 4});
    // (-3+sqrt2)/(-2) = (3-sqrt2)/2 = 0.7928...: a0 = 0
    CFExpansion odd = cf_expand(make_surd(-3, 2, -2), 12);
    CHECK(odd.a0 == 0);
    Enclosure v = refine(make_surd(-3, 2, -2), 100);
    CFExpansion check_lo = cf_expand(make_rational(v.lo()), 13);
    for (size_t k = 1; k <= 12; ++k) CHECK(check_lo.a(k) == odd.a(k));
}

TEST_CASE("cf_expand: explicit prefixes are returned verbatim") {
    RealSpec spec = ExplicitCF{0, {Int(1000)}};
    CFExpansion cf = cf_expand(spec, 10);
    CHECK(cf.a0 == 0);
    CHECK(quotients_of(cf) == std::vector<long>{1000});
    CHECK_FALSE(cf.exact);
}

TEST_CASE("convergent_table follows the q_1 = 1, q_2 = a_1 indexing") {
    // [1; 2, 2]: rows 1/1, 3/2, 7/5
    ConvergentTable t = convergent_table(cf_expand(make_rational(Rational(7, 5)), 10));
    REQUIRE(t.size() == 3);
    CHECK(t.convergent(1) == Rational(1));
    CHECK(t.convergent(2) == Rational(3, 2));
    CHECK(t.convergent(3) == Rational(7, 5));

    // golden ratio: Fibonacci denominators
    ConvergentTable g = convergent_table(cf_expand(phi_spec(), 6));
    std::vector<long> qs;
    for (size_t k = 1; k <= 6; ++k) qs.push_back(static_cast<long>(g.q(k).get_si()));
    CHECK(qs == std::vector<long>{1, 1, 2, 3, 5, 8});

    // sqrt2: q = 1, 2, 5, 12, 29
    ConvergentTable s = convergent_table(cf_expand(sqrt2_spec(), 4));
    std::vector<long> sq;
    for (size_t k = 1; k <= 5; ++k) sq.push_back(static_cast<long>(s.q(k).get_si()));
    CHECK(sq == std::vector<long>{1, 2, 5, 12, 29});

    CHECK_THROWS_AS(convergent_table(cf_expand(make_rational(Rational(4)), 5)), domain_error);
}

TEST_CASE("determinant identity and coprimality in every table") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        long den = rng.range(2, 100000);
        long num = rng.range(1, den - 1);
        long g = std::gcd(num, den);
        CFExpansion cf = cf_expand(make_rational(Rational(num / g, den / g)), 64);
        if (cf.terms() == 0) continue;
        ConvergentTable t = convergent_table(cf);
        for (size_t k = 2; k <= t.size(); ++k) {
            Int det = t.p(k) * t.q(k - 1) - t.q(k) * t.p(k - 1);
            CHECK(det == (k % 2 == 0 ? 1 : -1));
            Int gg;
            mpz_gcd(gg.get_mpz_t(), t.p(k).get_mpz_t(), t.q(k).get_mpz_t());
            CHECK(gg == 1);
        }
        // partial sums of denominators stay within 3 q_k
        Int acc(0);
        for (size_t k = 1; k <= t.size(); ++k) {
            acc += t.q(k);
            CHECK(acc <= 3 * t.q(k));
        }
        // Fibonacci lower bound
        for (size_t k = 1; k <= t.size(); ++k) CHECK(t.q(k) >= fib(k));
    }
}

TEST_CASE("round-trip: expanding the last convergent reproduces the quotients") {
    for (const RealSpec& spec : {sqrt2_spec(), phi_spec(), e_spec(), make_surd(4, 29, 3)}) {
        CFExpansion cf = cf_expand(spec, 12);
        ConvergentTable t = convergent_table(cf);
        CFExpansion back =
            cf_expand(make_rational(Rational(t.p(t.size()), t.q(t.size()))), 20);
        CHECK(back.a0 == cf.a0);
        // canonicalize the truncated list: a trailing 1 merges left
        std::vector<Int> want = cf.quotients;
        if (want.size() >= 2 && want.back() == 1) {
            want.pop_back();
            want.back() += 1;
        }
        CHECK(back.quotients == want);
        // and both expansions name the same rational
        ConvergentTable tb = convergent_table(back);
        CHECK(tb.convergent(tb.size()) == Rational(t.p(t.size()), t.q(t.size())));
    }
}

TEST_CASE("qnorm_bounds matches its stated interval and sign") {
    // sqrt2, k = 2: (1/7, 1/5, -1); true value 3 - 2 sqrt2
    {
        CFExpansion cf = cf_expand(sqrt2_spec(), 8);
        ConvergentTable t = convergent_table(cf);
        QNormBounds b = qnorm_bounds(sqrt2_spec(), cf, t, 2, /*verify=*/true);
        CHECK(b.lower == Rational(1, 7));
        CHECK(b.upper == Rational(1, 5));
        CHECK(b.sign == -1);
        Enclosure actual = (refine(sqrt2_spec(), 80) * Rational(2) - Rational(3)).abs();
        CHECK(actual.lo() >= b.lower);
        CHECK(actual.hi() <= b.upper);
    }
    // golden ratio, k = 6: (1/21, 1/13, -1); ||8 phi|| ~ 0.05573
    {
        CFExpansion cf = cf_expand(phi_spec(), 8);
        ConvergentTable t = convergent_table(cf);
        QNormBounds b = qnorm_bounds(phi_spec(), cf, t, 6, true);
        CHECK(b.lower == Rational(1, 21));
        CHECK(b.upper == Rational(1, 13));
        CHECK(b.sign == -1);
    }
    // rational 7/5, k = 2: upper bound attained exactly
    {
        CFExpansion cf = cf_expand(make_rational(Rational(7, 5)), 8);
        ConvergentTable t = convergent_table(cf);
        QNormBounds b = qnorm_bounds(make_rational(Rational(7, 5)), cf, t, 2, true);
        CHECK(b.lower == Rational(1, 7));
        CHECK(b.upper == Rational(1, 5));
        Rational actual = (Rational(2) * Rational(7, 5) - Rational(3)).abs();
        CHECK(actual == b.upper);
    }
    // k = 1 with a_1 = 1 is out of the stated domain
    {
        CFExpansion cf = cf_expand(phi_spec(), 4);
        ConvergentTable t = convergent_table(cf);
        CHECK_THROWS_AS(qnorm_bounds(phi_spec(), cf, t, 1), domain_error);
    }
    // k = 1 with a_1 > 1 is allowed
    {
        CFExpansion cf = cf_expand(sqrt2_spec(), 4);
        ConvergentTable t = convergent_table(cf);
        CHECK_NOTHROW(qnorm_bounds(sqrt2_spec(), cf, t, 1, true));
    }
}

TEST_CASE("locate_index: largest l with q_l <= n, ties upward") {
    ConvergentTable g = convergent_table(cf_expand(phi_spec(), 10));
    CHECK(locate_index(g, 10) == 6); // q_6 = 8 <= 10 < 13
    CHECK(locate_index(g, 1) == 2);  // q_1 = q_2 = 1: larger index wins
    ConvergentTable e = convergent_table(cf_expand(e_spec(), 10));
    CHECK(locate_index(e, 32) == 6); // q_6 = 32 <= 32 < 39
    CHECK_THROWS_AS(locate_index(g, Int("100000000")), needs_more_terms_error);
    try {
        locate_index(g, Int("100000000"));
    } catch (const needs_more_terms_error& ex) {
        CHECK(ex.terms_available == 11);
    }
    CHECK_THROWS_AS(locate_index(g, 0), domain_error);
}

TEST_CASE("cf_expand_until_q_exceeds grows the table as needed") {
    CFExpansion cf = cf_expand_until_q_exceeds(phi_spec(), 1000);
    ConvergentTable t = convergent_table(cf);
    CHECK(t.q(t.size()) > 1000);
    CHECK_THROWS_AS(cf_expand_until_q_exceeds(RealSpec(ExplicitCF{0, {Int(3)}}), 1000),
                    precision_exhausted_error);
    CHECK_THROWS_AS(cf_expand_until_q_exceeds(make_rational(Rational(1, 3)), 10), domain_error);
}
