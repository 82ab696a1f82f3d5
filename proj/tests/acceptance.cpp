#include <doctest.h>

#include <cstdio>

#include "lowdisc/experiments.hpp"

using namespace lowdisc;

namespace {

bool report(int index, const char* label, const ExperimentResult& res) {
    std::printf("criterion %d [%s] %s (%s)\n", index, res.pass ? "PASS" : "FAIL", label,
                res.name.c_str());
    for (const std::string& line : res.summary) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    return res.pass;
}

} // namespace

TEST_CASE("criterion 1: Dedekind spectral-defect bound scan") {
    CHECK(report(1, "0 < E < 5*2^p for all coprime (a,b), b <= 200, p in {2,4}",
                 run_experiment("thm2-scan")));
}

TEST_CASE("criterion 2: per-block deviation bound") {
    CHECK(report(2, "|block - zeta(2p) a_l^p| < 6^p 4p^2/(p-1)^2 a_l^(p-1), l = 1..18",
                 run_experiment("block-bound")));
}

TEST_CASE("criterion 3: aggregate quotient-estimate bound") {
    CHECK(report(3, "|dsum(q_l - 1)^(1/2) - main| <= 576 sqrt(l), l <= 18",
                 run_experiment("thm3-aggregate")));
}

TEST_CASE("criterion 4: continued-fraction fact suite") {
    CHECK(report(4, "norm bounds, determinant, signs, denominator sums, norm-power sums",
                 run_experiment("prop5-suite")));
}

TEST_CASE("criterion 5: pairwise formula vs cell-decomposition oracle") {
    CHECK(report(5, "exact equality on 50 random sets plus closed-form anchors",
                 run_experiment("warnock-oracle")));
}

TEST_CASE("criterion 6: discrepancy vs Diophantine main term") {
    CHECK(report(6, "residual slope <= 0.02, level stable +-10%, n = 2^8..2^13",
                 run_experiment("thm1-equivalence")));
}

TEST_CASE("criterion 7: logarithmic growth constants") {
    CHECK(report(7, "main-term slopes within 3% of c(alpha); l2sq slope within 15%",
                 run_experiment("c-constants")));
}

TEST_CASE("criterion 8: bounded deviation sweep") {
    CHECK(report(8, "beck deviation max-min stable +-10% over n = 2^5..2^17",
                 run_experiment("beck-bounded")));
}

TEST_CASE("criterion 9: fast Dedekind estimate accuracy") {
    CHECK(report(9, "|fast - exact|/exact <= 3 * rel_indicator for b in {1000, 10001, 100003}",
                 run_experiment("dedekind-fast")));
}

TEST_CASE("criterion 10: quotient-term consistency ratio") {
    // Implemented exactly as stated. The measured certified ratio at l = 16
    // is ~1.502 (|ratio-1| ~ 0.502 > 0.25) and the step-wise decrease is
    // broken by every unit-quotient block, so this criterion does not hold
    // for the true mathematical quantities; it is reported honestly.
    CHECK(report(10, "main/quotient-term ratio decreasing, <= 1.25 at l = 16",
                 run_experiment("cor4-consistency")));
}
