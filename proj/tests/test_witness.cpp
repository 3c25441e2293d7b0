#include <cmath>

#include "doctest.h"
#include "pncp/witness.hpp"

using namespace pncp;

namespace {

WitnessCandidate witness34() {
    return witness_from_choi(choi_closed_form(0.75, -2.0));
}

WitnessCandidate witness18() {
    return witness_from_choi(choi_closed_form(0.125, -1.0));
}

// Choi matrix of the transpose map on the first two levels of the second
// factor, embedded in 2x4: block positive but not PSD.
WitnessCandidate embedded_swap() {
    Matrix w = Matrix::Zero(8, 8);
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            for (int j = 0; j < 2; ++j) {
                for (int l = 0; l < 2; ++l) {
                    if (i == l && k == j) w(i * 4 + k, j * 4 + l) = 1.0;
                }
            }
        }
    }
    return {w, 2, 4, "embedded-swap"};
}

}  // namespace

TEST_CASE("expectation: examples") {
    const WitnessCandidate identity{Matrix::Identity(8, 8), 2, 4, "identity"};
    CHECK(expectation(identity, horodecki_state(0.3)) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(expectation(identity, npt_state()) ==
          doctest::Approx(1.0).epsilon(1e-13));

    const WitnessCandidate w34 = witness34();
    for (double b : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double formula = (b - 1.0) / (4.0 * (1.0 + 7.0 * b));
        CHECK(std::abs(expectation(w34, horodecki_state(b)) - formula) <=
              1e-12);
    }
    CHECK(expectation(w34, horodecki_state(0.0)) == doctest::Approx(-0.25));
    CHECK(expectation(w34, horodecki_state(0.5)) ==
          doctest::Approx(-1.0 / 36.0));

    CHECK(std::abs(expectation(witness18(), npt_state()) - (-1.0 / 6.0)) <=
          1e-12);
}

TEST_CASE("expectation: error paths") {
    const WitnessCandidate small{Matrix::Identity(4, 4), 2, 2, "small"};
    CHECK_THROWS_AS(expectation(small, npt_state()), DimensionMismatch);

    // A non-Hermitian operator makes the trace pick up an imaginary part.
    Matrix skew = Matrix::Zero(8, 8);
    skew(0, 1) = Complex(0.0, 1.0);
    Matrix rho = Matrix::Zero(8, 8);
    rho(0, 0) = rho(1, 1) = rho(0, 1) = rho(1, 0) = 0.5;
    CHECK_THROWS_AS(
        expectation({skew, 2, 4, "skew"}, {rho, 2, 4, "pure"}),
        NonRealTrace);
}

TEST_CASE("expectation is linear in both arguments") {
    const WitnessCandidate w34 = witness34();
    const WitnessCandidate w18 = witness18();
    const BipartiteState rho1 = horodecki_state(0.2);
    const BipartiteState rho2 = horodecki_state(0.8);

    WitnessCandidate combo{2.0 * w34.op - 0.5 * w18.op, 2, 4, "combo"};
    CHECK(expectation(combo, rho1) ==
          doctest::Approx(2.0 * expectation(w34, rho1) -
                          0.5 * expectation(w18, rho1))
              .epsilon(1e-12));

    BipartiteState mix{0.3 * rho1.matrix + 0.7 * rho2.matrix, 2, 4, "mix"};
    CHECK(expectation(w34, mix) ==
          doctest::Approx(0.3 * expectation(w34, rho1) +
                          0.7 * expectation(w34, rho2))
              .epsilon(1e-12));
}

TEST_CASE("detect: verdicts and scale invariance") {
    const WitnessCandidate w34 = witness34();
    DetectionReport at_half = detect(w34, horodecki_state(0.5), 0.5);
    CHECK(at_half.detected);
    CHECK(at_half.expectation == doctest::Approx(-1.0 / 36.0));
    CHECK(at_half.param == 0.5);

    DetectionReport at_one = detect(w34, horodecki_state(1.0), 1.0);
    CHECK_FALSE(at_one.detected);
    CHECK(std::abs(at_one.expectation) <= 1e-14);

    CHECK(detect(witness18(), npt_state()).detected);

    for (double scale : {0.01, 3.0, 1000.0}) {
        WitnessCandidate scaled{scale * w34.op, 2, 4, "scaled"};
        CHECK(detect(scaled, horodecki_state(0.5), 0.5).detected ==
              at_half.detected);
        CHECK(detect(scaled, horodecki_state(1.0), 1.0).detected ==
              at_one.detected);
    }
}

TEST_CASE("detection_curve") {
    const WitnessCandidate w34 = witness34();
    const auto reports = detection_curve(w34, {0.0, 0.5, 1.0});
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].expectation == doctest::Approx(-0.25));
    CHECK(reports[1].expectation == doctest::Approx(-1.0 / 36.0));
    CHECK(std::abs(reports[2].expectation) <= 1e-14);
    CHECK(reports[0].detected);
    CHECK_FALSE(reports[2].detected);

    std::vector<double> grid(101);
    for (int k = 0; k <= 100; ++k) grid[k] = double(k) / 100.0;
    double worst = 0.0;
    for (const auto& r : detection_curve(w34, grid)) {
        const double b = *r.param;
        worst = std::max(
            worst,
            std::abs(r.expectation - (b - 1.0) / (4.0 * (1.0 + 7.0 * b))));
    }
    CHECK(worst <= 1e-12);

    CHECK_THROWS_AS(detection_curve(w34, {0.5, 1.5}), ParameterOutOfRange);
}

TEST_CASE("block_positivity_min: identity operator") {
    const WitnessCandidate identity{Matrix::Identity(8, 8), 2, 4, "identity"};
    const BlockPositivityResult r = block_positivity_min(identity, {8, 0, 100});
    CHECK(r.min_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.status == BlockPositivityStatus::CertifiedNonnegative);
}

TEST_CASE("block_positivity_min: both reference witnesses are refuted") {
    const WitnessCandidate w34 = witness34();
    // The basis start |0> (x) |3> reads the -1 diagonal entry directly.
    CHECK(w34.op(3, 3).real() == -1.0);
    const BlockPositivityResult r34 = block_positivity_min(w34);
    CHECK(r34.status == BlockPositivityStatus::CounterexampleFound);
    CHECK(r34.min_value <= -1.0 + 1e-9);

    const WitnessCandidate w18 = witness18();
    CHECK(w18.op(0, 0).real() == -0.25);
    const BlockPositivityResult r18 = block_positivity_min(w18);
    CHECK(r18.status == BlockPositivityStatus::CounterexampleFound);
    CHECK(r18.min_value <= -0.25 + 1e-9);

    // The reported minimum is the quadratic form at the reported argmin.
    for (const auto* r : {&r34, &r18}) {
        Vector prod(8);
        for (int i = 0; i < 2; ++i) {
            for (int k = 0; k < 4; ++k) {
                prod(i * 4 + k) = r->argmin_a(i) * r->argmin_b(k);
            }
        }
        const WitnessCandidate& w = (r == &r34) ? w34 : w18;
        CHECK((prod.adjoint() * w.op * prod)(0, 0).real() ==
              doctest::Approx(r->min_value).epsilon(1e-10));
    }
}

TEST_CASE("block_positivity_min: block positive operator survives 64 restarts") {
    const WitnessCandidate w = embedded_swap();
    CHECK_FALSE(is_psd(w.op).is_psd);  // not PSD, eigenvalue -1
    const BlockPositivityResult r = block_positivity_min(w, {64, 0, 500});
    CHECK(r.status != BlockPositivityStatus::CounterexampleFound);
    CHECK(r.min_value >= -1e-9 * operator_norm(w.op));

    CHECK_THROWS_AS(block_positivity_min(w, {0, 0, 10}), ParameterOutOfRange);
}

TEST_CASE("witness_audit") {
    const WitnessAudit a34 = witness_audit({2, 0.75, -2.0});
    CHECK(a34.verdict == WitnessVerdict::Refuted);
    CHECK_FALSE(a34.cp.completely_positive);
    CHECK(a34.block.min_value <= -1.0 + 1e-9);

    const WitnessAudit a18 = witness_audit({2, 0.125, -1.0});
    CHECK(a18.verdict == WitnessVerdict::Refuted);
    CHECK(a18.block.min_value <= -0.25 + 1e-9);

    const WitnessAudit zero = witness_audit({2, 0.0, 0.0});
    CHECK(zero.verdict == WitnessVerdict::Inconclusive);
    CHECK(zero.cp.completely_positive);
}

TEST_CASE("witness_audit: verdict never contradicts its own certificate") {
    const SeeSawOptions quick{2, 0, 100};
    for (double alpha : {-1.0, 0.0, 0.5, 1.0}) {
        for (double beta : {-2.0, -0.5, 0.5, 2.0}) {
            const WitnessAudit audit = witness_audit({2, alpha, beta}, quick);
            const bool counterexample =
                audit.block.status == BlockPositivityStatus::CounterexampleFound;
            const bool contradiction =
                audit.verdict == WitnessVerdict::ValidCandidate &&
                counterexample;
            CHECK_FALSE(contradiction);
        }
    }
}
