/**
 * Copyright 2026 The pncp developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PNCP_WITNESS_HPP
#define PNCP_WITNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pncp/choi.hpp"
#include "pncp/states.hpp"

namespace pncp {

/// Candidate entanglement witness: a Hermitian operator on C^d1 (x) C^d2.
/// A valid witness has nonnegative expectation on every separable state and
/// a negative expectation on at least one entangled state.
struct WitnessCandidate {
    Matrix op;
    int d1 = 2;
    int d2 = 4;
    std::string label = "external";
};

struct DetectionReport {
    std::string witness_label;
    std::string state_label;
    std::optional<double> param;  ///< state parameter (b for the horodecki family)
    double expectation = 0.0;
    bool detected = false;
};

enum class BlockPositivityStatus {
    CertifiedNonnegative,
    CounterexampleFound,
    Inconclusive,
};

/// Result of the product-state minimization of <a (x) b|W|a (x) b>.
/// min_value equals the quadratic form at (argmin_a, argmin_b); it is an
/// upper bound on the true minimum over product states. A counterexample
/// refutes block positivity; certification is conservative (the see-saw is a
/// heuristic) and Inconclusive is an honest outcome.
struct BlockPositivityResult {
    double min_value = 0.0;
    Vector argmin_a;
    Vector argmin_b;
    BlockPositivityStatus status = BlockPositivityStatus::Inconclusive;
};

struct SeeSawOptions {
    int restarts = 64;  ///< random starts, added to the deterministic basis starts
    std::uint64_t seed = 0;
    int max_iters = 500;
};

enum class WitnessVerdict { ValidCandidate, Refuted, Inconclusive };

struct WitnessAudit {
    WitnessVerdict verdict = WitnessVerdict::Inconclusive;
    CpResult cp;
    BlockPositivityResult block;
};

/// Wrap a Choi operator as a witness candidate.
WitnessCandidate witness_from_choi(const ChoiOperator& choi);

/// Tr(W rho). Throws NonRealTrace if the imaginary residue exceeds
/// eps_match.
double expectation(const WitnessCandidate& w, const BipartiteState& rho,
                   const Tolerances& tol = {});

/// Detection verdict: expectation < -eps_psd * ||W|| (scale-invariant).
DetectionReport detect(const WitnessCandidate& w, const BipartiteState& rho,
                       std::optional<double> param = std::nullopt,
                       const Tolerances& tol = {});

/// One detection report per b on the horodecki family; grid must lie in
/// [0, 1].
std::vector<DetectionReport> detection_curve(const WitnessCandidate& w,
                                             const std::vector<double>& grid,
                                             const Tolerances& tol = {});

/// See-saw minimization of the witness over pure product states. Starts from
/// every computational product basis pair plus `restarts` seeded random
/// product vectors; alternates smallest-eigenvector updates on the two
/// factors until the value stalls.
BlockPositivityResult block_positivity_min(const WitnessCandidate& w,
                                           const SeeSawOptions& opts = {},
                                           const Tolerances& tol = {});

/// Witness validity audit of the Choi operator at the given parameters:
/// requires non-complete-positivity, then searches for a product-state
/// counterexample to block positivity.
WitnessAudit witness_audit(const MapParams& params,
                           const SeeSawOptions& opts = {},
                           const Tolerances& tol = {});

}  // namespace pncp

#endif
