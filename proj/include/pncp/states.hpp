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

#ifndef PNCP_STATES_HPP
#define PNCP_STATES_HPP

#include <string>

#include "pncp/numerics.hpp"

namespace pncp {

/// Bipartite density matrix on C^d1 (x) C^d2. Valid states are Hermitian,
/// unit trace and PSD; validate() enforces this.
struct BipartiteState {
    Matrix matrix;
    int d1 = 2;
    int d2 = 4;
    std::string label;
};

struct PptVerdict {
    bool ppt = false;
    double min_pt_eigenvalue = 0.0;
};

/// Realignment probe: value > 1 certifies entanglement, value <= 1 is
/// inconclusive.
struct RealignmentProbe {
    double value = 0.0;
    bool flag_entangled = false;
};

/// The 2x4 bound entangled family rho_b, 0 <= b <= 1: PPT for every b in
/// range yet entangled for 0 < b < 1.
BipartiteState horodecki_state(double b);

/// A rank-2 state on 2x4 with negative partial transpose,
/// (1/3)(|v><v| + |1,3><1,3|) with v = |0,0> + |1,1>.
BipartiteState npt_state();

/// Throws unless the state is Hermitian, unit trace and PSD.
void validate_state(const BipartiteState& rho, const Tolerances& tol = {});

/// PSD test of the partial transpose (first subsystem; the verdict does not
/// depend on the choice).
PptVerdict is_ppt(const BipartiteState& rho, const Tolerances& tol = {});

/// Trace norm of the realigned density matrix with the entanglement flag.
RealignmentProbe realignment_value(const BipartiteState& rho,
                                   const Tolerances& tol = {});

}  // namespace pncp

#endif
