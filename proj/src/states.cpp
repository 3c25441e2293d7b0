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

#include "pncp/states.hpp"

#include <cmath>
#include <string>

namespace pncp {

BipartiteState horodecki_state(double b) {
    if (!(b >= 0.0 && b <= 1.0)) {
        throw ParameterOutOfRange("horodecki_state requires 0 <= b <= 1");
    }
    const double norm = 1.0 + 7.0 * b;
    const double vb = b / norm;
    const double vh = (1.0 + b) / 2.0 / norm;
    const double vs = std::sqrt(1.0 - b * b) / 2.0 / norm;

    Matrix m = Matrix::Zero(8, 8);
    for (int i : {0, 1, 2, 3, 5, 6}) m(i, i) = vb;
    m(4, 4) = vh;
    m(7, 7) = vh;
    m(0, 5) = m(5, 0) = vb;
    m(1, 6) = m(6, 1) = vb;
    m(2, 7) = m(7, 2) = vb;
    m(4, 7) = m(7, 4) = vs;

    return {std::move(m), 2, 4, "horodecki"};
}

BipartiteState npt_state() {
    const double w = 1.0 / 3.0;
    Matrix m = Matrix::Zero(8, 8);
    m(0, 0) = w;
    m(0, 5) = m(5, 0) = w;
    m(5, 5) = w;
    m(7, 7) = w;
    return {std::move(m), 2, 4, "npt"};
}

void validate_state(const BipartiteState& rho, const Tolerances& tol) {
    if (rho.d1 < 1 || rho.d2 < 1 ||
        rho.matrix.rows() != Eigen::Index(rho.d1) * rho.d2 ||
        rho.matrix.rows() != rho.matrix.cols()) {
        throw DimensionMismatch("state matrix must be square of size d1*d2");
    }
    require_hermitian(rho.matrix, tol.eps_eig);
    const Complex tr = rho.matrix.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > tol.eps_match) {
        throw ParameterOutOfRange("state trace differs from 1");
    }
    if (!is_psd(rho.matrix, tol).is_psd) {
        throw NotPsd("state is not positive semidefinite");
    }
}

PptVerdict is_ppt(const BipartiteState& rho, const Tolerances& tol) {
    const Matrix pt =
        partial_transpose(rho.matrix, rho.d1, rho.d2, Subsystem::First);
    const PsdVerdict v = is_psd(pt, tol);
    return {v.is_psd, v.min_eigenvalue};
}

RealignmentProbe realignment_value(const BipartiteState& rho,
                                   const Tolerances& tol) {
    const double value = realign_trace_norm(rho.matrix, rho.d1, rho.d2);
    return {value, value > 1.0 + tol.eps_match};
}

}  // namespace pncp
