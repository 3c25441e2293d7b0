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

#ifndef PNCP_CHOI_HPP
#define PNCP_CHOI_HPP

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "pncp/pmap.hpp"

namespace pncp {

/// Choi matrix of Phi_{alpha,beta} for n = 2: an 8x8 Hermitian operator on
/// C^2 (x) C^4 whose (i,j) block is the map applied to |i><j|. The first
/// tensor factor indexes the 2-dim input space.
struct ChoiOperator {
    Matrix matrix;
    std::pair<int, int> dims{2, 4};
    MapParams params;
};

/// 4x4 blocks of the Choi matrix, [[P, Q], [Q^dag, R]].
struct ChoiBlocks {
    Matrix p, q, r;
};

/// Certificate that a Choi matrix is not PSD: a unit vector with negative
/// quadratic form, plus (when one of the closed-form 2x2 principal minors
/// applies) the 0-based row/column pair with a negative determinant.
struct CpCertificate {
    Vector witness_vector;
    double quad_form = 0.0;
    std::optional<std::pair<int, int>> minor_rows;
    double minor_det = 0.0;
};

struct CpResult {
    bool completely_positive = false;
    double min_eigenvalue = 0.0;
    std::optional<CpCertificate> certificate;
};

/// Generalized Schur-complement test of the Choi blocks. For a Hermitian
/// [[P, Q], [Q^dag, R]], PSD holds iff R is PSD, (I - R R^+) Q^dag = 0 and
/// P - Q R^+ Q^dag is PSD (Moore-Penrose pseudo-inverse). The strict form
/// with R^{-1} is also evaluated when R is invertible.
struct SchurReport {
    ChoiBlocks blocks;
    bool r_psd = false;
    bool range_ok = false;
    bool schur_psd = false;
    bool psd = false;  ///< conjunction of the three clauses
    std::optional<bool> strict_schur_psd;
};

/// Analytic spectrum of the Choi matrix at (alpha, -gamma) next to the
/// numeric one. `mu` evaluates the closed-form eigenvalue expressions
/// verbatim, whose inner radical reads sqrt(16 alpha^2 + 4 alpha^2 gamma^2
/// + gamma^4); `mu_alt` evaluates the alternate reading with 16 alpha^4 as
/// the leading term. Entries are NaN when the expression takes the square
/// root of a negative number. dev/dev_alt give, per entry, the distance to
/// the nearest numeric eigenvalue.
struct SpectrumAudit {
    std::array<double, 8> mu{};
    std::array<double, 8> mu_alt{};
    RealVector numeric;
    std::array<double, 8> dev{};
    std::array<double, 8> dev_alt{};
};

/// Choi matrix of an arbitrary linear map given as a callable on the n x n
/// matrix units. The callable must return a fixed square size for every
/// basis input (DimensionMismatch otherwise).
Matrix choi_from_map(const std::function<Matrix(const Matrix&)>& map, int n);

/// The explicit 8x8 Choi template for Phi_{alpha,beta}; agrees with
/// choi_from_map entrywise.
ChoiOperator choi_closed_form(double alpha, double beta);

/// Complete-positivity test: PSD-ness of the Choi matrix. When false, the
/// certificate carries a negative-direction unit vector and, where
/// applicable, an explicit 2x2 principal minor with negative determinant.
CpResult is_completely_positive(const MapParams& params,
                                const Tolerances& tol = {});

/// Block split of the Choi matrix plus the generalized Schur evaluation.
SchurReport choi_blocks(const ChoiOperator& c, const Tolerances& tol = {});

/// Evaluate the closed-form eigenvalue expressions of the Choi matrix at
/// (alpha, -gamma) under both readings of the inner radical and compare with
/// the numeric spectrum.
SpectrumAudit analytic_choi_eigs(double alpha, double gamma,
                                 const Tolerances& tol = {});

}  // namespace pncp

#endif
