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

#ifndef PNCP_PMAP_HPP
#define PNCP_PMAP_HPP

#include <optional>
#include <string>

#include "pncp/numerics.hpp"

namespace pncp {

// The map family under study:
//
//   Phi_{alpha,beta}(A) = alpha ((A + A^T) (x) I_n)
//                       + beta (|psi+><psi+|)^Gamma,
//
// with |psi+> = (1/sqrt(n)) sum_i |ii> and Gamma the partial transpose.
// Every map output is n^2 x n^2. Analysis routines below are for n = 2.

/// Parameters (n, alpha, beta) selecting one member of the family; n >= 2.
struct MapParams {
    int n = 2;
    double alpha = 0.0;
    double beta = 0.0;
};

/// Entries of the real 2x2 input matrix [[a, b], [c, d]] with a, d >= 0.
struct Input2x2 {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

/// 2x2 blocks of a 4x4 map output M = [[X, Y], [Y^dag, Z]]. The contraction
/// X^{-1/2} Y Z^{-1/2} is present when X and Z are PSD (pseudo-inverse on
/// singular support, `singular_support` then set); otherwise it is absent and
/// `absent_reason` says why.
struct BlockSplit {
    Matrix x, y, z;
    std::optional<Matrix> contraction;
    bool singular_support = false;
    std::string absent_reason;
};

/// Closed-form characteristic data of the contraction Gram matrix V^dag V.
/// k1/k2 are the coefficients of the claimed characteristic polynomial
/// lambda^2 - k1 lambda + k2/4; lambda1/lambda2 its roots (absent when the
/// discriminant k1^2 - k2 is negative). gram_trace = tr(V^dag V) and
/// gram_det = det(V^dag V) are recomputed from the numeric contraction for
/// auditing and are absent when the contraction itself is.
struct CharCoeffs {
    double k1 = 0.0;
    double k2 = 0.0;
    double discriminant = 0.0;
    std::optional<double> lambda1, lambda2;
    std::optional<double> gram_trace, gram_det;
};

/// Tri-state outcome for a closed-form inequality.
enum class Flag { Holds, Fails, Inapplicable };

/// Closed-form positivity conditions evaluated verbatim, next to the
/// numeric ground truth for the same 4x4 output.
struct PositivityConditions {
    Flag x_block = Flag::Inapplicable;     ///< 2a*alpha >= 0 and 4a*alpha + beta >= 0
    Flag z_block = Flag::Inapplicable;     ///< 2d*alpha >= 0 and 4d*alpha + beta >= 0
    Flag aggregate = Flag::Inapplicable;   ///< 2*alpha*(a+d) + beta >= 0 and alpha >= 0
    Flag contraction_bound = Flag::Inapplicable; ///< 4(1 + sqrt(k1^2 - k2) - k2) >= 1
    bool output_psd = false;               ///< is_psd(closed_form_2x2(...))
    double min_eigenvalue = 0.0;
};

/// Projector onto the maximally entangled vector of C^n (x) C^n.
Matrix max_entangled_projector(int n);

/// Apply Phi_{alpha,beta} to an n x n matrix; general n >= 2.
Matrix apply_map(const MapParams& params, const Matrix& a);

/// The explicit 4x4 output template for n = 2; agrees with apply_map
/// entrywise, exactly.
Matrix closed_form_2x2(const MapParams& params, const Input2x2& in);

/// Split a Hermitian 4x4 into 2x2 blocks and assemble the numeric
/// contraction when possible.
BlockSplit block_split(const Matrix& out4, const Tolerances& tol = {});

/// The closed-form contraction entries
///   [[ alpha(b+c)/sqrt(d alpha (4a alpha + beta)), 0 ],
///    [ beta/(4 alpha sqrt(ad)), alpha(b+c)/sqrt(a alpha (4d alpha + beta)) ]].
/// Throws SingularBlock when a denominator is not strictly positive.
Matrix analytic_contraction(const Input2x2& in, const MapParams& params);

/// Closed-form k1/k2/lambda1/lambda2 with the Gram-matrix ground truth
/// attached. Throws SingularBlock unless a, d, alpha > 0 and
/// 4a*alpha + beta > 0.
CharCoeffs analytic_char_coeffs(const Input2x2& in, const MapParams& params,
                                const Tolerances& tol = {});

/// Evaluate every closed-form positivity inequality verbatim and attach the
/// numeric PSD verdict of the 4x4 output. Never throws; inequalities whose
/// formulas divide by zero (or take the square root of a negative
/// discriminant) come back Inapplicable.
PositivityConditions analytic_positivity_conditions(const Input2x2& in,
                                                    const MapParams& params,
                                                    const Tolerances& tol = {});

/// Smallest alpha for which Phi_{alpha,-gamma}(A) is PSD, found by bisection
/// against the is_psd oracle. Requires A + A^T PSD (which makes PSD-ness
/// monotone in alpha) and gamma > 0. Returns alpha* with the output PSD at
/// alpha* and not PSD at alpha* - tol.
double min_alpha_threshold(const Matrix& a, double gamma, double tol = 1e-9,
                           const Tolerances& num = {});

}  // namespace pncp

#endif
