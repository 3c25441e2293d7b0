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

#ifndef PNCP_NUMERICS_HPP
#define PNCP_NUMERICS_HPP

#include "pncp/errors.hpp"
#include "pncp/matrix.hpp"

namespace pncp {

/// Tolerances used across the toolkit. eps_psd and the hermiticity check are
/// relative to the matrix scale so behaviour is size-independent.
struct Tolerances {
    double eps_psd = 1e-9;    ///< PSD cutoff, relative to the operator norm
    double eps_eig = 1e-10;   ///< eigenresidual / hermiticity bound
    double eps_match = 1e-12; ///< entrywise golden comparisons
};

/// Outcome of a positive-semidefiniteness test. The witness vector is a unit
/// eigenvector achieving the minimum eigenvalue, so v^dag M v = min_eigenvalue.
struct PsdVerdict {
    bool is_psd = false;
    double min_eigenvalue = 0.0;
    Vector witness_vector;
};

/// Hermitian eigendecomposition, eigenvalues ascending, eigenvectors as
/// orthonormal columns in matching order.
struct EigenDecomposition {
    RealVector values;
    Matrix vectors;
};

/// Square root and pseudo-inverse square root of a PSD matrix. The inverse is
/// formed on eigenspaces above the PSD cutoff; `singular` reports whether any
/// eigenspace was dropped.
struct PsdSqrt {
    Matrix sqrt;
    Matrix inv_sqrt;
    bool singular = false;
};

enum class Subsystem { First, Second };

/// Throws NotSquare / NotHermitian unless ||M - M^dag|| <= eps * ||M||
/// (Frobenius norms).
void require_hermitian(const Matrix& m, double eps);

/// Eigendecomposition of a Hermitian matrix. Verifies the residual contract
/// ||M v - lambda v|| <= eps_eig * ||M|| per pair and the orthonormality of
/// the eigenvector columns; throws NumericFailure if either is violated.
EigenDecomposition herm_eigs(const Matrix& m, const Tolerances& tol = {});

/// PSD test consistent with herm_eigs: verdict is
/// min_eigenvalue >= -eps_psd * ||M||.
PsdVerdict is_psd(const Matrix& m, const Tolerances& tol = {});

/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);

/// Transpose of one tensor factor of a bipartite operator on
/// C^d1 (x) C^d2. Involutive; the two subsystem choices give transposed
/// results and hence identical spectra.
Matrix partial_transpose(const Matrix& m, int d1, int d2,
                         Subsystem which = Subsystem::First);

/// Largest singular value.
double operator_norm(const Matrix& m);

/// Sum of singular values.
double trace_norm(const Matrix& m);

/// Square root and pseudo-inverse square root of a PSD matrix.
/// Throws NotPsd when an eigenvalue falls below -eps_psd * ||M||.
PsdSqrt psd_sqrt_inv(const Matrix& m, const Tolerances& tol = {});

/// Realignment R(M)[(i,j),(k,l)] = M[(i,k),(j,l)] of a bipartite operator;
/// the result is d1^2 x d2^2.
Matrix realign(const Matrix& m, int d1, int d2);

/// Trace norm of the realigned matrix; exceeds 1 only for entangled states.
double realign_trace_norm(const Matrix& m, int d1, int d2);

}  // namespace pncp

#endif
