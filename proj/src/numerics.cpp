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

#include "pncp/numerics.hpp"

#include <cmath>
#include <string>

namespace pncp {

void require_hermitian(const Matrix& m, double eps) {
    if (m.rows() != m.cols()) {
        throw NotSquare("matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
    }
    const double diff = (m - m.adjoint()).norm();
    if (diff > eps * m.norm()) {
        throw NotHermitian("||M - M^dag|| = " + std::to_string(diff) +
                           " exceeds relative bound");
    }
}

EigenDecomposition herm_eigs(const Matrix& m, const Tolerances& tol) {
    require_hermitian(m, tol.eps_eig);

    // Symmetrize to absorb rounding-level asymmetry that already passed the
    // relative hermiticity check.
    const Matrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericFailure("Hermitian eigensolver did not converge");
    }

    EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};

    const auto n = m.rows();
    if (n > 0) {
        const double scale =
            std::max(std::abs(out.values(0)), std::abs(out.values(n - 1)));
        const Matrix residual =
            m * out.vectors - out.vectors * out.values.asDiagonal();
        for (Eigen::Index k = 0; k < n; ++k) {
            if (residual.col(k).norm() > tol.eps_eig * std::max(scale, 1e-300)) {
                throw NumericFailure("eigenpair residual exceeds contract");
            }
        }
        const double unit =
            (out.vectors.adjoint() * out.vectors - Matrix::Identity(n, n))
                .cwiseAbs()
                .maxCoeff();
        if (unit > tol.eps_eig) {
            throw NumericFailure("eigenvector matrix is not unitary");
        }
    }
    return out;
}

PsdVerdict is_psd(const Matrix& m, const Tolerances& tol) {
    const EigenDecomposition eig = herm_eigs(m, tol);
    const auto n = m.rows();
    PsdVerdict v;
    v.min_eigenvalue = eig.values(0);
    v.witness_vector = eig.vectors.col(0);
    const double scale =
        std::max(std::abs(eig.values(0)), std::abs(eig.values(n - 1)));
    v.is_psd = v.min_eigenvalue >= -tol.eps_psd * scale;
    return v;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

Matrix partial_transpose(const Matrix& m, int d1, int d2, Subsystem which) {
    if (d1 < 1 || d2 < 1 || m.rows() != m.cols() ||
        m.rows() != Eigen::Index(d1) * d2) {
        throw DimensionMismatch("partial_transpose expects a square matrix of size d1*d2");
    }
    Matrix out(m.rows(), m.cols());
    for (int i = 0; i < d1; ++i) {
        for (int j = 0; j < d1; ++j) {
            for (int k = 0; k < d2; ++k) {
                for (int l = 0; l < d2; ++l) {
                    if (which == Subsystem::First) {
                        out(i * d2 + k, j * d2 + l) = m(j * d2 + k, i * d2 + l);
                    } else {
                        out(i * d2 + k, j * d2 + l) = m(i * d2 + l, j * d2 + k);
                    }
                }
            }
        }
    }
    return out;
}

double operator_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

double trace_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return Eigen::JacobiSVD<Matrix>(m).singularValues().sum();
}

PsdSqrt psd_sqrt_inv(const Matrix& m, const Tolerances& tol) {
    const EigenDecomposition eig = herm_eigs(m, tol);
    const auto n = m.rows();
    const double scale =
        std::max(std::abs(eig.values(0)), std::abs(eig.values(n - 1)));
    const double cutoff = tol.eps_psd * scale;
    if (eig.values(0) < -cutoff) {
        throw NotPsd("minimum eigenvalue " + std::to_string(eig.values(0)) +
                     " below PSD cutoff");
    }

    RealVector root(n), inv_root(n);
    bool singular = false;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double lambda = eig.values(k);
        root(k) = std::sqrt(std::max(lambda, 0.0));
        if (lambda > cutoff) {
            inv_root(k) = 1.0 / root(k);
        } else {
            inv_root(k) = 0.0;
            singular = true;
        }
    }
    PsdSqrt out;
    out.sqrt = eig.vectors * root.asDiagonal() * eig.vectors.adjoint();
    out.inv_sqrt = eig.vectors * inv_root.asDiagonal() * eig.vectors.adjoint();
    out.singular = singular;
    return out;
}

Matrix realign(const Matrix& m, int d1, int d2) {
    if (d1 < 1 || d2 < 1 || m.rows() != m.cols() ||
        m.rows() != Eigen::Index(d1) * d2) {
        throw DimensionMismatch("realign expects a square matrix of size d1*d2");
    }
    Matrix out(Eigen::Index(d1) * d1, Eigen::Index(d2) * d2);
    for (int i = 0; i < d1; ++i) {
        for (int j = 0; j < d1; ++j) {
            for (int k = 0; k < d2; ++k) {
                for (int l = 0; l < d2; ++l) {
                    out(i * d1 + j, k * d2 + l) = m(i * d2 + k, j * d2 + l);
                }
            }
        }
    }
    return out;
}

double realign_trace_norm(const Matrix& m, int d1, int d2) {
    return trace_norm(realign(m, d1, d2));
}

}  // namespace pncp
