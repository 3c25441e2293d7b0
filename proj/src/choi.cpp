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

#include "pncp/choi.hpp"

#include <cmath>
#include <limits>

namespace pncp {

namespace {

// Moore-Penrose pseudo-inverse of a Hermitian matrix via its
// eigendecomposition; eigenvalues of magnitude <= cutoff are dropped.
Matrix hermitian_pinv(const EigenDecomposition& eig, double cutoff) {
    RealVector inv(eig.values.size());
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
        inv(k) = std::abs(eig.values(k)) > cutoff ? 1.0 / eig.values(k) : 0.0;
    }
    return eig.vectors * inv.asDiagonal() * eig.vectors.adjoint();
}

double nearest_distance(double x, const RealVector& values) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        best = std::min(best, std::abs(x - values(k)));
    }
    return best;
}

}  // namespace

Matrix choi_from_map(const std::function<Matrix(const Matrix&)>& map, int n) {
    if (n < 1) throw BadDimension("choi_from_map requires n >= 1");

    Matrix unit = Matrix::Zero(n, n);
    unit(0, 0) = 1.0;
    const Matrix first = map(unit);
    const Eigen::Index m = first.rows();
    if (first.cols() != m) {
        throw DimensionMismatch("map callable must return square matrices");
    }

    Matrix out(Eigen::Index(n) * m, Eigen::Index(n) * m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Matrix block;
            if (i == 0 && j == 0) {
                block = first;
            } else {
                unit.setZero();
                unit(i, j) = 1.0;
                block = map(unit);
                if (block.rows() != m || block.cols() != m) {
                    throw DimensionMismatch(
                        "map callable returned inconsistent output size");
                }
            }
            out.block(i * m, j * m, m, m) = block;
        }
    }
    return out;
}

ChoiOperator choi_closed_form(double alpha, double beta) {
    const double s = beta / 2.0;
    const double t = alpha;
    const double g = 2.0 * alpha;
    const double h = 2.0 * alpha + beta / 2.0;

    Matrix c = Matrix::Zero(8, 8);
    auto set = [&c](int i, int j, double v) {
        c(i, j) = v;
        c(j, i) = v;
    };
    c(0, 0) = h;
    c(1, 1) = g;
    c(3, 3) = s;
    c(4, 4) = s;
    c(6, 6) = g;
    c(7, 7) = h;
    set(0, 4, s);
    set(0, 6, t);
    set(1, 2, s);
    set(1, 6, s);
    set(1, 7, t);
    set(2, 4, t);
    set(2, 5, s);
    set(3, 5, t);
    set(3, 7, s);
    set(5, 6, s);

    ChoiOperator out;
    out.matrix = std::move(c);
    out.params = MapParams{2, alpha, beta};
    return out;
}

CpResult is_completely_positive(const MapParams& params,
                                const Tolerances& tol) {
    if (params.n != 2) {
        throw BadDimension("is_completely_positive is defined for n = 2");
    }
    const ChoiOperator choi = choi_closed_form(params.alpha, params.beta);
    const PsdVerdict verdict = is_psd(choi.matrix, tol);

    CpResult out;
    out.completely_positive = verdict.is_psd;
    out.min_eigenvalue = verdict.min_eigenvalue;
    if (verdict.is_psd) return out;

    CpCertificate cert;
    cert.witness_vector = verdict.witness_vector;
    cert.quad_form = verdict.min_eigenvalue;
    // Rows {1,2}: [[2a, b/2], [b/2, 0]], det = -beta^2/4.
    // Rows {2,4}: [[0, a], [a, b/2]], det = -alpha^2.
    if (params.beta != 0.0) {
        cert.minor_rows = {1, 2};
    } else if (params.alpha != 0.0) {
        cert.minor_rows = {2, 4};
    }
    if (cert.minor_rows) {
        const auto [r0, r1] = *cert.minor_rows;
        const Complex det = choi.matrix(r0, r0) * choi.matrix(r1, r1) -
                            choi.matrix(r0, r1) * choi.matrix(r1, r0);
        cert.minor_det = det.real();
    }
    out.certificate = std::move(cert);
    return out;
}

SchurReport choi_blocks(const ChoiOperator& c, const Tolerances& tol) {
    if (c.matrix.rows() != 8 || c.matrix.cols() != 8) {
        throw DimensionMismatch("choi_blocks expects an 8x8 Choi matrix");
    }
    require_hermitian(c.matrix, tol.eps_eig);

    SchurReport out;
    out.blocks.p = c.matrix.block(0, 0, 4, 4);
    out.blocks.q = c.matrix.block(0, 4, 4, 4);
    out.blocks.r = c.matrix.block(4, 4, 4, 4);

    const EigenDecomposition reig = herm_eigs(out.blocks.r, tol);
    const double rscale =
        std::max(std::abs(reig.values(0)), std::abs(reig.values(3)));
    const double cutoff = tol.eps_psd * rscale;
    out.r_psd = reig.values(0) >= -cutoff;

    const Matrix rpinv = hermitian_pinv(reig, cutoff);
    const Matrix range_residual =
        (Matrix::Identity(4, 4) - out.blocks.r * rpinv) *
        out.blocks.q.adjoint();
    out.range_ok = range_residual.norm() <= tol.eps_psd * c.matrix.norm();

    const Matrix schur =
        out.blocks.p - out.blocks.q * rpinv * out.blocks.q.adjoint();
    out.schur_psd = is_psd(schur, tol).is_psd;
    out.psd = out.r_psd && out.range_ok && out.schur_psd;

    if (std::abs(reig.values(0)) > cutoff && std::abs(reig.values(1)) > cutoff &&
        std::abs(reig.values(2)) > cutoff && std::abs(reig.values(3)) > cutoff) {
        const Matrix rinv = hermitian_pinv(reig, 0.0);
        out.strict_schur_psd =
            is_psd(out.blocks.p - out.blocks.q * rinv * out.blocks.q.adjoint(),
                   tol)
                .is_psd;
    }
    return out;
}

SpectrumAudit analytic_choi_eigs(double alpha, double gamma,
                                 const Tolerances& tol) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto safe_sqrt = [nan](double x) {
        return x >= 0.0 ? std::sqrt(x) : nan;
    };

    auto evaluate = [&](double inner_leading) {
        std::array<double, 8> mu{};
        const double r1 = safe_sqrt(4.0 * alpha * alpha + gamma * gamma);
        const double r2 = safe_sqrt(inner_leading +
                                    4.0 * alpha * alpha * gamma * gamma +
                                    gamma * gamma * gamma * gamma);
        mu[0] = (-gamma + r1) / 2.0;
        mu[1] = (-gamma - r1) / 2.0;
        mu[2] = (4.0 * alpha - gamma + r1) / 2.0;
        mu[3] = (4.0 * alpha - gamma - r1) / 2.0;
        const double plus = (4.0 * alpha * alpha + gamma * gamma + r2) / 2.0;
        const double minus = (4.0 * alpha * alpha + gamma * gamma - r2) / 2.0;
        mu[4] = alpha + safe_sqrt(plus);
        mu[5] = alpha + safe_sqrt(minus);
        mu[6] = alpha - safe_sqrt(plus);
        mu[7] = alpha - safe_sqrt(minus);
        return mu;
    };

    SpectrumAudit out;
    out.mu = evaluate(16.0 * alpha * alpha);
    out.mu_alt = evaluate(16.0 * alpha * alpha * alpha * alpha);
    out.numeric = herm_eigs(choi_closed_form(alpha, -gamma).matrix, tol).values;
    for (int k = 0; k < 8; ++k) {
        out.dev[k] =
            std::isnan(out.mu[k]) ? nan : nearest_distance(out.mu[k], out.numeric);
        out.dev_alt[k] = std::isnan(out.mu_alt[k])
                             ? nan
                             : nearest_distance(out.mu_alt[k], out.numeric);
    }
    return out;
}

}  // namespace pncp
