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

#include "pncp/pmap.hpp"

#include <cmath>
#include <string>

namespace pncp {

Matrix max_entangled_projector(int n) {
    if (n < 2) throw BadDimension("max_entangled_projector requires n >= 2");
    Matrix p = Matrix::Zero(Eigen::Index(n) * n, Eigen::Index(n) * n);
    const double w = 1.0 / n;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            p(i * n + i, j * n + j) = w;
        }
    }
    return p;
}

Matrix apply_map(const MapParams& params, const Matrix& a) {
    const int n = params.n;
    if (n < 2) throw BadDimension("MapParams.n must be >= 2");
    if (a.rows() != n || a.cols() != n) {
        throw DimensionMismatch("input must be " + std::to_string(n) + "x" +
                                std::to_string(n));
    }
    const Matrix sym = a + a.transpose();
    const Matrix swap_term =
        partial_transpose(max_entangled_projector(n), n, n, Subsystem::First);
    return params.alpha * kron(sym, Matrix::Identity(n, n)) +
           params.beta * swap_term;
}

Matrix closed_form_2x2(const MapParams& params, const Input2x2& in) {
    if (params.n != 2) throw BadDimension("closed_form_2x2 requires n = 2");
    const double al = params.alpha, be = params.beta;
    const double a = in.a, b = in.b, c = in.c, d = in.d;
    Matrix out = Matrix::Zero(4, 4);
    const double off = al * (b + c);
    out(0, 0) = 2.0 * a * al + be / 2.0;
    out(0, 2) = off;
    out(1, 1) = 2.0 * a * al;
    out(1, 2) = be / 2.0;
    out(1, 3) = off;
    out(2, 0) = off;
    out(2, 1) = be / 2.0;
    out(2, 2) = 2.0 * d * al;
    out(3, 1) = off;
    out(3, 3) = 2.0 * d * al + be / 2.0;
    return out;
}

BlockSplit block_split(const Matrix& out4, const Tolerances& tol) {
    if (out4.rows() != 4 || out4.cols() != 4) {
        throw DimensionMismatch("block_split expects a 4x4 matrix");
    }
    require_hermitian(out4, tol.eps_eig);

    BlockSplit s;
    s.x = out4.block(0, 0, 2, 2);
    s.y = out4.block(0, 2, 2, 2);
    s.z = out4.block(2, 2, 2, 2);

    const PsdVerdict vx = is_psd(s.x, tol);
    const PsdVerdict vz = is_psd(s.z, tol);
    if (!vx.is_psd || !vz.is_psd) {
        s.absent_reason = std::string("BlocksNotPsd: ") +
                          (!vx.is_psd ? "X" : "Z") +
                          " block is not positive semidefinite";
        return s;
    }
    const PsdSqrt rx = psd_sqrt_inv(s.x, tol);
    const PsdSqrt rz = psd_sqrt_inv(s.z, tol);
    s.contraction = rx.inv_sqrt * s.y * rz.inv_sqrt;
    s.singular_support = rx.singular || rz.singular;
    return s;
}

Matrix analytic_contraction(const Input2x2& in, const MapParams& params) {
    const double a = in.a, d = in.d, al = params.alpha, be = params.beta;
    if (!(a > 0.0 && d > 0.0 && al > 0.0 && 4.0 * a * al + be > 0.0 &&
          4.0 * d * al + be > 0.0)) {
        throw SingularBlock("contraction entries require a, d, alpha > 0 and "
                            "4a*alpha + beta, 4d*alpha + beta > 0");
    }
    Matrix v = Matrix::Zero(2, 2);
    v(0, 0) = al * (in.b + in.c) / std::sqrt(d * al * (4.0 * a * al + be));
    v(1, 0) = be / (4.0 * al * std::sqrt(a * d));
    v(1, 1) = al * (in.b + in.c) / std::sqrt(a * al * (4.0 * d * al + be));
    return v;
}

CharCoeffs analytic_char_coeffs(const Input2x2& in, const MapParams& params,
                                const Tolerances& tol) {
    const double a = in.a, d = in.d, al = params.alpha, be = params.beta;
    if (!(a > 0.0 && d > 0.0 && al > 0.0 && 4.0 * a * al + be > 0.0)) {
        throw SingularBlock(
            "characteristic coefficients require a, d, alpha > 0 and "
            "4a*alpha + beta > 0");
    }
    const double bc = in.b + in.c;

    CharCoeffs out;
    out.k1 = al * bc * bc / ((4.0 * a * al + be) * d) + be / (4.0 * a * al) +
             be * be / (16.0 * a * d * al * al) + d / a;
    out.k2 = bc * bc * (be + 4.0 * d * al) / (a * d * (4.0 * a * al + be));
    out.discriminant = out.k1 * out.k1 - out.k2;
    if (out.discriminant >= 0.0) {
        const double root = std::sqrt(out.discriminant);
        out.lambda1 = (out.k1 + root) / 2.0;
        out.lambda2 = (out.k1 - root) / 2.0;
    }

    const BlockSplit split = block_split(closed_form_2x2(params, in), tol);
    if (split.contraction) {
        const Matrix gram = split.contraction->adjoint() * *split.contraction;
        out.gram_trace = gram.trace().real();
        out.gram_det = gram.determinant().real();
    }
    return out;
}

PositivityConditions analytic_positivity_conditions(const Input2x2& in,
                                                    const MapParams& params,
                                                    const Tolerances& tol) {
    const double a = in.a, d = in.d, al = params.alpha, be = params.beta;
    auto as_flag = [](bool holds) { return holds ? Flag::Holds : Flag::Fails; };

    PositivityConditions out;
    out.x_block = as_flag(2.0 * a * al >= 0.0 && 4.0 * a * al + be >= 0.0);
    out.z_block = as_flag(2.0 * d * al >= 0.0 && 4.0 * d * al + be >= 0.0);
    out.aggregate = as_flag(2.0 * al * (a + d) + be >= 0.0 && al >= 0.0);

    // The k1/k2 formulas divide by a, d, alpha and 4a*alpha + beta.
    if (a > 0.0 && d > 0.0 && al != 0.0 && 4.0 * a * al + be != 0.0) {
        const double bc = in.b + in.c;
        const double k1 = al * bc * bc / ((4.0 * a * al + be) * d) +
                          be / (4.0 * a * al) +
                          be * be / (16.0 * a * d * al * al) + d / a;
        const double k2 =
            bc * bc * (be + 4.0 * d * al) / (a * d * (4.0 * a * al + be));
        const double disc = k1 * k1 - k2;
        if (disc >= 0.0) {
            out.contraction_bound =
                as_flag(4.0 * (1.0 + std::sqrt(disc) - k2) >= 1.0);
        }
    }

    const PsdVerdict truth = is_psd(closed_form_2x2(params, in), tol);
    out.output_psd = truth.is_psd;
    out.min_eigenvalue = truth.min_eigenvalue;
    return out;
}

double min_alpha_threshold(const Matrix& a, double gamma, double tol,
                           const Tolerances& num) {
    if (a.rows() != 2 || a.cols() != 2) {
        throw DimensionMismatch("min_alpha_threshold expects a 2x2 input");
    }
    if (!(gamma > 0.0)) {
        throw ParameterOutOfRange("gamma must be > 0");
    }
    if (tol <= 0.0) {
        throw ParameterOutOfRange("tol must be > 0");
    }
    // A + A^T PSD makes the output PSD-ness monotone nondecreasing in alpha.
    const Matrix sym = a + a.transpose();
    const PsdVerdict sym_psd = is_psd(sym, num);
    if (!sym_psd.is_psd) {
        throw NotPsd("A + A^T must be positive semidefinite");
    }
    // A kernel vector u of A + A^T pins the quadratic form on span{u (x) e_k}
    // to the swap term alone, which compresses to the rank-one form u u^dag
    // there; its -gamma/2 eigenvalue never heals, so no alpha works.
    if (sym_psd.min_eigenvalue <= num.eps_psd * operator_norm(sym)) {
        throw NoUpperBracket(
            "A + A^T is singular along a direction where the swap term stays "
            "negative; no alpha renders the output PSD");
    }

    auto output_psd = [&](double alpha) {
        return is_psd(apply_map({2, alpha, -gamma}, a), num).is_psd;
    };

    if (output_psd(0.0)) return 0.0;

    double hi = std::max(1.0, gamma);
    int doublings = 0;
    while (!output_psd(hi)) {
        if (++doublings > 200) {
            throw NoUpperBracket("no PSD upper bracket found for alpha");
        }
        hi *= 2.0;
    }

    double lo = 0.0;
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        const double mid = lo + (hi - lo) / 2.0;
        if (output_psd(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace pncp
