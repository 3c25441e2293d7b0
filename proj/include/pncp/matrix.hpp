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

#ifndef PNCP_MATRIX_HPP
#define PNCP_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>

namespace pncp {

using Complex = std::complex<double>;

/// Dense complex matrix, the universal carrier for operators, states and
/// witnesses. All matrices in scope are small (at most 16x16).
using Matrix = Eigen::MatrixXcd;

using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

}  // namespace pncp

#endif
