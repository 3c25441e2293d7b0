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

#ifndef PNCP_MATRIX_IO_HPP
#define PNCP_MATRIX_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "pncp/matrix.hpp"
#include "pncp/witness.hpp"

namespace pncp {

// Matrix file schema (UTF-8 JSON, field order fixed):
//   { "rows": R, "cols": C, "data": [[re, im], ...] }
// with data row-major of length R*C and every number finite. Numbers are
// written with 17 significant digits so write-then-read round-trips
// bit-exactly.

/// Format a double with 17 significant digits ("%.17g").
std::string format_sig17(double x);

void write_matrix_json(std::ostream& os, const Matrix& m);
void write_matrix_json(const std::string& path, const Matrix& m);

Matrix read_matrix_json(std::istream& is);
Matrix read_matrix_json(const std::string& path);

/// CSV with header "state,param,expectation,detected", LF line endings,
/// numbers at 17 significant digits; a report without a parameter leaves the
/// param field empty.
void write_detection_csv(std::ostream& os,
                         const std::vector<DetectionReport>& reports);

}  // namespace pncp

#endif
