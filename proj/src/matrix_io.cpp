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

#include "pncp/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "json.hpp"
#include "pncp/errors.hpp"

namespace pncp {

std::string format_sig17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_matrix_json(std::ostream& os, const Matrix& m) {
    if (!m.allFinite()) {
        throw Error("refusing to serialize a matrix with non-finite entries");
    }
    os << "{\n  \"rows\": " << m.rows() << ",\n  \"cols\": " << m.cols()
       << ",\n  \"data\": [\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Complex v = m(i, j);
            os << "    [" << format_sig17(v.real()) << ", "
               << format_sig17(v.imag()) << "]";
            if (i + 1 < m.rows() || j + 1 < m.cols()) os << ",";
            os << "\n";
        }
    }
    os << "  ]\n}\n";
}

void write_matrix_json(const std::string& path, const Matrix& m) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open " + path + " for writing");
    write_matrix_json(os, m);
    if (!os) throw Error("write to " + path + " failed");
}

Matrix read_matrix_json(std::istream& is) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("matrix file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("data") || !doc["rows"].is_number_integer() ||
        !doc["cols"].is_number_integer() || !doc["data"].is_array()) {
        throw Error("matrix file must carry integer rows/cols and a data array");
    }
    const auto rows = doc["rows"].get<Eigen::Index>();
    const auto cols = doc["cols"].get<Eigen::Index>();
    if (rows < 1 || cols < 1) throw Error("rows and cols must be positive");
    const auto& data = doc["data"];
    if (Eigen::Index(data.size()) != rows * cols) {
        throw Error("data length differs from rows*cols");
    }
    Matrix m(rows, cols);
    for (Eigen::Index idx = 0; idx < rows * cols; ++idx) {
        const auto& cell = data[idx];
        if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
            !cell[1].is_number()) {
            throw Error("each data entry must be a [re, im] pair");
        }
        const double re = cell[0].get<double>();
        const double im = cell[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw Error("matrix entries must be finite");
        }
        m(idx / cols, idx % cols) = Complex(re, im);
    }
    return m;
}

Matrix read_matrix_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open " + path);
    return read_matrix_json(is);
}

void write_detection_csv(std::ostream& os,
                         const std::vector<DetectionReport>& reports) {
    os << "state,param,expectation,detected\n";
    for (const auto& r : reports) {
        os << r.state_label << ","
           << (r.param ? format_sig17(*r.param) : std::string{}) << ","
           << format_sig17(r.expectation) << ","
           << (r.detected ? "true" : "false") << "\n";
    }
}

}  // namespace pncp
