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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pncp/audit.hpp"
#include "pncp/matrix_io.hpp"
#include "pncp/witness.hpp"

namespace {

// Exit codes: 0 success, 2 flag/parse/dimension errors, 3 state validation
// failures, 4 internal numeric failures.
constexpr int kOk = 0;
constexpr int kUsageError = 2;
constexpr int kStateError = 3;
constexpr int kNumericError = 4;

struct MapApplyArgs {
    double alpha = 0.0;
    double beta = 0.0;
    int n = 2;
    std::string input;
    std::string out;
};

struct ChoiArgs {
    double alpha = 0.0;
    double beta = 0.0;
    std::string out;
    bool eigs = false;
    bool cp_check = false;
};

struct DetectArgs {
    std::string witness;
    std::string state;
    std::optional<double> b;
    std::string out;
};

struct ReproduceArgs {
    std::string out;
    int grid = 101;
};

void write_matrix_output(const std::string& path, const pncp::Matrix& m) {
    if (path.empty()) {
        pncp::write_matrix_json(std::cout, m);
    } else {
        pncp::write_matrix_json(path, m);
    }
}

int run_map_apply(const MapApplyArgs& args) {
    const pncp::Matrix input = pncp::read_matrix_json(args.input);
    const pncp::Matrix out =
        pncp::apply_map({args.n, args.alpha, args.beta}, input);
    write_matrix_output(args.out, out);
    return kOk;
}

int run_choi(const ChoiArgs& args) {
    const pncp::ChoiOperator choi =
        pncp::choi_closed_form(args.alpha, args.beta);
    if (!args.out.empty()) {
        pncp::write_matrix_json(args.out, choi.matrix);
    } else if (!args.eigs && !args.cp_check) {
        pncp::write_matrix_json(std::cout, choi.matrix);
    }
    if (args.eigs) {
        const pncp::RealVector values = pncp::herm_eigs(choi.matrix).values;
        std::cout << "eigenvalues:";
        for (Eigen::Index k = 0; k < values.size(); ++k) {
            std::cout << " " << pncp::format_sig17(values(k));
        }
        std::cout << "\n";
    }
    if (args.cp_check) {
        const pncp::CpResult cp =
            pncp::is_completely_positive({2, args.alpha, args.beta});
        if (cp.completely_positive) {
            std::cout << "completely positive"
                      << (args.alpha == 0.0 && args.beta == 0.0 ? " (zero map)"
                                                                : "")
                      << "\n";
        } else {
            std::cout << "not completely positive: min eigenvalue "
                      << pncp::format_sig17(cp.min_eigenvalue);
            if (cp.certificate && cp.certificate->minor_rows) {
                const auto [r0, r1] = *cp.certificate->minor_rows;
                std::cout << "; principal minor rows {" << r0 << "," << r1
                          << "} det "
                          << pncp::format_sig17(cp.certificate->minor_det);
            }
            std::cout << "\n";
        }
    }
    return kOk;
}

pncp::WitnessCandidate parse_witness(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) {
        const std::string params = spec.substr(8);
        const auto comma = params.find(',');
        if (comma == std::string::npos) {
            throw pncp::Error("builtin witness syntax is builtin:alpha,beta");
        }
        double alpha = 0.0, beta = 0.0;
        try {
            std::size_t used = 0;
            alpha = std::stod(params.substr(0, comma), &used);
            if (used != comma) throw std::invalid_argument(params);
            beta = std::stod(params.substr(comma + 1), &used);
            if (used != params.size() - comma - 1) {
                throw std::invalid_argument(params);
            }
        } catch (const std::exception&) {
            throw pncp::Error("cannot parse builtin witness parameters '" +
                              params + "'");
        }
        return pncp::witness_from_choi(pncp::choi_closed_form(alpha, beta));
    }
    const pncp::Matrix m = pncp::read_matrix_json(spec);
    if (m.rows() != 8 || m.cols() != 8) {
        throw pncp::Error("witness file must hold an 8x8 matrix");
    }
    pncp::require_hermitian(m, pncp::Tolerances{}.eps_eig);
    return pncp::WitnessCandidate{m, 2, 4, spec};
}

int run_detect(const DetectArgs& args) {
    const pncp::WitnessCandidate witness = parse_witness(args.witness);

    pncp::BipartiteState state;
    std::optional<double> param;
    if (args.state == "horodecki") {
        if (!args.b) {
            std::cerr << "pncp detect: --b is required for the horodecki state\n";
            return kUsageError;
        }
        try {
            state = pncp::horodecki_state(*args.b);
        } catch (const pncp::ParameterOutOfRange& e) {
            std::cerr << "pncp detect: " << e.what() << "\n";
            return kStateError;
        }
        param = *args.b;
    } else if (args.state == "npt") {
        state = pncp::npt_state();
    } else {
        const pncp::Matrix m = pncp::read_matrix_json(args.state);
        state = pncp::BipartiteState{m, 2, 4, args.state};
        try {
            pncp::validate_state(state);
        } catch (const pncp::Error& e) {
            std::cerr << "pncp detect: state failed validation: " << e.what()
                      << "\n";
            return kStateError;
        }
    }

    const std::vector<pncp::DetectionReport> reports{
        pncp::detect(witness, state, param)};
    if (args.out.empty()) {
        pncp::write_detection_csv(std::cout, reports);
    } else {
        std::ofstream os(args.out);
        if (!os) throw pncp::Error("cannot open " + args.out + " for writing");
        pncp::write_detection_csv(os, reports);
    }
    return kOk;
}

int run_reproduce(const ReproduceArgs& args) {
    pncp::ReproduceOptions opts;
    opts.grid = args.grid;
    const auto records = pncp::run_reproduction(opts);
    const auto doc = pncp::report_to_json(records, opts);
    if (args.out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream os(args.out);
        if (!os) throw pncp::Error("cannot open " + args.out + " for writing");
        os << doc.dump(2) << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pncp: a toolkit for a two-parameter family of positive but "
                 "not completely positive maps, their Choi matrices and the "
                 "entanglement witnesses built from them"};
    app.require_subcommand(1);

    MapApplyArgs map_args;
    auto* map_cmd = app.add_subcommand(
        "map-apply", "Apply the (alpha, beta) map to a matrix file");
    map_cmd->add_option("--alpha", map_args.alpha, "map parameter alpha")
        ->required();
    map_cmd->add_option("--beta", map_args.beta, "map parameter beta")
        ->required();
    map_cmd->add_option("--n", map_args.n, "input dimension (default 2)");
    map_cmd->add_option("--input", map_args.input, "input matrix JSON file")
        ->required();
    map_cmd->add_option("--out", map_args.out,
                        "output matrix JSON file (stdout if omitted)");

    ChoiArgs choi_args;
    auto* choi_cmd =
        app.add_subcommand("choi", "Build the 8x8 Choi matrix of the map");
    choi_cmd->add_option("--alpha", choi_args.alpha, "map parameter alpha")
        ->required();
    choi_cmd->add_option("--beta", choi_args.beta, "map parameter beta")
        ->required();
    choi_cmd->add_option("--out", choi_args.out, "output matrix JSON file");
    choi_cmd->add_flag("--eigs", choi_args.eigs, "print the eigenvalues");
    choi_cmd->add_flag("--cp-check", choi_args.cp_check,
                       "print the complete-positivity verdict and certificate");

    DetectArgs detect_args;
    auto* detect_cmd = app.add_subcommand(
        "detect", "Evaluate a witness on a state and report detection");
    detect_cmd
        ->add_option("--witness", detect_args.witness,
                     "witness: builtin:alpha,beta or a matrix JSON file")
        ->required();
    detect_cmd
        ->add_option("--state", detect_args.state,
                     "state: horodecki, npt, or a matrix JSON file")
        ->required();
    double b_value = 0.0;
    auto* b_opt = detect_cmd->add_option("--b", b_value,
                                         "parameter b of the horodecki state");
    detect_cmd->add_option("--out", detect_args.out,
                           "output CSV file (stdout if omitted)");

    ReproduceArgs rep_args;
    auto* rep_cmd = app.add_subcommand(
        "reproduce", "Run the full claim-by-claim audit and write the report");
    rep_cmd->add_option("--out", rep_args.out,
                        "report JSON file (stdout if omitted)");
    rep_cmd->add_option("--grid", rep_args.grid,
                        "grid points for the b-parameter scans (default 101)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
    }
    if (b_opt->count() > 0) detect_args.b = b_value;

    try {
        if (map_cmd->parsed()) return run_map_apply(map_args);
        if (choi_cmd->parsed()) return run_choi(choi_args);
        if (detect_cmd->parsed()) return run_detect(detect_args);
        if (rep_cmd->parsed()) return run_reproduce(rep_args);
    } catch (const pncp::NumericFailure& e) {
        std::cerr << "pncp: numeric failure: " << e.what() << "\n";
        return kNumericError;
    } catch (const pncp::Error& e) {
        std::cerr << "pncp: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "pncp: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
