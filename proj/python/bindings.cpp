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

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pncp/audit.hpp"
#include "pncp/matrix_io.hpp"
#include "pncp/witness.hpp"

namespace py = pybind11;
using namespace pncp;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::null:
            return py::none();
        case nlohmann::ordered_json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::ordered_json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::ordered_json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::ordered_json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::ordered_json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::ordered_json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::ordered_json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) {
                out[py::str(key)] = json_to_py(value);
            }
            return out;
        }
        default:
            return py::none();
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Positive-but-not-completely-positive map toolkit: map family, "
              "Choi matrices, entanglement witnesses and claim audits";

    py::register_exception<Error>(m, "PncpError", PyExc_ValueError);

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("eps_psd", &Tolerances::eps_psd)
        .def_readwrite("eps_eig", &Tolerances::eps_eig)
        .def_readwrite("eps_match", &Tolerances::eps_match);

    py::class_<PsdVerdict>(m, "PsdVerdict")
        .def_readonly("is_psd", &PsdVerdict::is_psd)
        .def_readonly("min_eigenvalue", &PsdVerdict::min_eigenvalue)
        .def_readonly("witness_vector", &PsdVerdict::witness_vector);

    py::class_<EigenDecomposition>(m, "EigenDecomposition")
        .def_readonly("values", &EigenDecomposition::values)
        .def_readonly("vectors", &EigenDecomposition::vectors);

    py::class_<PsdSqrt>(m, "PsdSqrt")
        .def_readonly("sqrt", &PsdSqrt::sqrt)
        .def_readonly("inv_sqrt", &PsdSqrt::inv_sqrt)
        .def_readonly("singular", &PsdSqrt::singular);

    py::enum_<Subsystem>(m, "Subsystem")
        .value("First", Subsystem::First)
        .value("Second", Subsystem::Second);

    m.def("herm_eigs", &herm_eigs, py::arg("m"), py::arg("tol") = Tolerances{});
    m.def("is_psd", &is_psd, py::arg("m"), py::arg("tol") = Tolerances{});
    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def("partial_transpose", &partial_transpose, py::arg("m"), py::arg("d1"),
          py::arg("d2"), py::arg("subsystem") = Subsystem::First);
    m.def("operator_norm", &operator_norm, py::arg("m"));
    m.def("trace_norm", &trace_norm, py::arg("m"));
    m.def("psd_sqrt_inv", &psd_sqrt_inv, py::arg("m"),
          py::arg("tol") = Tolerances{});
    m.def("realign", &realign, py::arg("m"), py::arg("d1"), py::arg("d2"));
    m.def("realign_trace_norm", &realign_trace_norm, py::arg("m"),
          py::arg("d1"), py::arg("d2"));

    py::class_<MapParams>(m, "MapParams")
        .def(py::init<int, double, double>(), py::arg("n") = 2,
             py::arg("alpha") = 0.0, py::arg("beta") = 0.0)
        .def_readwrite("n", &MapParams::n)
        .def_readwrite("alpha", &MapParams::alpha)
        .def_readwrite("beta", &MapParams::beta);

    py::class_<Input2x2>(m, "Input2x2")
        .def(py::init<double, double, double, double>(), py::arg("a") = 0.0,
             py::arg("b") = 0.0, py::arg("c") = 0.0, py::arg("d") = 0.0)
        .def_readwrite("a", &Input2x2::a)
        .def_readwrite("b", &Input2x2::b)
        .def_readwrite("c", &Input2x2::c)
        .def_readwrite("d", &Input2x2::d);

    py::class_<BlockSplit>(m, "BlockSplit")
        .def_readonly("x", &BlockSplit::x)
        .def_readonly("y", &BlockSplit::y)
        .def_readonly("z", &BlockSplit::z)
        .def_readonly("contraction", &BlockSplit::contraction)
        .def_readonly("singular_support", &BlockSplit::singular_support)
        .def_readonly("absent_reason", &BlockSplit::absent_reason);

    py::class_<CharCoeffs>(m, "CharCoeffs")
        .def_readonly("k1", &CharCoeffs::k1)
        .def_readonly("k2", &CharCoeffs::k2)
        .def_readonly("discriminant", &CharCoeffs::discriminant)
        .def_readonly("lambda1", &CharCoeffs::lambda1)
        .def_readonly("lambda2", &CharCoeffs::lambda2)
        .def_readonly("gram_trace", &CharCoeffs::gram_trace)
        .def_readonly("gram_det", &CharCoeffs::gram_det);

    py::enum_<Flag>(m, "Flag")
        .value("Holds", Flag::Holds)
        .value("Fails", Flag::Fails)
        .value("Inapplicable", Flag::Inapplicable);

    py::class_<PositivityConditions>(m, "PositivityConditions")
        .def_readonly("x_block", &PositivityConditions::x_block)
        .def_readonly("z_block", &PositivityConditions::z_block)
        .def_readonly("aggregate", &PositivityConditions::aggregate)
        .def_readonly("contraction_bound",
                      &PositivityConditions::contraction_bound)
        .def_readonly("output_psd", &PositivityConditions::output_psd)
        .def_readonly("min_eigenvalue", &PositivityConditions::min_eigenvalue);

    m.def("max_entangled_projector", &max_entangled_projector, py::arg("n"));
    m.def("apply_map", &apply_map, py::arg("params"), py::arg("a"));
    m.def("closed_form_2x2", &closed_form_2x2, py::arg("params"),
          py::arg("input"));
    m.def("block_split", &block_split, py::arg("out4"),
          py::arg("tol") = Tolerances{});
    m.def("analytic_contraction", &analytic_contraction, py::arg("input"),
          py::arg("params"));
    m.def("analytic_char_coeffs", &analytic_char_coeffs, py::arg("input"),
          py::arg("params"), py::arg("tol") = Tolerances{});
    m.def("analytic_positivity_conditions", &analytic_positivity_conditions,
          py::arg("input"), py::arg("params"), py::arg("tol") = Tolerances{});
    m.def("min_alpha_threshold", &min_alpha_threshold, py::arg("a"),
          py::arg("gamma"), py::arg("tol") = 1e-9,
          py::arg("num") = Tolerances{});

    py::class_<ChoiOperator>(m, "ChoiOperator")
        .def_readonly("matrix", &ChoiOperator::matrix)
        .def_readonly("dims", &ChoiOperator::dims)
        .def_readonly("params", &ChoiOperator::params);

    py::class_<ChoiBlocks>(m, "ChoiBlocks")
        .def_readonly("p", &ChoiBlocks::p)
        .def_readonly("q", &ChoiBlocks::q)
        .def_readonly("r", &ChoiBlocks::r);

    py::class_<CpCertificate>(m, "CpCertificate")
        .def_readonly("witness_vector", &CpCertificate::witness_vector)
        .def_readonly("quad_form", &CpCertificate::quad_form)
        .def_readonly("minor_rows", &CpCertificate::minor_rows)
        .def_readonly("minor_det", &CpCertificate::minor_det);

    py::class_<CpResult>(m, "CpResult")
        .def_readonly("completely_positive", &CpResult::completely_positive)
        .def_readonly("min_eigenvalue", &CpResult::min_eigenvalue)
        .def_readonly("certificate", &CpResult::certificate);

    py::class_<SchurReport>(m, "SchurReport")
        .def_readonly("blocks", &SchurReport::blocks)
        .def_readonly("r_psd", &SchurReport::r_psd)
        .def_readonly("range_ok", &SchurReport::range_ok)
        .def_readonly("schur_psd", &SchurReport::schur_psd)
        .def_readonly("psd", &SchurReport::psd)
        .def_readonly("strict_schur_psd", &SchurReport::strict_schur_psd);

    py::class_<SpectrumAudit>(m, "SpectrumAudit")
        .def_readonly("mu", &SpectrumAudit::mu)
        .def_readonly("mu_alt", &SpectrumAudit::mu_alt)
        .def_readonly("numeric", &SpectrumAudit::numeric)
        .def_readonly("dev", &SpectrumAudit::dev)
        .def_readonly("dev_alt", &SpectrumAudit::dev_alt);

    m.def("choi_from_map", &choi_from_map, py::arg("map"), py::arg("n"));
    m.def("choi_closed_form", &choi_closed_form, py::arg("alpha"),
          py::arg("beta"));
    m.def("is_completely_positive", &is_completely_positive, py::arg("params"),
          py::arg("tol") = Tolerances{});
    m.def("choi_blocks", &choi_blocks, py::arg("choi"),
          py::arg("tol") = Tolerances{});
    m.def("analytic_choi_eigs", &analytic_choi_eigs, py::arg("alpha"),
          py::arg("gamma"), py::arg("tol") = Tolerances{});

    py::class_<BipartiteState>(m, "BipartiteState")
        .def(py::init([](const Matrix& matrix, int d1, int d2,
                         const std::string& label) {
                 return BipartiteState{matrix, d1, d2, label};
             }),
             py::arg("matrix"), py::arg("d1") = 2, py::arg("d2") = 4,
             py::arg("label") = "external")
        .def_readonly("matrix", &BipartiteState::matrix)
        .def_readonly("d1", &BipartiteState::d1)
        .def_readonly("d2", &BipartiteState::d2)
        .def_readonly("label", &BipartiteState::label);

    py::class_<PptVerdict>(m, "PptVerdict")
        .def_readonly("ppt", &PptVerdict::ppt)
        .def_readonly("min_pt_eigenvalue", &PptVerdict::min_pt_eigenvalue);

    py::class_<RealignmentProbe>(m, "RealignmentProbe")
        .def_readonly("value", &RealignmentProbe::value)
        .def_readonly("flag_entangled", &RealignmentProbe::flag_entangled);

    m.def("horodecki_state", &horodecki_state, py::arg("b"));
    m.def("npt_state", &npt_state);
    m.def("validate_state", &validate_state, py::arg("rho"),
          py::arg("tol") = Tolerances{});
    m.def("is_ppt", &is_ppt, py::arg("rho"), py::arg("tol") = Tolerances{});
    m.def("realignment_value", &realignment_value, py::arg("rho"),
          py::arg("tol") = Tolerances{});

    py::class_<WitnessCandidate>(m, "WitnessCandidate")
        .def(py::init([](const Matrix& op, int d1, int d2,
                         const std::string& label) {
                 return WitnessCandidate{op, d1, d2, label};
             }),
             py::arg("op"), py::arg("d1") = 2, py::arg("d2") = 4,
             py::arg("label") = "external")
        .def_readonly("op", &WitnessCandidate::op)
        .def_readonly("d1", &WitnessCandidate::d1)
        .def_readonly("d2", &WitnessCandidate::d2)
        .def_readonly("label", &WitnessCandidate::label);

    py::class_<DetectionReport>(m, "DetectionReport")
        .def_readonly("witness_label", &DetectionReport::witness_label)
        .def_readonly("state_label", &DetectionReport::state_label)
        .def_readonly("param", &DetectionReport::param)
        .def_readonly("expectation", &DetectionReport::expectation)
        .def_readonly("detected", &DetectionReport::detected);

    py::enum_<BlockPositivityStatus>(m, "BlockPositivityStatus")
        .value("CertifiedNonnegative",
               BlockPositivityStatus::CertifiedNonnegative)
        .value("CounterexampleFound",
               BlockPositivityStatus::CounterexampleFound)
        .value("Inconclusive", BlockPositivityStatus::Inconclusive);

    py::class_<BlockPositivityResult>(m, "BlockPositivityResult")
        .def_readonly("min_value", &BlockPositivityResult::min_value)
        .def_readonly("argmin_a", &BlockPositivityResult::argmin_a)
        .def_readonly("argmin_b", &BlockPositivityResult::argmin_b)
        .def_readonly("status", &BlockPositivityResult::status);

    py::class_<SeeSawOptions>(m, "SeeSawOptions")
        .def(py::init<int, std::uint64_t, int>(), py::arg("restarts") = 64,
             py::arg("seed") = 0, py::arg("max_iters") = 500)
        .def_readwrite("restarts", &SeeSawOptions::restarts)
        .def_readwrite("seed", &SeeSawOptions::seed)
        .def_readwrite("max_iters", &SeeSawOptions::max_iters);

    py::enum_<WitnessVerdict>(m, "WitnessVerdict")
        .value("ValidCandidate", WitnessVerdict::ValidCandidate)
        .value("Refuted", WitnessVerdict::Refuted)
        .value("Inconclusive", WitnessVerdict::Inconclusive);

    py::class_<WitnessAudit>(m, "WitnessAudit")
        .def_readonly("verdict", &WitnessAudit::verdict)
        .def_readonly("cp", &WitnessAudit::cp)
        .def_readonly("block", &WitnessAudit::block);

    m.def("witness_from_choi", &witness_from_choi, py::arg("choi"));
    m.def("expectation", &expectation, py::arg("witness"), py::arg("rho"),
          py::arg("tol") = Tolerances{});
    m.def("detect", &detect, py::arg("witness"), py::arg("rho"),
          py::arg("param") = std::nullopt, py::arg("tol") = Tolerances{});
    m.def("detection_curve", &detection_curve, py::arg("witness"),
          py::arg("grid"), py::arg("tol") = Tolerances{});
    m.def("block_positivity_min", &block_positivity_min, py::arg("witness"),
          py::arg("opts") = SeeSawOptions{}, py::arg("tol") = Tolerances{});
    m.def("witness_audit", &witness_audit, py::arg("params"),
          py::arg("opts") = SeeSawOptions{}, py::arg("tol") = Tolerances{});

    m.def(
        "run_reproduction",
        [](int grid, std::uint64_t seed) {
            ReproduceOptions opts;
            opts.grid = grid;
            opts.seed = seed;
            py::list out;
            for (const AuditRecord& r : run_reproduction(opts)) {
                py::dict item;
                item["claim_id"] = r.claim_id;
                item["subject"] = r.subject;
                item["claimed"] = r.claimed;
                item["computed"] = r.computed;
                item["verdict"] = r.verdict;
                item["certificate"] = json_to_py(r.certificate);
                out.append(std::move(item));
            }
            return out;
        },
        py::arg("grid") = 101, py::arg("seed") = 0,
        "Run the claim-by-claim audit and return the records as dicts");

    m.attr("__version__") = "0.1.0";
}
