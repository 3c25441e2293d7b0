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

#include "pncp/audit.hpp"

#include <cmath>
#include <random>

#include "pncp/matrix_io.hpp"
#include "pncp/witness.hpp"

namespace pncp {

namespace {

constexpr const char* kConfirmed = "CONFIRMED";
constexpr const char* kRefuted = "REFUTED";

// The two reference input matrices used by the threshold and witness claims.
Matrix input_a1() {
    Matrix a(2, 2);
    a << 0.25, 1.0 / 3.0, 1.0 / 9.0, 2.0;
    return a;
}

Matrix input_a2() {
    Matrix a(2, 2);
    a << 3.0, 1.0 / 3.0, 1.0 / 9.0, 2.0;
    return a;
}

std::vector<double> unit_grid(int points) {
    std::vector<double> grid(points);
    for (int k = 0; k < points; ++k) grid[k] = double(k) / (points - 1);
    return grid;
}

AuditRecord c01_closed_form_identity(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> sym(-2.0, 2.0);
    std::uniform_real_distribution<double> pos(0.0, 2.0);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const MapParams params{2, sym(rng), sym(rng)};
        const Input2x2 in{pos(rng), sym(rng), sym(rng), pos(rng)};
        Matrix a(2, 2);
        a << in.a, in.b, in.c, in.d;
        const double dev = (closed_form_2x2(params, in) - apply_map(params, a))
                               .cwiseAbs()
                               .maxCoeff();
        worst = std::max(worst, dev);
    }
    return {"C01-closed-form-identity",
            "4x4 output template vs the definitional map on 1000 random draws",
            "entrywise equal, exactly",
            "max |delta| = " + format_sig17(worst),
            worst == 0.0 ? kConfirmed : kRefuted,
            {{"max_abs_delta", worst}, {"trials", 1000}}};
}

AuditRecord c02_choi_identity() {
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
            const double alpha = double(i) / 5.0 - 2.0;
            const double beta = double(j) / 5.0 - 2.0;
            const MapParams params{2, alpha, beta};
            const Matrix direct = choi_from_map(
                [&](const Matrix& e) { return apply_map(params, e); }, 2);
            const double dev =
                (choi_closed_form(alpha, beta).matrix - direct)
                    .cwiseAbs()
                    .maxCoeff();
            worst = std::max(worst, dev);
        }
    }
    return {"C02-choi-identity",
            "8x8 Choi template vs sum_ij |i><j| (x) map(|i><j|) on a 21x21 "
            "(alpha, beta) grid",
            "entrywise equal within 1e-14",
            "max |delta| = " + format_sig17(worst),
            worst <= 1e-14 ? kConfirmed : kRefuted,
            {{"max_abs_delta", worst}, {"grid", "21x21 over [-2,2]^2"}}};
}

AuditRecord c03_reference_choi_matrices() {
    // Reference entries for C_{3/4,-2} and C_{1/8,-1}; all dyadic rationals.
    auto reference = [](double h, double g, double s, double t) {
        Matrix c = Matrix::Zero(8, 8);
        auto set = [&c](int i, int j, double v) { c(i, j) = c(j, i) = v; };
        c(0, 0) = h; c(1, 1) = g; c(3, 3) = s; c(4, 4) = s;
        c(6, 6) = g; c(7, 7) = h;
        set(0, 4, s); set(0, 6, t); set(1, 2, s); set(1, 6, s); set(1, 7, t);
        set(2, 4, t); set(2, 5, s); set(3, 5, t); set(3, 7, s); set(5, 6, s);
        return c;
    };
    const double dev34 = (choi_closed_form(0.75, -2.0).matrix -
                          reference(0.5, 1.5, -1.0, 0.75))
                             .cwiseAbs()
                             .maxCoeff();
    const double dev18 = (choi_closed_form(0.125, -1.0).matrix -
                          reference(-0.25, 0.25, -0.5, 0.125))
                             .cwiseAbs()
                             .maxCoeff();
    const bool ok = dev34 == 0.0 && dev18 == 0.0;
    return {"C03-reference-choi-matrices",
            "Choi matrices at (3/4, -2) and (1/8, -1) vs their stated 8x8 "
            "entries",
            "entrywise equal, exact rational comparison",
            "max |delta| = " + format_sig17(std::max(dev34, dev18)),
            ok ? kConfirmed : kRefuted,
            {{"delta_3_4", dev34}, {"delta_1_8", dev18}}};
}

AuditRecord c04_never_completely_positive() {
    int checked = 0;
    bool all_ok = true;
    nlohmann::ordered_json failure;
    for (int i = 0; i <= 20 && all_ok; ++i) {
        for (int j = 0; j <= 20 && all_ok; ++j) {
            const double alpha = double(i) / 5.0 - 2.0;
            const double beta = double(j) / 5.0 - 2.0;
            if (alpha == 0.0 && beta == 0.0) continue;
            ++checked;
            const CpResult cp = is_completely_positive({2, alpha, beta});
            bool ok = !cp.completely_positive && cp.certificate.has_value();
            if (ok) {
                const auto& cert = *cp.certificate;
                const Matrix c = choi_closed_form(alpha, beta).matrix;
                const double quad =
                    (cert.witness_vector.adjoint() * c * cert.witness_vector)(0, 0)
                        .real();
                ok = quad < 0.0 && cert.minor_rows.has_value() &&
                     cert.minor_det < 0.0;
            }
            if (!ok) {
                all_ok = false;
                failure = {{"alpha", alpha}, {"beta", beta}};
            }
        }
    }
    return {"C04-never-completely-positive",
            "complete positivity on the 21x21 grid minus the zero map",
            "Choi matrix is never PSD; every point carries a negative "
            "certificate",
            all_ok ? "all " + std::to_string(checked) + " points non-CP with "
                     "verified certificates"
                   : "certificate verification failed",
            all_ok ? kConfirmed : kRefuted,
            all_ok ? nlohmann::ordered_json{{"points", checked}} : failure};
}

AuditRecord c05_horodecki_family(int grid) {
    double worst_trace = 0.0;
    double min_eig = 0.0;
    double min_pt = 0.0;
    for (double b : unit_grid(grid)) {
        const BipartiteState rho = horodecki_state(b);
        worst_trace = std::max(
            worst_trace, std::abs(rho.matrix.trace().real() - 1.0));
        min_eig = std::min(min_eig, is_psd(rho.matrix).min_eigenvalue);
        min_pt = std::min(min_pt, is_ppt(rho).min_pt_eigenvalue);
    }
    nlohmann::ordered_json scan = nlohmann::ordered_json::array();
    for (double b : unit_grid(11)) {
        scan.push_back({{"b", b},
                        {"realign_trace_norm",
                         realignment_value(horodecki_state(b)).value}});
    }
    const bool ok =
        worst_trace <= 1e-14 && min_eig >= -1e-9 && min_pt >= -1e-9;
    return {"C05-horodecki-family",
            "validity and PPT of the bound entangled family over " +
                std::to_string(grid) + " values of b",
            "trace 1, PSD, and positive under partial transposition for all "
            "0 <= b <= 1",
            "max |trace-1| = " + format_sig17(worst_trace) +
                ", min eig = " + format_sig17(min_eig) +
                ", min PT eig = " + format_sig17(min_pt),
            ok ? kConfirmed : kRefuted,
            {{"max_trace_deviation", worst_trace},
             {"min_eigenvalue", min_eig},
             {"min_pt_eigenvalue", min_pt},
             {"realignment_scan", scan}}};
}

AuditRecord c06_npt_state() {
    const BipartiteState rho = npt_state();
    const RealVector eigs = herm_eigs(rho.matrix).values;
    const double pt_min = is_ppt(rho).min_pt_eigenvalue;
    const double dev_pt = std::abs(pt_min - (-1.0 / 3.0));
    const double dev_top = std::abs(eigs(7) - 2.0 / 3.0);
    const double dev_next = std::abs(eigs(6) - 1.0 / 3.0);
    const bool ok = dev_pt <= 1e-10 && dev_top <= 1e-10 && dev_next <= 1e-10;
    return {"C06-npt-state",
            "spectrum and partial transpose of the NPT reference state",
            "eigenvalues {2/3, 1/3}, PT minimum eigenvalue -1/3",
            "PT min = " + format_sig17(pt_min) + ", top eigenvalues " +
                format_sig17(eigs(7)) + ", " + format_sig17(eigs(6)),
            ok ? kConfirmed : kRefuted,
            {{"pt_min_eigenvalue", pt_min},
             {"realign_trace_norm", realignment_value(rho).value}}};
}

AuditRecord c07_detection_formula(int grid) {
    const WitnessCandidate w = witness_from_choi(choi_closed_form(0.75, -2.0));
    double worst = 0.0;
    for (const DetectionReport& r : detection_curve(w, unit_grid(grid))) {
        const double b = *r.param;
        const double formula = (b - 1.0) / (4.0 * (1.0 + 7.0 * b));
        worst = std::max(worst, std::abs(r.expectation - formula));
    }
    const double at0 = expectation(w, horodecki_state(0.0));
    const double at1 = expectation(w, horodecki_state(1.0));
    const bool ok = worst <= 1e-12 && std::abs(at0 + 0.25) <= 1e-12 &&
                    std::abs(at1) <= 1e-12;
    return {"C07-detection-formula",
            "Tr(W rho_b) for the (3/4, -2) Choi witness against the stated "
            "closed form over " + std::to_string(grid) + " grid points",
            "(b-1)/(4(1+7b)); -1/4 at b=0 and 0 at b=1",
            "max |delta| = " + format_sig17(worst) + ", value(0) = " +
                format_sig17(at0) + ", value(1) = " + format_sig17(at1),
            ok ? kConfirmed : kRefuted,
            {{"max_abs_delta", worst}}};
}

AuditRecord c08_npt_detection() {
    const WitnessCandidate w = witness_from_choi(choi_closed_form(0.125, -1.0));
    const double value = expectation(w, npt_state());
    const double dev = std::abs(value - (-1.0 / 6.0));
    return {"C08-npt-detection",
            "Tr(W rho_npt) for the (1/8, -1) Choi witness",
            "-1/6",
            format_sig17(value),
            dev <= 1e-12 ? kConfirmed : kRefuted,
            {{"value", value}, {"abs_delta", dev}}};
}

AuditRecord c09_block_psd_equivalence(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 9);
    std::uniform_real_distribution<double> pos(0.1, 2.0);
    std::uniform_real_distribution<double> sym(-2.0, 2.0);
    std::uniform_real_distribution<double> unit(0.0, 0.999);
    int agreed = 0;
    nlohmann::ordered_json failure;
    for (int trial = 0; trial < 500; ++trial) {
        const double a = pos(rng), d = pos(rng), alpha = pos(rng);
        const double lowest = -4.0 * std::min(a, d) * alpha;
        const double u = unit(rng);
        const double beta = lowest * u + 4.0 * (1.0 - u);
        const Input2x2 in{a, sym(rng), sym(rng), d};
        const MapParams params{2, alpha, beta};
        const Matrix out4 = closed_form_2x2(params, in);
        const BlockSplit split = block_split(out4);
        const bool psd = is_psd(out4).is_psd;
        const bool contraction =
            split.contraction && operator_norm(*split.contraction) <= 1.0 + 1e-9;
        if (psd == contraction) {
            ++agreed;
        } else if (failure.is_null()) {
            failure = {{"a", a},     {"d", d},       {"alpha", alpha},
                       {"beta", beta}, {"psd", psd}, {"contraction", contraction}};
        }
    }
    return {"C09-block-psd-equivalence",
            "PSD of the 4x4 output vs ||X^{-1/2} Y Z^{-1/2}|| <= 1 on 500 "
            "random instances with positive definite blocks",
            "the two verdicts coincide",
            std::to_string(agreed) + "/500 agree",
            agreed == 500 ? kConfirmed : kRefuted,
            agreed == 500 ? nlohmann::ordered_json{{"trials", 500}} : failure};
}

AuditRecord c10_witness_validity(const MapParams& params,
                                 const std::string& id) {
    const WitnessAudit audit = witness_audit(params);
    std::string verdict = "INAPPLICABLE";
    if (audit.verdict == WitnessVerdict::Refuted) {
        verdict = kRefuted;
    } else if (audit.verdict == WitnessVerdict::ValidCandidate) {
        verdict = kConfirmed;
    }
    nlohmann::ordered_json cert{
        {"min_product_value", audit.block.min_value},
        {"completely_positive", audit.cp.completely_positive},
        {"choi_min_eigenvalue", audit.cp.min_eigenvalue}};
    if (audit.block.argmin_a.size() > 0) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        nlohmann::ordered_json b = nlohmann::ordered_json::array();
        for (Eigen::Index i = 0; i < audit.block.argmin_a.size(); ++i) {
            a.push_back({audit.block.argmin_a(i).real(),
                         audit.block.argmin_a(i).imag()});
        }
        for (Eigen::Index i = 0; i < audit.block.argmin_b.size(); ++i) {
            b.push_back({audit.block.argmin_b(i).real(),
                         audit.block.argmin_b(i).imag()});
        }
        cert["argmin_a"] = a;
        cert["argmin_b"] = b;
    }
    char claimed[128];
    std::snprintf(claimed, sizeof claimed,
                  "the Choi operator at (%g, %g) is a valid entanglement "
                  "witness (block positive)",
                  params.alpha, params.beta);
    return {id,
            "witness validity of the Choi operator at (" +
                format_sig17(params.alpha) + ", " + format_sig17(params.beta) +
                ")",
            claimed,
            "best product-state value " + format_sig17(audit.block.min_value),
            verdict,
            cert};
}

AuditRecord c11_beta_zero_positivity(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 11);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double alphas[] = {0.0, 0.5, 1.0, 2.0};
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        Matrix g(2, 2);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                g(i, j) = Complex(gauss(rng), gauss(rng));
            }
        }
        const Matrix a = g * g.adjoint();
        for (double alpha : alphas) {
            worst = std::min(
                worst, is_psd(apply_map({2, alpha, 0.0}, a)).min_eigenvalue);
        }
    }
    return {"C11-beta-zero-positivity",
            "map output on 500 random complex PSD inputs with beta = 0 and "
            "alpha in {0, 1/2, 1, 2}",
            "output is PSD for alpha >= 0 and beta = 0",
            "min eigenvalue over all trials = " + format_sig17(worst),
            worst >= -1e-9 ? kConfirmed : kRefuted,
            {{"min_eigenvalue", worst}, {"trials", 500}}};
}

AuditRecord c12_threshold_oracle() {
    const double star = min_alpha_threshold(Matrix::Identity(2, 2), 2.0);
    const double dev = std::abs(star - 0.5);
    return {"C12-threshold-identity",
            "bisection threshold alpha* for the identity input at gamma = 2",
            "1/2 (hand-derived: PSD iff 2 alpha >= gamma/2)",
            format_sig17(star),
            dev <= 1e-8 ? kConfirmed : kRefuted,
            {{"alpha_star", star}, {"abs_delta", dev}}};
}

AuditRecord c12_threshold_audit(const Matrix& a, double gamma, double claimed,
                                const std::string& claimed_text,
                                const std::string& id,
                                const std::string& subject) {
    const double tol = 1e-9;
    const double star = min_alpha_threshold(a, gamma, tol);
    const bool psd_at_star = is_psd(apply_map({2, star, -gamma}, a)).is_psd;
    const bool psd_below =
        is_psd(apply_map({2, star - tol, -gamma}, a)).is_psd;
    const PsdVerdict at_claimed = is_psd(apply_map({2, claimed, -gamma}, a));
    const bool claim_holds = at_claimed.is_psd && star <= claimed + 1e-6;
    return {id,
            subject,
            "output PSD for all alpha >= " + claimed_text + " = " +
                format_sig17(claimed),
            "alpha* = " + format_sig17(star) + "; at the claimed threshold "
            "the output has minimum eigenvalue " +
                format_sig17(at_claimed.min_eigenvalue),
            claim_holds ? kConfirmed : kRefuted,
            {{"alpha_star", star},
             {"claimed_threshold", claimed},
             {"psd_at_alpha_star", psd_at_star},
             {"psd_at_alpha_star_minus_tol", psd_below},
             {"min_eigenvalue_at_claimed", at_claimed.min_eigenvalue}}};
}

void c13_spectrum_audit(std::vector<AuditRecord>& records) {
    double worst14 = 0.0, worst58 = 0.0, worst58_alt = 0.0;
    int invalid = 0;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (int i = 0; i <= 10; ++i) {
        for (int j = 1; j <= 10; ++j) {
            const double alpha = double(i) / 5.0;
            const double gamma = double(j) / 5.0;
            const SpectrumAudit audit = analytic_choi_eigs(alpha, gamma);
            double d14 = 0.0, d58 = 0.0, d58_alt = 0.0;
            for (int k = 0; k < 4; ++k) d14 = std::max(d14, audit.dev[k]);
            for (int k = 4; k < 8; ++k) {
                if (std::isnan(audit.dev[k])) {
                    ++invalid;
                } else {
                    d58 = std::max(d58, audit.dev[k]);
                }
                d58_alt = std::max(d58_alt, audit.dev_alt[k]);
            }
            worst14 = std::max(worst14, d14);
            worst58 = std::max(worst58, d58);
            worst58_alt = std::max(worst58_alt, d58_alt);
            table.push_back({{"alpha", alpha},
                             {"gamma", gamma},
                             {"dev_mu1_4", d14},
                             {"dev_mu5_8", d58},
                             {"dev_mu5_8_alt", d58_alt}});
        }
    }
    records.push_back(
        {"C13-spectrum-mu1-4",
         "first four closed-form Choi eigenvalues vs the numeric spectrum on "
         "an 11x10 (alpha, gamma) grid",
         "each appears in the spectrum within 1e-10",
         "max nearest-eigenvalue deviation = " + format_sig17(worst14),
         worst14 <= 1e-10 ? kConfirmed : kRefuted,
         {{"max_deviation", worst14}}});
    records.push_back(
        {"C13-spectrum-mu5-8",
         "last four closed-form Choi eigenvalues, inner radical with the "
         "16 alpha^2 leading term, vs the numeric spectrum",
         "each appears in the spectrum",
         "max nearest-eigenvalue deviation = " + format_sig17(worst58) + "; " +
             std::to_string(invalid) + " entries take the square root of a "
             "negative number",
         worst58 <= 1e-10 && invalid == 0 ? kConfirmed : kRefuted,
         {{"max_deviation", worst58},
          {"invalid_entries", invalid},
          {"per_point", table}}});
    records.push_back(
        {"C13-spectrum-mu5-8-alt",
         "same expressions under the alternate 16 alpha^4 reading of the "
         "inner radical",
         "each appears in the spectrum",
         "max nearest-eigenvalue deviation = " + format_sig17(worst58_alt),
         worst58_alt <= 1e-10 ? kConfirmed : kRefuted,
         {{"max_deviation", worst58_alt}}});
}

void c14_char_coeff_audit(std::vector<AuditRecord>& records) {
    const Tolerances tol;
    auto record = [&](const Input2x2& in, const MapParams& params,
                      const std::string& id, const std::string& subject) {
        const CharCoeffs cc = analytic_char_coeffs(in, params, tol);
        const double k1_dev = std::abs(cc.k1 - *cc.gram_trace);
        const double k2_dev = std::abs(cc.k2 - 4.0 * *cc.gram_det);
        const bool agree = k1_dev <= 1e-12 && k2_dev <= 1e-12;
        records.push_back(
            {id, subject,
             "k1 = tr(V^dag V) and k2 = 4 det(V^dag V)",
             "k1 = " + format_sig17(cc.k1) + " vs " +
                 format_sig17(*cc.gram_trace) + "; k2 = " +
                 format_sig17(cc.k2) + " vs " + format_sig17(4.0 * *cc.gram_det),
             agree ? kConfirmed : kRefuted,
             {{"k1", cc.k1},
              {"k2", cc.k2},
              {"gram_trace", *cc.gram_trace},
              {"gram_det_times_4", 4.0 * *cc.gram_det}}});
    };
    record({1.0, 1.0, 1.0, 1.0}, {2, 1.0, 0.0}, "C14-char-coeffs-agree",
           "characteristic coefficients at a=d=1, b=c=1, alpha=1, beta=0");
    record({1.0, 0.0, 0.0, 2.0}, {2, 1.0, 0.0}, "C14-char-coeffs-k1",
           "characteristic coefficients at a=1, d=2, b=c=0, alpha=1, beta=0");
    record({1.0, 1.0, 1.0, 1.0}, {2, 1.0, 4.0}, "C14-char-coeffs-k2",
           "characteristic coefficients at a=d=1, b=c=1, alpha=1, beta=4");
}

}  // namespace

std::vector<AuditRecord> run_reproduction(const ReproduceOptions& opts) {
    if (opts.grid < 2) throw ParameterOutOfRange("grid must be >= 2");

    std::vector<AuditRecord> records;
    records.push_back(c01_closed_form_identity(opts.seed));
    records.push_back(c02_choi_identity());
    records.push_back(c03_reference_choi_matrices());
    records.push_back(c04_never_completely_positive());
    records.push_back(c05_horodecki_family(opts.grid));
    records.push_back(c06_npt_state());
    records.push_back(c07_detection_formula(opts.grid));
    records.push_back(c08_npt_detection());
    records.push_back(c09_block_psd_equivalence(opts.seed));
    records.push_back(
        c10_witness_validity({2, 0.75, -2.0}, "C10-witness-validity-3-4"));
    records.push_back(
        c10_witness_validity({2, 0.125, -1.0}, "C10-witness-validity-1-8"));
    records.push_back(c11_beta_zero_positivity(opts.seed));
    records.push_back(c12_threshold_oracle());
    records.push_back(c12_threshold_audit(
        input_a1(), 2.0, 9.0 * 2.0 / (2.0 * std::sqrt(146.0)),
        "9*gamma/(2*sqrt(146)) at gamma=2", "C12-threshold-A1",
        "positivity threshold in alpha for the first reference input at "
        "gamma = 2"));
    records.push_back(c12_threshold_audit(
        input_a2(), 1.0, 9.0 / (90.0 - 2.0 * std::sqrt(27.0)),
        "9*gamma/(90-2*sqrt(27)) at gamma=1", "C12-threshold-A2",
        "positivity threshold in alpha for the second reference input at "
        "gamma = 1"));
    c13_spectrum_audit(records);
    c14_char_coeff_audit(records);
    return records;
}

nlohmann::ordered_json report_to_json(const std::vector<AuditRecord>& records,
                                      const ReproduceOptions& opts) {
    nlohmann::ordered_json doc;
    doc["generator"] = "pncp reproduce";
    doc["grid"] = opts.grid;
    doc["seed"] = opts.seed;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const AuditRecord& r : records) {
        nlohmann::ordered_json item;
        item["claim_id"] = r.claim_id;
        item["subject"] = r.subject;
        item["claimed"] = r.claimed;
        item["computed"] = r.computed;
        item["verdict"] = r.verdict;
        item["certificate"] = r.certificate;
        list.push_back(std::move(item));
    }
    doc["records"] = std::move(list);
    return doc;
}

}  // namespace pncp
