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

#ifndef PNCP_AUDIT_HPP
#define PNCP_AUDIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace pncp {

/// One audited claim. REFUTED records always carry a certificate;
/// CONFIRMED means the computed value agrees with the claimed one within the
/// claim's stated tolerance. Refutations are findings, not errors.
struct AuditRecord {
    std::string claim_id;  ///< e.g. "C07-detection-formula"
    std::string subject;
    std::string claimed;
    std::string computed;
    std::string verdict;  ///< CONFIRMED | REFUTED | INAPPLICABLE
    nlohmann::ordered_json certificate;
};

struct ReproduceOptions {
    int grid = 101;           ///< points for the b-parameter scans
    std::uint64_t seed = 0;   ///< seed for the randomized property claims
};

/// Run every built-in claim audit (C01..C14). Deterministic: identical
/// options produce identical records.
std::vector<AuditRecord> run_reproduction(const ReproduceOptions& opts = {});

/// Assemble the records into the report document written by the CLI.
nlohmann::ordered_json report_to_json(const std::vector<AuditRecord>& records,
                                      const ReproduceOptions& opts);

}  // namespace pncp

#endif
