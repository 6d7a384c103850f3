// Copyright 2026 The qtmlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON rendering of analysis results.
//
// Every report is wrapped in the envelope
//
//     {"tool": ..., "version": ..., "machine": ..., "parameters": {...}, "result": {...}}
//
// Keys are emitted in the order documented on each function; doubles use the
// shortest representation that round-trips. Identical inputs give
// byte-identical text.

#ifndef QTM_REPORT_H
#define QTM_REPORT_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qtm/classical.h"
#include "qtm/experiments.h"
#include "qtm/halting.h"
#include "qtm/machine.h"
#include "qtm/wellformedness.h"

namespace qtm {

inline constexpr const char *kToolName = "qtmlab";
inline constexpr const char *kToolVersion = "1.0.0";

using ParameterValue = std::variant<std::string, std::int64_t, std::uint64_t, double>;

/// The envelope's "parameters" object, emitted in insertion order.
struct ReportParameters {
    std::vector<std::pair<std::string, ParameterValue>> entries;

    ReportParameters &add(std::string key, ParameterValue value) {
        entries.emplace_back(std::move(key), std::move(value));
        return *this;
    }
};

/// result: verdict, guaranteed_by_construction, structural_violations,
/// orthogonality_checked (false when `report` is null), and when checked:
/// norm_violations, candidate_pairs, undefined_keys, isometric_up_to_halt_drift,
/// witness_count, local_witness_count, witnesses_truncated, witnesses.
std::string check_report_json(const std::string &machine, const ReportParameters &parameters,
                              const MachineSpec &spec, const std::vector<Violation> &structural,
                              const WellformednessReport *report, std::size_t max_witnesses);

/// result: norm_audit_flag, max_norm_deviation, total, distribution.
std::string distribution_report_json(const std::string &machine, const ReportParameters &parameters,
                                     const OutputDistribution &distribution);

/// result: seed, samples, norm_audit_flag, distribution (with counts).
std::string sample_report_json(const std::string &machine, const ReportParameters &parameters,
                               const EmpiricalDistribution &empirical);

/// result: schedules, steps, tol, total_variation, max_abs_difference,
/// equivalent, norm_audit_flag, outcome_key, a, b.
std::string comparison_report_json(const std::string &machine, const ReportParameters &parameters,
                                   const ComparisonReport &report);

/// result: window, per_step.
std::string myers_report_json(const std::string &machine, const ReportParameters &parameters,
                              const MyersReport &report);

/// result: window_steps, verdict, halted_basis_count, unhalted_source_count,
/// gram_deviation, newly_halting_vectors, max_overlap_with_uv, max_residual,
/// same_step_overlap, gap_sources.
std::string subspace_report_json(const std::string &machine, const ReportParameters &parameters,
                                 const MachineSpec &spec, const SubspaceReport &report);

/// result: reversible, blocking_witnesses, halt_drift_witnesses (count).
std::string lift_report_json(const std::string &machine, const ReportParameters &parameters, const ClassicalTM &tm,
                             const std::vector<InjectivityWitness> &witnesses);

}  // namespace qtm

#endif
