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


#include "qtm/report.h"

#include <algorithm>

#include "json.hpp"

namespace qtm {

namespace {

using Json = nlohmann::ordered_json;

Json envelope(const std::string &machine, const ReportParameters &parameters, Json result) {
    Json params = Json::object();
    for (const auto &[key, value] : parameters.entries) {
        std::visit([&, &key = key](const auto &v) { params[key] = v; }, value);
    }
    Json out = Json::object();
    out["tool"] = kToolName;
    out["version"] = kToolVersion;
    out["machine"] = machine;
    out["parameters"] = std::move(params);
    out["result"] = std::move(result);
    return out;
}

std::string dump(const Json &json) {
    return json.dump(2) + "\n";
}

Json amplitude_json(Amplitude amplitude) {
    Json out = Json::object();
    out["text"] = render_amplitude(amplitude);
    out["re"] = amplitude.real();
    out["im"] = amplitude.imag();
    return out;
}

Json configuration_json(const MachineSpec &spec, const Configuration &config) {
    Json out = Json::object();
    out["halted"] = config.halted;
    out["state"] = spec.state_name(config.state);
    out["head"] = config.head;
    out["tape"] = config.tape.to_string();
    return out;
}

Json configuration_json(const ClassicalTM &tm, const Configuration &config) {
    Json out = Json::object();
    out["halted"] = config.halted;
    out["state"] = tm.state_name(config.state);
    out["head"] = config.head;
    out["tape"] = config.tape.to_string();
    return out;
}

Json key_json(const std::vector<std::string> &states, const RuleKey &key) {
    Json out = Json::object();
    out["state"] = states.at(key.state.value);
    out["symbol"] = std::string(1, key.symbol);
    return out;
}

const char *kind_name(WitnessKind kind) {
    return kind == WitnessKind::kLocal ? "local" : "halt_drift";
}

Json outcome_json(const Outcome &outcome) {
    Json out = Json::object();
    out["halted"] = outcome.halted;
    out["step"] = outcome.step ? Json(*outcome.step) : Json(nullptr);
    out["tape"] = outcome.halted ? Json(outcome.tape.to_string()) : Json(nullptr);
    return out;
}

Json distribution_json(const OutputDistribution &distribution) {
    Json entries = Json::array();
    for (const auto &[outcome, probability] : distribution.probabilities) {
        Json entry = outcome_json(outcome);
        entry["probability"] = probability;
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace

std::string check_report_json(const std::string &machine, const ReportParameters &parameters,
                              const MachineSpec &spec, const std::vector<Violation> &structural,
                              const WellformednessReport *report, std::size_t max_witnesses) {
    Json result = Json::object();
    bool ok = structural.empty() && report != nullptr && report->well_formed();
    result["verdict"] = ok ? "well_formed" : "violation";
    Json guaranteed = Json::array();
    for (auto text : kGuaranteedByConstruction) {
        guaranteed.push_back(std::string(text));
    }
    result["guaranteed_by_construction"] = std::move(guaranteed);

    Json violations = Json::array();
    for (const auto &violation : structural) {
        Json entry = Json::object();
        entry["kind"] = violation.kind == Violation::Kind::kHaltedRule ? "halted_rule" : "row_norm";
        entry["key"] = key_json(spec.states, violation.key);
        entry["norm2"] = violation.norm2;
        entry["message"] = violation.message;
        violations.push_back(std::move(entry));
    }
    result["structural_violations"] = std::move(violations);
    if (report == nullptr) {
        result["orthogonality_checked"] = false;
        return dump(envelope(machine, parameters, std::move(result)));
    }
    result["orthogonality_checked"] = true;

    Json norms = Json::array();
    for (const auto &violation : report->norm_violations) {
        Json entry = Json::object();
        entry["key"] = key_json(spec.states, violation.key);
        entry["norm2"] = violation.norm2;
        norms.push_back(std::move(entry));
    }
    result["norm_violations"] = std::move(norms);
    result["candidate_pairs"] = report->candidate_count;
    Json undefined = Json::array();
    for (const auto &key : report->undefined_keys) {
        undefined.push_back(key_json(spec.states, key));
    }
    result["undefined_keys"] = std::move(undefined);
    result["isometric_up_to_halt_drift"] = report->isometric_up_to_halt_drift();
    std::size_t local = static_cast<std::size_t>(std::count_if(
        report->witnesses.begin(), report->witnesses.end(),
        [](const auto &w) { return w.kind == WitnessKind::kLocal; }));
    result["witness_count"] = report->witnesses.size();
    result["local_witness_count"] = local;
    result["witnesses_truncated"] = report->witnesses.size() > max_witnesses;
    Json witnesses = Json::array();
    for (std::size_t i = 0; i < report->witnesses.size() && i < max_witnesses; ++i) {
        const auto &w = report->witnesses[i];
        Json entry = Json::object();
        entry["kind"] = kind_name(w.kind);
        entry["first"] = configuration_json(spec, w.first);
        entry["second"] = configuration_json(spec, w.second);
        entry["inner_product"] = amplitude_json(w.inner_product);
        entry["abs_inner_product"] = std::abs(w.inner_product);
        witnesses.push_back(std::move(entry));
    }
    result["witnesses"] = std::move(witnesses);
    return dump(envelope(machine, parameters, std::move(result)));
}

std::string distribution_report_json(const std::string &machine, const ReportParameters &parameters,
                                     const OutputDistribution &distribution) {
    Json result = Json::object();
    result["norm_audit_flag"] = distribution.norm_audit_flag;
    result["max_norm_deviation"] = distribution.max_norm_deviation;
    result["total"] = distribution.total();
    result["distribution"] = distribution_json(distribution);
    return dump(envelope(machine, parameters, std::move(result)));
}

std::string sample_report_json(const std::string &machine, const ReportParameters &parameters,
                               const EmpiricalDistribution &empirical) {
    Json result = Json::object();
    result["seed"] = empirical.seed;
    result["samples"] = empirical.samples;
    result["norm_audit_flag"] = empirical.distribution.norm_audit_flag;
    Json entries = Json::array();
    for (const auto &[outcome, count] : empirical.counts) {
        Json entry = outcome_json(outcome);
        entry["count"] = count;
        entry["frequency"] = empirical.samples == 0 ? 0.0
                                                    : static_cast<double>(count) /
                                                          static_cast<double>(empirical.samples);
        entry["probability"] = empirical.distribution.probability(outcome);
        entries.push_back(std::move(entry));
    }
    result["distribution"] = std::move(entries);
    return dump(envelope(machine, parameters, std::move(result)));
}

std::string comparison_report_json(const std::string &machine, const ReportParameters &parameters,
                                   const ComparisonReport &report) {
    Json result = Json::object();
    result["schedules"] = Json::array({report.schedule_a.to_string(), report.schedule_b.to_string()});
    result["steps"] = report.steps;
    result["tol"] = report.tol;
    result["total_variation"] = report.total_variation;
    result["max_abs_difference"] = report.max_abs_difference;
    result["equivalent"] = report.equivalent();
    result["norm_audit_flag"] = report.norm_audit_flag;
    result["outcome_key"] = "halted_by_end,tape";
    result["a"] = distribution_json(report.a);
    result["b"] = distribution_json(report.b);
    return dump(envelope(machine, parameters, std::move(result)));
}

std::string myers_report_json(const std::string &machine, const ReportParameters &parameters,
                              const MyersReport &report) {
    Json result = Json::object();
    if (report.window) {
        result["window"] = Json::array({report.window->first, report.window->second});
    } else {
        result["window"] = nullptr;
    }
    Json rows = Json::array();
    for (const auto &[step, mass] : report.per_step) {
        Json row = Json::object();
        row["step"] = step;
        row["halted_mass"] = mass;
        rows.push_back(std::move(row));
    }
    result["per_step"] = std::move(rows);
    return dump(envelope(machine, parameters, std::move(result)));
}

std::string subspace_report_json(const std::string &machine, const ReportParameters &parameters,
                                 const MachineSpec &spec, const SubspaceReport &report) {
    Json result = Json::object();
    result["window_steps"] = report.window_steps;
    result["verdict"] = to_string(report.verdict);
    result["tol"] = report.tol;
    result["halted_basis_count"] = report.halted_basis_count;
    result["unhalted_source_count"] = report.unhalted_source_count;
    result["gram_deviation"] = report.gram_deviation;
    result["newly_halting_vectors"] = report.newly_halting_vectors;
    result["max_overlap_with_uv"] = report.max_overlap_with_uv;
    result["max_residual"] = report.max_residual;
    result["same_step_overlap"] = report.same_step_overlap;
    Json sources = Json::array();
    for (const auto &config : report.gap_sources) {
        sources.push_back(configuration_json(spec, config));
    }
    result["gap_sources"] = std::move(sources);
    return dump(envelope(machine, parameters, std::move(result)));
}

std::string lift_report_json(const std::string &machine, const ReportParameters &parameters, const ClassicalTM &tm,
                             const std::vector<InjectivityWitness> &witnesses) {
    auto blocking = blocking_witnesses(witnesses);
    Json result = Json::object();
    result["reversible"] = blocking.empty();
    result["halt_drift_witnesses"] = witnesses.size() - blocking.size();
    Json entries = Json::array();
    for (const auto &w : blocking) {
        Json entry = Json::object();
        entry["first"] = configuration_json(tm, w.first);
        entry["second"] = configuration_json(tm, w.second);
        entry["image"] = configuration_json(tm, w.image);
        entries.push_back(std::move(entry));
    }
    result["blocking_witnesses"] = std::move(entries);
    return dump(envelope(machine, parameters, std::move(result)));
}

}  // namespace qtm
