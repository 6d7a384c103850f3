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


#include "cli.h"

#include <cctype>
#include <fstream>
#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtm/classical.h"
#include "qtm/evolution.h"
#include "qtm/experiments.h"
#include "qtm/halting.h"
#include "qtm/input.h"
#include "qtm/machine.h"
#include "qtm/report.h"
#include "qtm/wellformedness.h"

namespace qtmlab {

namespace {

using qtm::ReportParameters;

/// Error that has already been given a user-facing message.
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text) || !file.flush()) {
        throw UsageError("cannot write '" + path + "'");
    }
}

/// Writes `text` to `path`, or to `out` when no path was given.
void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_file(path, text);
    }
}

template <typename Parse>
auto parse_file(const std::string &path, Parse parse) {
    std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const qtm::ParseError &e) {
        throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column() + 1) + ": " +
                         e.detail());
    }
}

qtm::MachineSpec load_machine(const std::string &path) {
    return parse_file(path, [](const std::string &text) { return qtm::parse_machine(text); });
}

qtm::ClassicalTM load_classical(const std::string &path) {
    return parse_file(path, [](const std::string &text) { return qtm::parse_classical(text); });
}

qtm::InputSpec load_input(const std::string &text, const qtm::MachineSpec &spec, double tol) {
    try {
        return qtm::parse_input(text, spec, tol);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--input: ") + e.what());
    }
}

/// Splits "every,at:2,3,end" into {"every", "at:2,3", "end"}: bare step
/// numbers continue the preceding `at:` list.
std::vector<std::string> split_schedules(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        bool numeric = !token.empty() && std::all_of(token.begin(), token.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        });
        if (numeric && !out.empty() && out.back().starts_with("at:")) {
            out.back() += "," + token;
        } else {
            out.push_back(token);
        }
    }
    return out;
}

qtm::MeasurementSchedule load_schedule(const std::string &text, std::int64_t steps) {
    try {
        return qtm::MeasurementSchedule::parse(text, steps);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--schedule: ") + e.what());
    }
}

struct CommonOptions {
    std::string machine;
    std::string input;
    std::int64_t steps = 0;
    double tol = qtm::kDefaultTolerance;
    std::string json;
};

void add_machine(CLI::App *command, std::string &path, const std::string &what) {
    command->add_option("machine", path, what)->required();
}

void add_steps(CLI::App *command, CommonOptions &options) {
    command->add_option("--steps", options.steps, "Number of steps to run")->required()->check(CLI::NonNegativeNumber);
}

void add_tol(CLI::App *command, CommonOptions &options) {
    command->add_option("--tol", options.tol, "Numerical tolerance")->check(CLI::PositiveNumber)->capture_default_str();
}

void add_json(CLI::App *command, std::string &path) {
    command->add_option("--json", path, "Write the JSON report to PATH instead of stdout");
}

int run_check(const CommonOptions &options, std::size_t max_witnesses, std::ostream &out) {
    qtm::MachineSpec spec = load_machine(options.machine);
    auto structural = qtm::validate_structure(spec, options.tol);
    ReportParameters parameters;
    parameters.add("tol", options.tol).add("max_witnesses", static_cast<std::uint64_t>(max_witnesses));
    std::optional<qtm::WellformednessReport> report;
    if (structural.empty()) {
        report = qtm::check_wellformed(spec, options.tol);
    }
    emit(options.json,
         qtm::check_report_json(options.machine, parameters, spec, structural, report ? &*report : nullptr,
                                max_witnesses),
         out);
    bool ok = structural.empty() && report->well_formed();
    return ok ? kExitOk : kExitFinding;
}

int run_run(const CommonOptions &options, const std::string &schedule_text, std::ostream &out) {
    qtm::MachineSpec spec = load_machine(options.machine);
    qtm::InputSpec input = load_input(options.input, spec, options.tol);
    qtm::MeasurementSchedule schedule = load_schedule(schedule_text, options.steps);
    qtm::RunOptions run_options;
    run_options.tol = options.tol;
    auto distribution = qtm::run_schedule(spec, input, schedule, options.steps, run_options);
    ReportParameters parameters;
    parameters.add("input", qtm::render_input(input))
        .add("steps", options.steps)
        .add("schedule", schedule.to_string())
        .add("tol", options.tol);
    emit(options.json, qtm::distribution_report_json(options.machine, parameters, distribution), out);
    return distribution.norm_audit_flag ? kExitFinding : kExitOk;
}

int run_sample(const CommonOptions &options, const std::string &schedule_text, std::uint64_t seed,
               std::uint64_t samples, std::ostream &out) {
    qtm::MachineSpec spec = load_machine(options.machine);
    qtm::InputSpec input = load_input(options.input, spec, options.tol);
    qtm::MeasurementSchedule schedule = load_schedule(schedule_text, options.steps);
    qtm::RunOptions run_options;
    run_options.tol = options.tol;
    auto empirical = qtm::sample_run(spec, input, schedule, options.steps, seed, samples, run_options);
    ReportParameters parameters;
    parameters.add("input", qtm::render_input(input))
        .add("steps", options.steps)
        .add("schedule", schedule.to_string())
        .add("seed", seed)
        .add("samples", samples)
        .add("tol", options.tol);
    emit(options.json, qtm::sample_report_json(options.machine, parameters, empirical), out);
    return empirical.distribution.norm_audit_flag ? kExitFinding : kExitOk;
}

int run_compare(const CommonOptions &options, const std::string &schedules_text, std::ostream &out) {
    qtm::MachineSpec spec = load_machine(options.machine);
    qtm::InputSpec input = load_input(options.input, spec, options.tol);
    auto names = split_schedules(schedules_text);
    if (names.size() != 2) {
        throw UsageError("--schedules needs exactly two schedules, e.g. every,end");
    }
    auto a = load_schedule(names[0], options.steps);
    auto b = load_schedule(names[1], options.steps);
    qtm::RunOptions run_options;
    run_options.tol = options.tol;
    auto report = qtm::compare_schedules(spec, input, options.steps, a, b, run_options);
    ReportParameters parameters;
    parameters.add("input", qtm::render_input(input))
        .add("steps", options.steps)
        .add("schedules", a.to_string() + "," + b.to_string())
        .add("tol", options.tol);
    emit(options.json, qtm::comparison_report_json(options.machine, parameters, report), out);
    return report.equivalent() && !report.norm_audit_flag ? kExitOk : kExitFinding;
}

int run_trace(const CommonOptions &options, const std::string &csv, double prune, std::ostream &out) {
    qtm::MachineSpec spec = load_machine(options.machine);
    qtm::InputSpec input = load_input(options.input, spec, options.tol);
    qtm::StepOptions step_options;
    step_options.prune = prune;
    auto [state, trace] = qtm::evolve(spec, input, options.steps, step_options);
    emit(csv, qtm::trace_csv(trace), out);
    return kExitOk;
}

int run_lift(const std::string &path, const std::string &output, const std::string &json, std::ostream &out,
             std::ostream &err) {
    qtm::ClassicalTM tm = load_classical(path);
    auto witnesses = qtm::check_reversible(tm);
    auto blocking = qtm::blocking_witnesses(witnesses);
    if (!json.empty()) {
        emit(json, qtm::lift_report_json(path, ReportParameters{}, tm, witnesses), out);
    }
    if (!blocking.empty()) {
        qtm::MachineSpec lifted = qtm::lift_unchecked(tm);
        const auto &w = blocking.front();
        err << "qtmlab: " << path << " is not reversible: " << blocking.size()
            << " configuration pairs share a successor, e.g. " << qtm::to_string(lifted, w.first) << " and "
            << qtm::to_string(lifted, w.second) << " both step to " << qtm::to_string(lifted, w.image) << "\n";
        return kExitFinding;
    }
    write_file(output, qtm::render_machine(qtm::lift_to_qtm(tm)));
    return kExitOk;
}

int run_myers(const CommonOptions &options, const std::string &input_a, const std::string &input_b,
              std::ostream &out) {
    qtm::MachineSpec spec = load_machine(options.machine);
    qtm::MyersReport report;
    try {
        report = qtm::myers_demo(spec, input_a, input_b, options.steps, options.tol);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--input-a/--input-b: ") + e.what());
    }
    ReportParameters parameters;
    parameters.add("input_a", input_a).add("input_b", input_b).add("steps", options.steps).add("tol", options.tol);
    emit(options.json, qtm::myers_report_json(options.machine, parameters, report), out);
    return report.window ? kExitFinding : kExitOk;
}

int run_subspace(const CommonOptions &options, std::ostream &out) {
    qtm::MachineSpec spec = load_machine(options.machine);
    qtm::InputSpec input = load_input(options.input, spec, options.tol);
    auto report = qtm::analyze_halting_subspace(spec, input, options.steps, options.tol);
    ReportParameters parameters;
    parameters.add("input", qtm::render_input(input)).add("steps", options.steps).add("tol", options.tol);
    emit(options.json, qtm::subspace_report_json(options.machine, parameters, spec, report), out);
    return report.verdict == qtm::SubspaceReport::Verdict::kGapFound ? kExitFinding : kExitOk;
}

}  // namespace

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum Turing machine simulation lab", "qtmlab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qtm::kToolVersion));

    CommonOptions check_options;
    std::size_t max_witnesses = 50;
    auto *check = app.add_subcommand("check", "Check structure and well-formedness of a machine");
    add_machine(check, check_options.machine, "Machine file (.qtm)");
    add_tol(check, check_options);
    add_json(check, check_options.json);
    check->add_option("--max-witnesses", max_witnesses, "Maximum number of witnesses listed in the report")
        ->capture_default_str();

    CommonOptions run_options;
    std::string run_schedule = "every";
    auto *run = app.add_subcommand("run", "Exact output distribution under a halt-measurement schedule");
    add_machine(run, run_options.machine, "Machine file (.qtm)");
    run->add_option("--input", run_options.input, "Input superposition, e.g. 1/sqrt(2):0 + 1/sqrt(2):1")
        ->required();
    add_steps(run, run_options);
    run->add_option("--schedule", run_schedule, "every, end, end:n or at:k1,k2,...")->capture_default_str();
    add_tol(run, run_options);
    add_json(run, run_options.json);

    CommonOptions sample_options;
    std::string sample_schedule;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    auto *sample = app.add_subcommand("sample", "Monte Carlo sampling of single measured trajectories");
    add_machine(sample, sample_options.machine, "Machine file (.qtm)");
    sample->add_option("--input", sample_options.input, "Input superposition")->required();
    add_steps(sample, sample_options);
    sample->add_option("--schedule", sample_schedule, "every, end, end:n or at:k1,k2,...")->required();
    sample->add_option("--seed", seed, "Random seed")->required();
    sample->add_option("--samples", samples, "Number of trajectories")->required()->check(CLI::PositiveNumber);
    add_tol(sample, sample_options);
    add_json(sample, sample_options.json);

    CommonOptions compare_options;
    std::string schedules;
    auto *compare = app.add_subcommand("compare", "Compare output distributions of two schedules");
    add_machine(compare, compare_options.machine, "Machine file (.qtm)");
    compare->add_option("--input", compare_options.input, "Input superposition")->required();
    add_steps(compare, compare_options);
    compare->add_option("--schedules", schedules, "Two schedules, e.g. every,end or at:2,4,end")->required();
    add_tol(compare, compare_options);
    add_json(compare, compare_options.json);

    CommonOptions trace_options;
    std::string csv;
    double prune = 0;
    auto *trace = app.add_subcommand("trace", "Per-step support, norm and halted mass of the unmeasured run");
    add_machine(trace, trace_options.machine, "Machine file (.qtm)");
    trace->add_option("--input", trace_options.input, "Input superposition")->required();
    add_steps(trace, trace_options);
    trace->add_option("--csv", csv, "Write the CSV trace to PATH instead of stdout");
    trace->add_option("--prune", prune, "Drop amplitudes with modulus below this value")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    std::string tm_path;
    std::string lift_output;
    std::string lift_json;
    auto *lift = app.add_subcommand("lift", "Lift a reversible classical machine to a quantum machine");
    lift->add_option("machine", tm_path, "Classical machine file (.tm)")->required();
    lift->add_option("-o,--output", lift_output, "Output machine file (.qtm)")->required();
    lift->add_option("--json", lift_json, "Write the reversibility report to PATH");

    CommonOptions myers_options;
    std::string input_a;
    std::string input_b;
    auto *myers = app.add_subcommand("myers", "Halted mass of an equal superposition of two classical inputs");
    add_machine(myers, myers_options.machine, "Machine file (.qtm)");
    myers->add_option("--input-a", input_a, "First classical input")->required();
    myers->add_option("--input-b", input_b, "Second classical input")->required();
    add_steps(myers, myers_options);
    add_tol(myers, myers_options);
    add_json(myers, myers_options.json);

    CommonOptions subspace_options;
    auto *subspace = app.add_subcommand("subspace", "Compare the halted subspace with its image under one step");
    add_machine(subspace, subspace_options.machine, "Machine file (.qtm)");
    subspace->add_option("--input", subspace_options.input, "Input superposition")->required();
    add_steps(subspace, subspace_options);
    add_tol(subspace, subspace_options);
    add_json(subspace, subspace_options.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (check->parsed()) {
            return run_check(check_options, max_witnesses, out);
        }
        if (run->parsed()) {
            return run_run(run_options, run_schedule, out);
        }
        if (sample->parsed()) {
            return run_sample(sample_options, sample_schedule, seed, samples, out);
        }
        if (compare->parsed()) {
            return run_compare(compare_options, schedules, out);
        }
        if (trace->parsed()) {
            return run_trace(trace_options, csv, prune, out);
        }
        if (lift->parsed()) {
            return run_lift(tm_path, lift_output, lift_json, out, err);
        }
        if (myers->parsed()) {
            return run_myers(myers_options, input_a, input_b, out);
        }
        if (subspace->parsed()) {
            return run_subspace(subspace_options, out);
        }
    } catch (const std::exception &e) {
        err << "qtmlab: " << e.what() << "\n";
        return kExitError;
    }
    err << "qtmlab: no subcommand\n";
    return kExitError;
}

}  // namespace qtmlab
