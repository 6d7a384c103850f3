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

#ifndef QTM_HALTING_H
#define QTM_HALTING_H

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtm/evolution.h"
#include "qtm/input.h"
#include "qtm/machine.h"
#include "qtm/state.h"

namespace qtm {

/// When the operator looks at the halt qubit.
class MeasurementSchedule {
   public:
    enum class Kind { kEveryStep, kAtSteps, kEndOnly };

    static MeasurementSchedule every_step() {
        return MeasurementSchedule(Kind::kEveryStep, {}, 0);
    }
    /// Steps must be >= 1; throws std::invalid_argument otherwise.
    static MeasurementSchedule at_steps(std::set<std::int64_t> steps);
    /// Measures once after `n` steps; n == 0 means never.
    static MeasurementSchedule end_only(std::int64_t n);

    /// Parses "every", "end" (with `n` as the end step), "end:n" or
    /// "at:k1,k2,...".
    static MeasurementSchedule parse(std::string_view text, std::int64_t n);

    Kind kind() const noexcept {
        return kind_;
    }
    const std::set<std::int64_t> &steps() const noexcept {
        return steps_;
    }
    std::int64_t end_step() const noexcept {
        return end_;
    }

    bool measures_at(std::int64_t step) const;
    /// Largest scheduled step (0 when none); EveryStep reports 0.
    std::int64_t last_scheduled_step() const;

    /// "every", "end:n" or "at:k1,k2".
    std::string to_string() const;

    bool operator==(const MeasurementSchedule &) const = default;

   private:
    MeasurementSchedule(Kind kind, std::set<std::int64_t> steps, std::int64_t end)
        : kind_(kind), steps_(std::move(steps)), end_(end) {
    }

    Kind kind_;
    std::set<std::int64_t> steps_;
    std::int64_t end_;
};

struct HaltMeasurement {
    int bit = 0;
    double probability = 0;
    /// Renormalized post-measurement state.
    QuantumState collapsed;
};

/// Projective measurement of the halt qubit. Zero-probability outcomes are
/// omitted; the outcome-1 entry (if any) comes first. Probabilities are taken
/// relative to the state's squared norm.
std::vector<HaltMeasurement> measure_halt(const QuantumState &state);

struct Branch {
    double probability = 1;
    QuantumState state;
    /// (step, observed halt bit) for every measurement on this branch.
    std::vector<std::pair<std::int64_t, int>> transcript;
};

/// Splits a branch by measuring its halt qubit at `step`.
std::vector<Branch> split_branch(const Branch &branch, std::int64_t step);

/// Outcome of a halting-scheme run: the tape observed at halt (with the step
/// it was observed, unless coarsened away), or "still running" at budget.
struct Outcome {
    bool halted = false;
    std::optional<std::int64_t> step;
    Tape tape;

    static Outcome unhalted() {
        return Outcome{};
    }
    static Outcome halted_at(std::int64_t step, Tape tape) {
        return Outcome{true, step, std::move(tape)};
    }
    static Outcome halted_by_end(Tape tape) {
        return Outcome{true, std::nullopt, std::move(tape)};
    }

    bool operator==(const Outcome &) const = default;
    /// Halted outcomes first, by step then tape; the unhalted sentinel last.
    std::strong_ordering operator<=>(const Outcome &other) const {
        if (auto c = other.halted <=> halted; c != 0) {
            return c;
        }
        if (auto c = step <=> other.step; c != 0) {
            return c;
        }
        return tape <=> other.tape;
    }
};

struct OutputDistribution {
    std::map<Outcome, double> probabilities;
    /// Largest |norm^2 - 1| seen on any branch before renormalization.
    double max_norm_deviation = 0;
    /// Set when max_norm_deviation exceeds the run's tolerance; the machine is
    /// then not norm preserving on this input.
    bool norm_audit_flag = false;

    double total() const;
    double probability(const Outcome &outcome) const {
        auto it = probabilities.find(outcome);
        return it == probabilities.end() ? 0.0 : it->second;
    }
    /// Total probability of outcomes that halted at or before `step`.
    double halted_by(std::int64_t step) const;
    /// Drops halt steps from the keys, merging equal tapes.
    OutputDistribution coarsened() const;
};

struct RunOptions {
    double tol = kDefaultTolerance;
    StepOptions step;
};

/// Exact branch tracking of the halting scheme.
///
/// Each scheduled measurement splits the live branch; a branch that reads
/// halt = 1 has its tape read immediately (one outcome per distinct tape
/// content, head position ignored) and retires. Whatever is still live after
/// `budget` steps is reported as the unhalted sentinel.
///
/// Throws std::invalid_argument when the schedule reaches past `budget` and
/// MissingRuleError from evolution.
OutputDistribution run_schedule(const MachineSpec &spec, const InputSpec &input, const MeasurementSchedule &schedule,
                                std::int64_t budget, const RunOptions &options = {});

/// Half the L1 distance between two distributions.
double total_variation(const OutputDistribution &a, const OutputDistribution &b);

struct ComparisonReport {
    MeasurementSchedule schedule_a;
    MeasurementSchedule schedule_b;
    std::int64_t steps = 0;
    /// Coarsened distributions (halted-by-end, tape).
    OutputDistribution a;
    OutputDistribution b;
    double total_variation = 0;
    double max_abs_difference = 0;
    bool norm_audit_flag = false;
    double tol = kDefaultTolerance;

    bool equivalent() const {
        return total_variation <= tol;
    }
};

ComparisonReport compare_schedules(const MachineSpec &spec, const InputSpec &input, std::int64_t steps,
                                   const MeasurementSchedule &a, const MeasurementSchedule &b,
                                   const RunOptions &options = {});

struct EmpiricalDistribution {
    OutputDistribution distribution;
    std::map<Outcome, std::uint64_t> counts;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
};

/// Monte Carlo version of run_schedule: samples single trajectories using the
/// exact split probabilities. Identical arguments give identical results.
EmpiricalDistribution sample_run(const MachineSpec &spec, const InputSpec &input, const MeasurementSchedule &schedule,
                                 std::int64_t budget, std::uint64_t seed, std::uint64_t samples,
                                 const RunOptions &options = {});

}  // namespace qtm

#endif
