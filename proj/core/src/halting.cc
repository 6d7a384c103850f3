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

#include "qtm/halting.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qtm {

namespace {

/// What happened at one scheduled measurement of the live branch.
struct MeasurementRecord {
    std::int64_t step = 0;
    /// Probabilities conditional on the branch being alive before the
    /// measurement.
    double halt_probability = 0;
    double continue_probability = 0;
    /// Tape readout distribution conditional on halt = 1, canonical order.
    std::vector<std::pair<Tape, double>> tapes;
};

struct MeasurementChain {
    std::vector<MeasurementRecord> records;
    /// False when the live branch vanished before the budget ran out.
    bool alive_at_budget = true;
    double max_norm_deviation = 0;
};

std::vector<std::pair<Tape, double>> tape_readout(const QuantumState &halted) {
    std::map<Tape, double> weights;
    double total = 0;
    for (const auto &[config, amplitude] : halted) {
        weights[config.tape] += std::norm(amplitude);
        total += std::norm(amplitude);
    }
    std::vector<std::pair<Tape, double>> out;
    for (auto &[tape, weight] : weights) {
        out.emplace_back(tape, weight / total);
    }
    return out;
}

void check_budget(const MeasurementSchedule &schedule, std::int64_t budget) {
    if (budget < 0) {
        throw std::invalid_argument("budget must be non-negative");
    }
    if (schedule.last_scheduled_step() > budget) {
        throw std::invalid_argument("schedule " + schedule.to_string() + " measures after the budget of " +
                                    std::to_string(budget) + " steps");
    }
}

/// The halting scheme never keeps more than one live branch: halt = 1 retires
/// a branch, so the whole run is a chain of halt = 0 collapses.
MeasurementChain build_chain(const MachineSpec &spec, const InputSpec &input, const MeasurementSchedule &schedule,
                             std::int64_t budget, const RunOptions &options) {
    check_budget(schedule, budget);
    MeasurementChain chain;
    QuantumState state = initial_state(spec, input);
    double reference = state.norm2();
    chain.max_norm_deviation = std::abs(reference - 1.0);
    for (std::int64_t t = 1; t <= budget; ++t) {
        state = step(spec, state, options.step);
        chain.max_norm_deviation = std::max(chain.max_norm_deviation, std::abs(state.norm2() - reference));
        if (!schedule.measures_at(t)) {
            continue;
        }
        MeasurementRecord record;
        record.step = t;
        auto outcomes = measure_halt(state);
        QuantumState survivor;
        for (auto &outcome : outcomes) {
            if (outcome.bit == 1) {
                record.halt_probability = outcome.probability;
                record.tapes = tape_readout(outcome.collapsed);
            } else {
                record.continue_probability = outcome.probability;
                survivor = std::move(outcome.collapsed);
            }
        }
        chain.records.push_back(std::move(record));
        if (survivor.empty()) {
            chain.alive_at_budget = false;
            break;
        }
        state = std::move(survivor);
        reference = 1.0;
    }
    return chain;
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

MeasurementSchedule MeasurementSchedule::at_steps(std::set<std::int64_t> steps) {
    if (!steps.empty() && *steps.begin() < 1) {
        throw std::invalid_argument("scheduled measurement steps must be >= 1");
    }
    return MeasurementSchedule(Kind::kAtSteps, std::move(steps), 0);
}

MeasurementSchedule MeasurementSchedule::end_only(std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("end step must be >= 0");
    }
    return MeasurementSchedule(Kind::kEndOnly, {}, n);
}

MeasurementSchedule MeasurementSchedule::parse(std::string_view text, std::int64_t n) {
    if (text == "every") {
        return every_step();
    }
    if (text == "end") {
        return end_only(n);
    }
    if (text.starts_with("end:")) {
        std::string_view token = text.substr(4);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || token.empty() || value < 0) {
            throw std::invalid_argument("bad step '" + std::string(token) + "' in schedule");
        }
        return end_only(value);
    }
    if (text.starts_with("at:")) {
        std::set<std::int64_t> steps;
        std::string_view rest = text.substr(3);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string_view token = rest.substr(0, comma);
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
                throw std::invalid_argument("bad step '" + std::string(token) + "' in schedule");
            }
            steps.insert(value);
            if (comma == std::string_view::npos) {
                break;
            }
            rest = rest.substr(comma + 1);
        }
        if (steps.empty()) {
            throw std::invalid_argument("schedule 'at:' needs at least one step");
        }
        return at_steps(std::move(steps));
    }
    throw std::invalid_argument("unknown schedule '" + std::string(text) + "' (expected every, end, end:n or at:k1,k2,...)");
}

bool MeasurementSchedule::measures_at(std::int64_t step) const {
    switch (kind_) {
        case Kind::kEveryStep:
            return step >= 1;
        case Kind::kAtSteps:
            return steps_.count(step) > 0;
        case Kind::kEndOnly:
            return end_ >= 1 && step == end_;
    }
    return false;
}

std::int64_t MeasurementSchedule::last_scheduled_step() const {
    switch (kind_) {
        case Kind::kEveryStep:
            return 0;
        case Kind::kAtSteps:
            return steps_.empty() ? 0 : *steps_.rbegin();
        case Kind::kEndOnly:
            return end_;
    }
    return 0;
}

std::string MeasurementSchedule::to_string() const {
    switch (kind_) {
        case Kind::kEveryStep:
            return "every";
        case Kind::kEndOnly:
            return "end:" + std::to_string(end_);
        case Kind::kAtSteps: {
            std::string out = "at:";
            bool first = true;
            for (auto s : steps_) {
                if (!first) {
                    out += ',';
                }
                out += std::to_string(s);
                first = false;
            }
            return out;
        }
    }
    return "";
}

std::vector<HaltMeasurement> measure_halt(const QuantumState &state) {
    std::vector<HaltMeasurement> out;
    double norm2 = state.norm2();
    if (norm2 == 0) {
        return out;
    }
    for (int bit : {1, 0}) {
        QuantumState part = state.projected(bit == 1);
        double mass = part.norm2();
        if (mass == 0) {
            continue;
        }
        out.push_back({bit, mass / norm2, part.scaled(Amplitude(1.0 / std::sqrt(mass)))});
    }
    return out;
}

std::vector<Branch> split_branch(const Branch &branch, std::int64_t step) {
    std::vector<Branch> children;
    for (auto &outcome : measure_halt(branch.state)) {
        Branch child;
        child.probability = branch.probability * outcome.probability;
        child.state = std::move(outcome.collapsed);
        child.transcript = branch.transcript;
        child.transcript.emplace_back(step, outcome.bit);
        children.push_back(std::move(child));
    }
    return children;
}

double OutputDistribution::total() const {
    double sum = 0;
    for (const auto &[outcome, p] : probabilities) {
        sum += p;
    }
    return sum;
}

double OutputDistribution::halted_by(std::int64_t step) const {
    double sum = 0;
    for (const auto &[outcome, p] : probabilities) {
        if (outcome.halted && (!outcome.step || *outcome.step <= step)) {
            sum += p;
        }
    }
    return sum;
}

OutputDistribution OutputDistribution::coarsened() const {
    OutputDistribution out;
    out.max_norm_deviation = max_norm_deviation;
    out.norm_audit_flag = norm_audit_flag;
    for (const auto &[outcome, p] : probabilities) {
        Outcome key = outcome.halted ? Outcome::halted_by_end(outcome.tape) : Outcome::unhalted();
        out.probabilities[key] += p;
    }
    return out;
}

OutputDistribution run_schedule(const MachineSpec &spec, const InputSpec &input, const MeasurementSchedule &schedule,
                                std::int64_t budget, const RunOptions &options) {
    auto chain = build_chain(spec, input, schedule, budget, options);
    OutputDistribution dist;
    double alive = 1.0;
    for (const auto &record : chain.records) {
        for (const auto &[tape, p] : record.tapes) {
            dist.probabilities[Outcome::halted_at(record.step, tape)] += alive * record.halt_probability * p;
        }
        alive *= record.continue_probability;
    }
    if (chain.alive_at_budget && alive > 0) {
        dist.probabilities[Outcome::unhalted()] += alive;
    }
    dist.max_norm_deviation = chain.max_norm_deviation;
    dist.norm_audit_flag = chain.max_norm_deviation > options.tol;
    return dist;
}

double total_variation(const OutputDistribution &a, const OutputDistribution &b) {
    double sum = 0;
    auto ia = a.probabilities.begin();
    auto ib = b.probabilities.begin();
    while (ia != a.probabilities.end() || ib != b.probabilities.end()) {
        if (ib == b.probabilities.end() || (ia != a.probabilities.end() && ia->first < ib->first)) {
            sum += std::abs(ia->second);
            ++ia;
        } else if (ia == a.probabilities.end() || ib->first < ia->first) {
            sum += std::abs(ib->second);
            ++ib;
        } else {
            sum += std::abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return sum / 2;
}

ComparisonReport compare_schedules(const MachineSpec &spec, const InputSpec &input, std::int64_t steps,
                                   const MeasurementSchedule &a, const MeasurementSchedule &b,
                                   const RunOptions &options) {
    ComparisonReport report{a, b, steps, {}, {}, 0, 0, false, options.tol};
    report.a = run_schedule(spec, input, a, steps, options).coarsened();
    report.b = run_schedule(spec, input, b, steps, options).coarsened();
    report.total_variation = total_variation(report.a, report.b);
    std::set<Outcome> keys;
    for (const auto *dist : {&report.a, &report.b}) {
        for (const auto &[outcome, p] : dist->probabilities) {
            keys.insert(outcome);
        }
    }
    for (const auto &key : keys) {
        report.max_abs_difference =
            std::max(report.max_abs_difference, std::abs(report.a.probability(key) - report.b.probability(key)));
    }
    report.norm_audit_flag = report.a.norm_audit_flag || report.b.norm_audit_flag;
    return report;
}

EmpiricalDistribution sample_run(const MachineSpec &spec, const InputSpec &input, const MeasurementSchedule &schedule,
                                 std::int64_t budget, std::uint64_t seed, std::uint64_t samples,
                                 const RunOptions &options) {
    if (samples < 1) {
        throw std::invalid_argument("sample count must be >= 1");
    }
    auto chain = build_chain(spec, input, schedule, budget, options);
    std::mt19937_64 rng(seed);
    EmpiricalDistribution result;
    result.seed = seed;
    result.samples = samples;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Outcome outcome = Outcome::unhalted();
        for (const auto &record : chain.records) {
            double u = uniform01(rng);
            if (u >= record.halt_probability) {
                continue;
            }
            double v = uniform01(rng);
            double cumulative = 0;
            const Tape *chosen = &record.tapes.back().first;
            for (const auto &[tape, p] : record.tapes) {
                cumulative += p;
                if (v < cumulative) {
                    chosen = &tape;
                    break;
                }
            }
            outcome = Outcome::halted_at(record.step, *chosen);
            break;
        }
        ++result.counts[outcome];
    }
    for (const auto &[outcome, count] : result.counts) {
        result.distribution.probabilities[outcome] = static_cast<double>(count) / static_cast<double>(samples);
    }
    result.distribution.max_norm_deviation = chain.max_norm_deviation;
    result.distribution.norm_audit_flag = chain.max_norm_deviation > options.tol;
    return result;
}

}  // namespace qtm
