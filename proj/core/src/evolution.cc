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

#include "qtm/evolution.h"

#include <sstream>

#include "qtm/format.h"

namespace qtm {

MissingRuleError::MissingRuleError(const MachineSpec &spec, Configuration config)
    : std::runtime_error("no rule for (" + spec.state_name(config.state) + ", " + config.read() +
                         ") reached by configuration " + to_string(spec, config)),
      config_(std::move(config)) {
}

void accumulate_image(const MachineSpec &spec, const Configuration &config, Amplitude weight, QuantumState &out) {
    Symbol read = config.read();
    const auto *targets = spec.rule(config.state, read);
    if (targets == nullptr) {
        throw MissingRuleError(spec, config);
    }
    for (const auto &target : *targets) {
        Configuration next = Configuration::make(spec, target.next, config.tape, config.head + delta(target.move));
        if (target.write != read) {
            next.tape.write(config.head, target.write);
        }
        out.add(std::move(next), weight * target.amplitude);
    }
}

QuantumState image(const MachineSpec &spec, const Configuration &config) {
    QuantumState out;
    accumulate_image(spec, config, Amplitude(1.0), out);
    return out;
}

QuantumState step(const MachineSpec &spec, const QuantumState &state, const StepOptions &options) {
    QuantumState next;
    for (const auto &[config, amplitude] : state) {
        accumulate_image(spec, config, amplitude, next);
    }
    if (options.prune > 0) {
        next.prune(options.prune);
    }
    return next;
}

TraceRow trace_row(std::int64_t step, const QuantumState &state) {
    return TraceRow{step, state.size(), state.norm2(), state.halted_mass()};
}

std::pair<QuantumState, EvolutionTrace> evolve_state(const MachineSpec &spec, QuantumState state, std::int64_t steps,
                                                     const StepOptions &options) {
    if (steps < 0) {
        throw std::invalid_argument("step count must be non-negative");
    }
    EvolutionTrace trace;
    trace.prune = options.prune;
    trace.rows.reserve(static_cast<std::size_t>(steps) + 1);
    trace.rows.push_back(trace_row(0, state));
    for (std::int64_t n = 1; n <= steps; ++n) {
        state = step(spec, state, options);
        trace.rows.push_back(trace_row(n, state));
    }
    return {std::move(state), std::move(trace)};
}

std::pair<QuantumState, EvolutionTrace> evolve(const MachineSpec &spec, const InputSpec &input, std::int64_t steps,
                                               const StepOptions &options) {
    return evolve_state(spec, initial_state(spec, input), steps, options);
}

std::string trace_csv(const EvolutionTrace &trace) {
    std::ostringstream out;
    out << "step,support,norm2,halted_mass\n";
    for (const auto &row : trace.rows) {
        out << row.step << ',' << row.support << ',' << format_double(row.norm2) << ','
            << format_double(row.halted_mass) << '\n';
    }
    return out.str();
}

}  // namespace qtm
