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

#ifndef QTM_EVOLUTION_H
#define QTM_EVOLUTION_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtm/input.h"
#include "qtm/machine.h"
#include "qtm/state.h"

namespace qtm {

/// Raised when a configuration in the support has no rule for the symbol
/// under its head. Quantum machines never fall back to an implicit halt.
class MissingRuleError : public std::runtime_error {
   public:
    MissingRuleError(const MachineSpec &spec, Configuration config);

    const Configuration &configuration() const noexcept {
        return config_;
    }

   private:
    Configuration config_;
};

struct StepOptions {
    /// Entries whose modulus is below prune are dropped after each step. Exact
    /// cancellations are always dropped.
    double prune = 0;
};

/// Appends U|config> scaled by `weight` into `out`.
void accumulate_image(const MachineSpec &spec, const Configuration &config, Amplitude weight, QuantumState &out);

/// U|config> for a single basis configuration.
QuantumState image(const MachineSpec &spec, const Configuration &config);

/// One application of the step operator.
QuantumState step(const MachineSpec &spec, const QuantumState &state, const StepOptions &options = {});

struct TraceRow {
    std::int64_t step = 0;
    std::size_t support = 0;
    double norm2 = 0;
    double halted_mass = 0;
};

struct EvolutionTrace {
    std::vector<TraceRow> rows;
    double prune = 0;
};

TraceRow trace_row(std::int64_t step, const QuantumState &state);

/// Applies `steps` unmeasured steps to the input superposition.
std::pair<QuantumState, EvolutionTrace> evolve(const MachineSpec &spec, const InputSpec &input, std::int64_t steps,
                                               const StepOptions &options = {});

/// Same as evolve but starting from an arbitrary state.
std::pair<QuantumState, EvolutionTrace> evolve_state(const MachineSpec &spec, QuantumState state, std::int64_t steps,
                                                     const StepOptions &options = {});

inline double halted_mass(const QuantumState &state) {
    return state.halted_mass();
}

/// `step,support,norm2,halted_mass` with a header row.
std::string trace_csv(const EvolutionTrace &trace);

}  // namespace qtm

#endif
