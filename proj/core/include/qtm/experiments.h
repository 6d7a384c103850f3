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

#ifndef QTM_EXPERIMENTS_H
#define QTM_EXPERIMENTS_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtm/input.h"
#include "qtm/machine.h"
#include "qtm/state.h"

namespace qtm {

struct MyersReport {
    /// (step, halted mass) for steps 0..budget of the unmeasured run.
    std::vector<std::pair<std::int64_t, double>> per_step;
    /// First and last step whose halted mass lies strictly inside (tol, 1 - tol).
    std::optional<std::pair<std::int64_t, std::int64_t>> window;
};

/// Runs the equal-weight superposition of two classical inputs without
/// measuring and reports the steps at which the machine is partly halted.
/// Identical inputs run as a single amplitude-1 term.
MyersReport myers_demo(const MachineSpec &spec, const std::string &input_a, const std::string &input_b,
                       std::int64_t budget, double tol = kDefaultTolerance);

/// Windowed comparison of the halted subspace with its image under U.
///
/// H collects every halted basis configuration appearing in the unmeasured
/// run at steps 0..n and W every unhalted one at steps 0..n-1. For each w in
/// W whose image has a halted component, that component is projected onto
/// span{U v : v in H}; a residual above tol is a halted vector the span does
/// not reach.
struct SubspaceReport {
    enum class Verdict { kNoHaltingObserved, kGapFound, kNoGapFound };

    std::int64_t window_steps = 0;
    std::size_t halted_basis_count = 0;
    std::size_t unhalted_source_count = 0;
    /// max |G - I| over the Gram matrix of {U v : v in H}.
    double gram_deviation = 0;
    std::size_t newly_halting_vectors = 0;
    /// Largest |<U v, eta / |eta|>| over newly halting components eta.
    double max_overlap_with_uv = 0;
    /// Largest residual norm of eta / |eta| after projection onto span{U v}.
    double max_residual = 0;
    /// Unhalted sources whose normalized halted component leaves the span.
    std::vector<Configuration> gap_sources;
    /// Largest |<U v, eta>| with v halted at step k-1 and eta produced at step
    /// k, i.e. overlap between already-halted and newly-halting mass within a
    /// single step.
    double same_step_overlap = 0;
    Verdict verdict = Verdict::kNoHaltingObserved;
    double tol = kDefaultTolerance;
};

SubspaceReport analyze_halting_subspace(const MachineSpec &spec, const InputSpec &input, std::int64_t n,
                                        double tol = kDefaultTolerance);

const char *to_string(SubspaceReport::Verdict verdict);

}  // namespace qtm

#endif
