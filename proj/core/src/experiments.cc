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

#include "qtm/experiments.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "qtm/evolution.h"

namespace qtm {

namespace {

double norm(const QuantumState &state) {
    return std::sqrt(state.norm2());
}

/// a - c * b, keeping zero entries out.
QuantumState axpy(const QuantumState &a, Amplitude c, const QuantumState &b) {
    QuantumState out = a;
    for (const auto &[config, amplitude] : b) {
        out.add(config, -c * amplitude);
    }
    return out;
}

}  // namespace

MyersReport myers_demo(const MachineSpec &spec, const std::string &input_a, const std::string &input_b,
                       std::int64_t budget, double tol) {
    std::vector<InputTerm> terms;
    if (input_a == input_b) {
        terms.push_back({Amplitude(1.0), input_a});
    } else {
        Amplitude half(1.0 / std::sqrt(2.0));
        terms.push_back({half, input_a});
        terms.push_back({half, input_b});
    }
    InputSpec input = make_input(std::move(terms), spec, tol);
    auto [state, trace] = evolve(spec, input, budget);

    MyersReport report;
    for (const auto &row : trace.rows) {
        report.per_step.emplace_back(row.step, row.halted_mass);
        if (row.halted_mass > tol && row.halted_mass < 1.0 - tol) {
            if (!report.window) {
                report.window = std::make_pair(row.step, row.step);
            } else {
                report.window->second = row.step;
            }
        }
    }
    return report;
}

SubspaceReport analyze_halting_subspace(const MachineSpec &spec, const InputSpec &input, std::int64_t n,
                                        double tol) {
    if (n < 0) {
        throw std::invalid_argument("step count must be non-negative");
    }
    SubspaceReport report;
    report.window_steps = n;
    report.tol = tol;

    std::vector<QuantumState> states{initial_state(spec, input)};
    for (std::int64_t k = 1; k <= n; ++k) {
        states.push_back(step(spec, states.back()));
    }

    std::set<Configuration> halted;
    std::set<Configuration> unhalted;
    for (std::size_t k = 0; k < states.size(); ++k) {
        for (const auto &[config, amplitude] : states[k]) {
            if (config.halted) {
                halted.insert(config);
            } else if (static_cast<std::int64_t>(k) < n) {
                unhalted.insert(config);
            }
        }
    }
    report.halted_basis_count = halted.size();
    report.unhalted_source_count = unhalted.size();

    std::vector<QuantumState> halted_images;
    halted_images.reserve(halted.size());
    for (const auto &v : halted) {
        halted_images.push_back(image(spec, v));
    }
    for (std::size_t i = 0; i < halted_images.size(); ++i) {
        for (std::size_t j = i; j < halted_images.size(); ++j) {
            Amplitude g = inner_product(halted_images[i], halted_images[j]);
            double deviation = std::abs(g - (i == j ? Amplitude(1.0) : Amplitude()));
            report.gram_deviation = std::max(report.gram_deviation, deviation);
        }
    }

    // Orthonormal basis of span{U v} by modified Gram-Schmidt.
    std::vector<QuantumState> basis;
    for (const auto &u : halted_images) {
        QuantumState r = u;
        for (const auto &e : basis) {
            r = axpy(r, inner_product(e, r), e);
        }
        double length = norm(r);
        if (length > tol) {
            basis.push_back(r.scaled(Amplitude(1.0 / length)));
        }
    }

    for (const auto &w : unhalted) {
        QuantumState eta = image(spec, w).projected(true);
        double length = norm(eta);
        if (length <= tol) {
            continue;
        }
        ++report.newly_halting_vectors;
        QuantumState unit = eta.scaled(Amplitude(1.0 / length));
        for (const auto &u : halted_images) {
            report.max_overlap_with_uv = std::max(report.max_overlap_with_uv, std::abs(inner_product(u, unit)));
        }
        QuantumState residual = unit;
        for (const auto &e : basis) {
            residual = axpy(residual, inner_product(e, residual), e);
        }
        double leftover = norm(residual);
        report.max_residual = std::max(report.max_residual, leftover);
        if (leftover > tol) {
            report.gap_sources.push_back(w);
        }
    }

    for (std::size_t k = 0; k + 1 < states.size(); ++k) {
        std::vector<QuantumState> drifted;
        std::vector<QuantumState> fresh;
        for (const auto &[config, amplitude] : states[k]) {
            if (config.halted) {
                drifted.push_back(image(spec, config));
            } else {
                fresh.push_back(image(spec, config).projected(true));
            }
        }
        for (const auto &u : drifted) {
            for (const auto &eta : fresh) {
                report.same_step_overlap = std::max(report.same_step_overlap, std::abs(inner_product(u, eta)));
            }
        }
    }

    if (report.newly_halting_vectors == 0) {
        report.verdict = SubspaceReport::Verdict::kNoHaltingObserved;
    } else if (!report.gap_sources.empty()) {
        report.verdict = SubspaceReport::Verdict::kGapFound;
    } else {
        report.verdict = SubspaceReport::Verdict::kNoGapFound;
    }
    return report;
}

const char *to_string(SubspaceReport::Verdict verdict) {
    switch (verdict) {
        case SubspaceReport::Verdict::kNoHaltingObserved:
            return "no_halting_observed";
        case SubspaceReport::Verdict::kGapFound:
            return "gap_found";
        case SubspaceReport::Verdict::kNoGapFound:
            return "no_gap_found";
    }
    return "?";
}

}  // namespace qtm
