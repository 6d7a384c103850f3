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


// Independent reference implementations used as test oracles.
//
// Nothing here calls the library's step, image, tape or enumeration code; the
// oracles work on plain maps and dense Eigen matrices and read only the parsed
// rule tables.

#ifndef QTM_TESTS_ORACLE_H
#define QTM_TESTS_ORACLE_H

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtm/classical.h"
#include "qtm/machine.h"
#include "qtm/state.h"

namespace qtm::oracle {

/// A basis configuration with the tape stored as position -> non-blank symbol.
struct Config {
    bool halted = false;
    std::uint32_t state = 0;
    std::int64_t head = 0;
    std::map<std::int64_t, char> cells;

    auto operator<=>(const Config &) const = default;
    bool operator==(const Config &) const = default;
};

using Vector = std::map<Config, std::complex<double>>;

Config from_library(const Configuration &config);
Configuration to_library(const MachineSpec &spec, const Config &config);

/// U|config> computed directly from the rule table. Empty when no rule applies.
Vector image(const MachineSpec &spec, const Config &config);
Vector step(const MachineSpec &spec, const Vector &state);
std::complex<double> inner(const Vector &a, const Vector &b);
double norm2(const Vector &v);
double halted_mass(const Vector &v);

/// Superposition of classical inputs laid out from cell 0, head 0, initial state.
Vector initial(const MachineSpec &spec, const std::vector<std::pair<std::complex<double>, std::string>> &terms);

/// Gram matrix of U over every configuration whose head lies in
/// [-head_radius, head_radius] and whose tape is arbitrary on
/// [-tape_radius, tape_radius] and blank elsewhere.
struct GramSummary {
    std::size_t columns = 0;
    /// Configurations whose image norm differs from 1.
    std::size_t norm_failures = 0;
    /// Off-diagonal entries above tol between two unhalted or two halted sources.
    std::size_t local_pairs = 0;
    /// Off-diagonal entries above tol between a halted and an unhalted source.
    std::size_t drift_pairs = 0;
    double max_local_modulus = 0;

    bool identity() const {
        return norm_failures == 0 && local_pairs == 0 && drift_pairs == 0;
    }
    bool identity_up_to_drift() const {
        return norm_failures == 0 && local_pairs == 0;
    }
};

GramSummary windowed_gram(const MachineSpec &spec, int tape_radius = 2, int head_radius = 1, double tol = 1e-9);

/// Dense least-squares version of the halted-subspace analysis.
struct ProjectionSummary {
    std::size_t halted_basis = 0;
    std::size_t newly_halting = 0;
    double gram_deviation = 0;
    double max_residual = 0;
    bool gap = false;
};

ProjectionSummary halting_projection(const MachineSpec &spec, const Vector &start, int steps, double tol = 1e-9);

/// Counts pairs of distinct window configurations whose classical successors
/// (including the post-halt drift) coincide, split by whether the two sources
/// share the halt bit.
struct CollisionSummary {
    std::size_t local = 0;
    std::size_t drift = 0;
};

CollisionSummary classical_collisions(const ClassicalTM &tm, int tape_radius = 2, int head_radius = 1);

}  // namespace qtm::oracle

#endif
