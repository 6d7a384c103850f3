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

#ifndef QTM_WELLFORMEDNESS_H
#define QTM_WELLFORMEDNESS_H

#include <cstddef>
#include <functional>
#include <vector>

#include "qtm/amplitude.h"
#include "qtm/machine.h"
#include "qtm/state.h"

namespace qtm {

/// Cells -kWindowRadius..kWindowRadius around the lower head are enumerated.
inline constexpr int kWindowRadius = 3;
/// One step moves a head by at most one cell, so two images can only meet
/// when their sources' heads are at most two cells apart.
inline constexpr int kMaxHeadDistance = 2;

struct CollisionCandidatePair {
    Configuration first;
    Configuration second;
};

/// Visits every unordered pair of distinct configurations that could have
/// overlapping one-step images.
///
/// Pairs are normalized under translation by putting the lower head on cell 0;
/// the other head sits on cell 0, 1 or 2. Both tapes range over every
/// assignment of the alphabet to cells -3..3 (blank elsewhere) and agree
/// outside the two head cells. Every local collision pattern of the step
/// operator occurs among these pairs, so checking them decides whether the
/// images of all basis configurations are pairwise orthogonal.
///
/// Within each pair `first < second` in canonical configuration order.
void for_each_collision_candidate(
    const MachineSpec &spec, const std::function<void(const Configuration &, const Configuration &)> &visit);

std::vector<CollisionCandidatePair> collision_candidates(const MachineSpec &spec);

/// Closed-form size of the candidate set for `states` internal states and
/// `symbols` alphabet symbols.
std::size_t collision_candidate_count(std::size_t states, std::size_t symbols);

enum class WitnessKind {
    /// Both sources unhalted or both halted.
    kLocal,
    /// One source is halted: a newly halting image meets the image of a
    /// configuration that had already halted.
    kHaltDrift,
};

struct OrthogonalityWitness {
    Configuration first;
    Configuration second;
    /// <U first | U second>.
    Amplitude inner_product;
    WitnessKind kind = WitnessKind::kLocal;
};

struct NormViolation {
    RuleKey key;
    double norm2 = 0;
};

struct WellformednessReport {
    enum class Verdict { kWellFormed, kViolation };

    Verdict verdict = Verdict::kWellFormed;
    double tol = kDefaultTolerance;
    std::vector<NormViolation> norm_violations;
    /// Ordered: local witnesses first, then by number of non-blank cells,
    /// then canonically.
    std::vector<OrthogonalityWitness> witnesses;
    std::size_t candidate_count = 0;
    /// Rule keys with no rule; configurations reading them are outside the
    /// operator's domain and are skipped.
    std::vector<RuleKey> undefined_keys;

    bool well_formed() const {
        return verdict == Verdict::kWellFormed;
    }
    /// True when every failure is a halt-drift collision: the step operator is
    /// isometric on unhalted configurations and on halted configurations
    /// separately.
    bool isometric_up_to_halt_drift() const;
};

/// Decides whether the step operator maps basis configurations to unit-norm,
/// pairwise orthogonal images. Requires validate_structure(spec) to be empty.
WellformednessReport check_wellformed(const MachineSpec &spec, double tol = kDefaultTolerance);

/// Inner product of the images of two basis configurations.
Amplitude image_inner_product(const MachineSpec &spec, const Configuration &a, const Configuration &b);

}  // namespace qtm

#endif
