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

#ifndef QTM_CLASSICAL_H
#define QTM_CLASSICAL_H

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtm/machine.h"
#include "qtm/state.h"
#include "qtm/wellformedness.h"

namespace qtm {

struct ClassicalRule {
    StateId next;
    Symbol write = kBlank;
    Move move = Move::kNone;

    bool operator==(const ClassicalRule &) const = default;
};

/// Deterministic Turing machine. There is no rule on the halt state; a
/// missing rule elsewhere means "halt now".
struct ClassicalTM {
    std::vector<std::string> states;
    StateId initial;
    StateId halt;
    std::string alphabet;
    std::map<RuleKey, ClassicalRule> rules;

    const std::string &state_name(StateId id) const {
        return states.at(id.value);
    }
    bool has_symbol(Symbol symbol) const {
        return alphabet.find(symbol) != std::string::npos;
    }
    const ClassicalRule *rule(StateId state, Symbol symbol) const {
        auto it = rules.find(RuleKey{state, symbol});
        return it == rules.end() ? nullptr : &it->second;
    }
    void check_invariants() const;

    bool operator==(const ClassicalTM &) const = default;
};

/// Parses the `tm-spec v1` format (`rule: q0 0 -> q1 1 R`; `*` works as in
/// the quantum format).
ClassicalTM parse_classical(std::string_view text);
std::string render_classical(const ClassicalTM &tm);

struct ClassicalConfig {
    StateId state;
    Tape tape;
    std::int64_t head = 0;

    bool operator==(const ClassicalConfig &) const = default;
};

ClassicalConfig classical_start(const ClassicalTM &tm, std::string_view input);

/// One deterministic step. A missing rule enters the halt state, leaves the
/// symbol in place and moves right, exactly like the lifted machine.
ClassicalConfig classical_step(const ClassicalTM &tm, const ClassicalConfig &config);

struct ClassicalRunResult {
    bool halted = false;
    std::int64_t steps = 0;
    Tape final_tape;
    std::int64_t final_head = 0;
};

ClassicalRunResult run_classical(const ClassicalTM &tm, std::string_view input, std::int64_t budget);

/// Configurations at steps 0..k where k = min(budget, halting step).
std::vector<ClassicalConfig> classical_trajectory(const ClassicalTM &tm, std::string_view input, std::int64_t budget);

/// Two distinct configurations whose lifted successors coincide.
struct InjectivityWitness {
    Configuration first;
    Configuration second;
    Configuration image;
    /// kHaltDrift when one source had already halted: its drift lands on a
    /// configuration that the other source has just halted into.
    WitnessKind kind = WitnessKind::kLocal;
};

/// Checks injectivity of the lifted global step (including the post-halt
/// drift) over the collision-candidate window. Witnesses are ordered local
/// first, then by number of non-blank cells, then canonically.
std::vector<InjectivityWitness> check_reversible(const ClassicalTM &tm);

/// Witnesses between two unhalted sources, i.e. the machine itself merges
/// computation paths.
std::vector<InjectivityWitness> blocking_witnesses(const std::vector<InjectivityWitness> &witnesses);

class NotReversibleError : public std::invalid_argument {
   public:
    explicit NotReversibleError(std::vector<InjectivityWitness> witnesses);

    const std::vector<InjectivityWitness> &witnesses() const noexcept {
        return witnesses_;
    }

   private:
    std::vector<InjectivityWitness> witnesses_;
};

/// Permutation QTM for a reversible classical machine: one amplitude-1 target
/// per rule, missing keys materialized as "halt, keep symbol, move right", and
/// the post-halt rule `halt * -> 1 : halt * R`.
///
/// Throws NotReversibleError when check_reversible finds blocking witnesses.
MachineSpec lift_to_qtm(const ClassicalTM &tm);

/// The lift without the reversibility precondition.
MachineSpec lift_unchecked(const ClassicalTM &tm);

Configuration lifted_configuration(const MachineSpec &lifted, const ClassicalConfig &config);

}  // namespace qtm

#endif
