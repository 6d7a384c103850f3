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

#ifndef QTM_MACHINE_H
#define QTM_MACHINE_H

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtm/amplitude.h"
#include "qtm/tape.h"

namespace qtm {

/// Index of an internal state within its machine's state list.
struct StateId {
    std::uint32_t value = 0;

    auto operator<=>(const StateId &) const = default;
};

enum class Move : std::int8_t {
    kLeft = -1,
    kNone = 0,
    kRight = 1,
};

inline std::int64_t delta(Move move) {
    return static_cast<std::int64_t>(move);
}

char move_char(Move move);
std::optional<Move> parse_move(std::string_view token);

struct RuleKey {
    StateId state;
    Symbol symbol = kBlank;

    auto operator<=>(const RuleKey &) const = default;
};

/// One term of a transition subrule: with `amplitude`, enter `next`, write
/// `write` under the head and move the head by `move`.
struct RuleTarget {
    Amplitude amplitude;
    StateId next;
    Symbol write = kBlank;
    Move move = Move::kNone;

    bool operator==(const RuleTarget &) const = default;
};

/// A parsed quantum Turing machine.
///
/// Rules are fully expanded: wildcard sources and copy-writes from the text
/// format never survive parsing. The halt bit is not stored anywhere; it is
/// derived from the target state.
struct MachineSpec {
    std::vector<std::string> states;
    StateId initial;
    StateId halt;
    /// Declared alphabet, in declaration order. Always contains '0', '1' and '_'.
    std::string alphabet;
    std::map<RuleKey, std::vector<RuleTarget>> rules;

    const std::string &state_name(StateId id) const {
        return states.at(id.value);
    }
    std::optional<StateId> find_state(std::string_view name) const;
    bool has_symbol(Symbol symbol) const {
        return alphabet.find(symbol) != std::string::npos;
    }
    bool is_halt(StateId id) const {
        return id == halt;
    }
    /// Returns nullptr when no rule exists for the key.
    const std::vector<RuleTarget> *rule(StateId state, Symbol symbol) const;

    /// Throws std::invalid_argument when a type invariant is broken (unknown
    /// state or symbol references, initial == halt, missing mandatory symbols,
    /// empty target lists).
    void check_invariants() const;

    bool operator==(const MachineSpec &) const = default;
};

/// Parses the `qtm-spec v1` text format. Throws ParseError with a 1-based line
/// number for every malformed construct.
MachineSpec parse_machine(std::string_view text);

/// Inverse of parse_machine: one `rule:` line per expanded rule key.
std::string render_machine(const MachineSpec &spec);

struct Violation {
    enum class Kind {
        /// A rule on the halt state that is not a single amplitude-1 move which
        /// keeps the state and the symbol under the head.
        kHaltedRule,
        /// Squared moduli of a rule's amplitudes do not sum to 1.
        kRowNorm,
    };

    Kind kind;
    RuleKey key;
    double norm2 = 0;
    std::string message;
};

/// Properties guaranteed by the rule format itself, reported alongside
/// validate_structure results.
inline constexpr std::array<std::string_view, 4> kGuaranteedByConstruction = {
    "rule depends only on the state and the symbol under the head",
    "only the cell under the head is written",
    "head moves at most one cell",
    "halt bit is derived from the target state",
};

/// Returns every structural violation; an empty result means the machine is
/// structurally valid.
std::vector<Violation> validate_structure(const MachineSpec &spec, double tol = kDefaultTolerance);

}  // namespace qtm

#endif
