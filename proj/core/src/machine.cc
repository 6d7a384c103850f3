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

#include "qtm/machine.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spec_text.h"

namespace qtm {

namespace {

constexpr Symbol kCopyRead = '\0';

std::vector<RuleTarget> parse_targets(const detail::SpecHeader &header, const detail::RuleLine &rule) {
    std::vector<RuleTarget> targets;
    std::size_t line = rule.line.number;
    std::size_t start = 0;
    while (start <= rule.body.size()) {
        std::size_t bar = rule.body.find('|', start);
        if (bar == std::string_view::npos) {
            bar = rule.body.size();
        }
        std::string_view target = rule.body.substr(start, bar - start);
        std::size_t column = rule.body_column + start;
        auto colon = target.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("expected '<amplitude> : <state> <symbol> <move>'", line, column);
        }
        RuleTarget parsed;
        try {
            parsed.amplitude = parse_amplitude(target.substr(0, colon));
        } catch (const ParseError &e) {
            throw ParseError("bad amplitude: " + e.detail(), line, column + e.column());
        }
        std::string_view rest = target.substr(colon + 1);
        auto tokens = detail::split_whitespace(rest);
        std::size_t rest_column = column + colon + 1;
        if (tokens.size() != 3) {
            throw ParseError("expected '<state> <symbol> <move>' after ':'", line, rest_column);
        }
        auto token_column = [&](std::string_view token) {
            return rest_column + static_cast<std::size_t>(token.data() - rest.data());
        };
        parsed.next = detail::resolve_state(header, tokens[0], line, token_column(tokens[0]));
        parsed.write = detail::resolve_symbol(header, tokens[1], line, token_column(tokens[1]), true);
        auto move = parse_move(tokens[2]);
        if (!move) {
            throw ParseError("move must be L, N or R", line, token_column(tokens[2]));
        }
        parsed.move = *move;
        targets.push_back(parsed);
        start = bar + 1;
    }
    return targets;
}

}  // namespace

char move_char(Move move) {
    switch (move) {
        case Move::kLeft:
            return 'L';
        case Move::kNone:
            return 'N';
        case Move::kRight:
            return 'R';
    }
    return '?';
}

std::optional<Move> parse_move(std::string_view token) {
    if (token == "L") {
        return Move::kLeft;
    }
    if (token == "N") {
        return Move::kNone;
    }
    if (token == "R") {
        return Move::kRight;
    }
    return std::nullopt;
}

std::optional<StateId> MachineSpec::find_state(std::string_view name) const {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) {
        return std::nullopt;
    }
    return StateId{static_cast<std::uint32_t>(it - states.begin())};
}

const std::vector<RuleTarget> *MachineSpec::rule(StateId state, Symbol symbol) const {
    auto it = rules.find(RuleKey{state, symbol});
    return it == rules.end() ? nullptr : &it->second;
}

void MachineSpec::check_invariants() const {
    auto valid_state = [&](StateId id) { return id.value < states.size(); };
    if (!valid_state(initial) || !valid_state(halt)) {
        throw std::invalid_argument("initial and halt must be declared states");
    }
    if (initial == halt) {
        throw std::invalid_argument("initial and halt states must differ");
    }
    for (Symbol required : std::string_view("01_")) {
        if (!has_symbol(required)) {
            throw std::invalid_argument(std::string("alphabet must contain '") + required + "'");
        }
    }
    for (const auto &[key, targets] : rules) {
        if (!valid_state(key.state) || !has_symbol(key.symbol)) {
            throw std::invalid_argument("rule key references an unknown state or symbol");
        }
        if (targets.empty()) {
            throw std::invalid_argument("rule for (" + state_name(key.state) + ", " + key.symbol + ") has no targets");
        }
        for (const auto &target : targets) {
            if (!valid_state(target.next) || !has_symbol(target.write)) {
                throw std::invalid_argument("rule target references an unknown state or symbol");
            }
        }
    }
}

MachineSpec parse_machine(std::string_view text) {
    auto header = detail::read_spec_header(text, "qtm-spec v1");
    MachineSpec spec;
    spec.states = header.states;
    spec.initial = header.initial;
    spec.halt = header.halt;
    spec.alphabet = header.alphabet;

    std::vector<std::pair<RuleKey, std::vector<RuleTarget>>> explicit_rules;
    std::vector<std::pair<RuleKey, std::vector<RuleTarget>>> wildcard_rules;
    std::map<RuleKey, std::size_t> first_line;
    for (const auto &rule : header.rules) {
        std::size_t line = rule.line.number;
        StateId state = detail::resolve_state(header, rule.source_state, line, rule.line.indent);
        Symbol symbol = detail::resolve_symbol(header, rule.source_symbol, line, rule.line.indent, true);
        RuleKey key{state, symbol};
        if (auto [it, inserted] = first_line.emplace(key, line); !inserted) {
            throw ParseError("duplicate rule for (" + rule.source_state + ", " + rule.source_symbol +
                                 "), first defined on line " + std::to_string(it->second),
                             line, rule.line.indent);
        }
        auto targets = parse_targets(header, rule);
        (symbol == kCopyRead ? wildcard_rules : explicit_rules).emplace_back(key, std::move(targets));
    }

    detail::expand_wildcards(explicit_rules, wildcard_rules, spec.alphabet,
                             [&](RuleKey key, std::vector<RuleTarget> targets) {
                                 for (auto &target : targets) {
                                     if (target.write == kCopyRead) {
                                         target.write = key.symbol;
                                     }
                                 }
                                 for (std::size_t i = 0; i < targets.size(); ++i) {
                                     for (std::size_t j = 0; j < i; ++j) {
                                         if (targets[i].next == targets[j].next && targets[i].write == targets[j].write &&
                                             targets[i].move == targets[j].move) {
                                             throw ParseError("rule for (" + spec.state_name(key.state) + ", " +
                                                                  key.symbol + ") lists the same target twice",
                                                              first_line.count(key) ? first_line[key] : 0, 0);
                                         }
                                     }
                                 }
                                 spec.rules.emplace(key, std::move(targets));
                             });
    return spec;
}

std::string render_machine(const MachineSpec &spec) {
    std::ostringstream out;
    out << "qtm-spec v1\n";
    out << "states:";
    for (const auto &name : spec.states) {
        out << ' ' << name;
    }
    out << "\ninitial: " << spec.state_name(spec.initial) << "\n";
    out << "halt: " << spec.state_name(spec.halt) << "\n";
    out << "alphabet:";
    for (Symbol symbol : spec.alphabet) {
        out << ' ' << symbol;
    }
    out << "\n";
    for (const auto &[key, targets] : spec.rules) {
        out << "rule: " << spec.state_name(key.state) << ' ' << key.symbol << " ->";
        for (std::size_t i = 0; i < targets.size(); ++i) {
            const auto &target = targets[i];
            out << (i == 0 ? " " : " | ") << render_amplitude(target.amplitude) << " : "
                << spec.state_name(target.next) << ' ' << target.write << ' ' << move_char(target.move);
        }
        out << "\n";
    }
    return out.str();
}

std::vector<Violation> validate_structure(const MachineSpec &spec, double tol) {
    std::vector<Violation> violations;
    for (const auto &[key, targets] : spec.rules) {
        double norm2 = 0;
        for (const auto &target : targets) {
            norm2 += std::norm(target.amplitude);
        }
        std::string where = "(" + spec.state_name(key.state) + ", " + key.symbol + ")";
        if (key.state == spec.halt) {
            bool ok = targets.size() == 1 && std::abs(targets[0].amplitude - Amplitude(1.0)) <= tol &&
                      targets[0].next == spec.halt && targets[0].write == key.symbol;
            if (!ok) {
                violations.push_back({Violation::Kind::kHaltedRule, key, norm2,
                                      "rule " + where +
                                          " on the halt state must be a single amplitude-1 target that keeps the "
                                          "state and rewrites the symbol it read"});
            }
        }
        if (std::abs(norm2 - 1.0) > tol) {
            std::ostringstream message;
            message.precision(17);
            message << "rule " << where << " has squared amplitude sum " << norm2;
            violations.push_back({Violation::Kind::kRowNorm, key, norm2, message.str()});
        }
    }
    return violations;
}

}  // namespace qtm
