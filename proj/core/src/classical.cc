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

#include "qtm/classical.h"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "qtm/evolution.h"
#include "spec_text.h"

namespace qtm {

namespace {

constexpr Symbol kCopyRead = '\0';

}  // namespace

void ClassicalTM::check_invariants() const {
    auto valid_state = [&](StateId id) { return id.value < states.size(); };
    if (!valid_state(initial) || !valid_state(halt) || initial == halt) {
        throw std::invalid_argument("initial and halt must be distinct declared states");
    }
    for (const auto &[key, rule] : rules) {
        if (key.state == halt) {
            throw std::invalid_argument("classical machines have no rules on the halt state");
        }
        if (!valid_state(key.state) || !valid_state(rule.next) || !has_symbol(key.symbol) ||
            !has_symbol(rule.write)) {
            throw std::invalid_argument("rule references an unknown state or symbol");
        }
    }
}

ClassicalTM parse_classical(std::string_view text) {
    auto header = detail::read_spec_header(text, "tm-spec v1");
    ClassicalTM tm;
    tm.states = header.states;
    tm.initial = header.initial;
    tm.halt = header.halt;
    tm.alphabet = header.alphabet;

    std::vector<std::pair<RuleKey, ClassicalRule>> explicit_rules;
    std::vector<std::pair<RuleKey, ClassicalRule>> wildcard_rules;
    std::map<RuleKey, std::size_t> first_line;
    for (const auto &rule : header.rules) {
        std::size_t line = rule.line.number;
        StateId state = detail::resolve_state(header, rule.source_state, line, rule.line.indent);
        if (state == tm.halt) {
            throw ParseError("classical machines have no rules on the halt state", line, rule.line.indent);
        }
        Symbol symbol = detail::resolve_symbol(header, rule.source_symbol, line, rule.line.indent, true);
        RuleKey key{state, symbol};
        if (auto [it, inserted] = first_line.emplace(key, line); !inserted) {
            throw ParseError("duplicate rule for (" + rule.source_state + ", " + rule.source_symbol +
                                 "), first defined on line " + std::to_string(it->second),
                             line, rule.line.indent);
        }
        auto tokens = detail::split_whitespace(rule.body);
        if (tokens.size() != 3) {
            throw ParseError("expected '<state> <symbol> <move>' after '->'", line, rule.body_column);
        }
        auto column = [&](std::string_view token) {
            return rule.body_column + static_cast<std::size_t>(token.data() - rule.body.data());
        };
        ClassicalRule parsed;
        parsed.next = detail::resolve_state(header, tokens[0], line, column(tokens[0]));
        parsed.write = detail::resolve_symbol(header, tokens[1], line, column(tokens[1]), true);
        auto move = parse_move(tokens[2]);
        if (!move) {
            throw ParseError("move must be L, N or R", line, column(tokens[2]));
        }
        parsed.move = *move;
        (symbol == kCopyRead ? wildcard_rules : explicit_rules).emplace_back(key, parsed);
    }
    detail::expand_wildcards(explicit_rules, wildcard_rules, tm.alphabet, [&](RuleKey key, ClassicalRule rule) {
        if (rule.write == kCopyRead) {
            rule.write = key.symbol;
        }
        tm.rules.emplace(key, rule);
    });
    return tm;
}

std::string render_classical(const ClassicalTM &tm) {
    std::ostringstream out;
    out << "tm-spec v1\nstates:";
    for (const auto &name : tm.states) {
        out << ' ' << name;
    }
    out << "\ninitial: " << tm.state_name(tm.initial) << "\nhalt: " << tm.state_name(tm.halt) << "\nalphabet:";
    for (Symbol symbol : tm.alphabet) {
        out << ' ' << symbol;
    }
    out << '\n';
    for (const auto &[key, rule] : tm.rules) {
        out << "rule: " << tm.state_name(key.state) << ' ' << key.symbol << " -> " << tm.state_name(rule.next) << ' '
            << rule.write << ' ' << move_char(rule.move) << '\n';
    }
    return out.str();
}

ClassicalConfig classical_start(const ClassicalTM &tm, std::string_view input) {
    for (Symbol symbol : input) {
        if (symbol == kBlank || !tm.has_symbol(symbol)) {
            throw std::invalid_argument(std::string("unknown input symbol '") + symbol + "'");
        }
    }
    return ClassicalConfig{tm.initial, Tape::from_string(input), 0};
}

ClassicalConfig classical_step(const ClassicalTM &tm, const ClassicalConfig &config) {
    Symbol read = config.tape.read(config.head);
    const ClassicalRule *rule = tm.rule(config.state, read);
    if (rule == nullptr) {
        return ClassicalConfig{tm.halt, config.tape, config.head + 1};
    }
    return ClassicalConfig{rule->next, config.tape.with(config.head, rule->write), config.head + delta(rule->move)};
}

std::vector<ClassicalConfig> classical_trajectory(const ClassicalTM &tm, std::string_view input, std::int64_t budget) {
    std::vector<ClassicalConfig> trajectory{classical_start(tm, input)};
    for (std::int64_t n = 0; n < budget && trajectory.back().state != tm.halt; ++n) {
        trajectory.push_back(classical_step(tm, trajectory.back()));
    }
    return trajectory;
}

ClassicalRunResult run_classical(const ClassicalTM &tm, std::string_view input, std::int64_t budget) {
    if (budget < 0) {
        throw std::invalid_argument("budget must be non-negative");
    }
    ClassicalConfig config = classical_start(tm, input);
    std::int64_t steps = 0;
    while (steps < budget && config.state != tm.halt) {
        config = classical_step(tm, config);
        ++steps;
    }
    return ClassicalRunResult{config.state == tm.halt, steps, config.tape, config.head};
}

MachineSpec lift_unchecked(const ClassicalTM &tm) {
    tm.check_invariants();
    MachineSpec spec;
    spec.states = tm.states;
    spec.initial = tm.initial;
    spec.halt = tm.halt;
    spec.alphabet = tm.alphabet;
    for (std::uint32_t q = 0; q < tm.states.size(); ++q) {
        StateId state{q};
        for (Symbol symbol : tm.alphabet) {
            RuleTarget target;
            target.amplitude = Amplitude(1.0);
            if (state == tm.halt) {
                target.next = tm.halt;
                target.write = symbol;
                target.move = Move::kRight;
            } else if (const ClassicalRule *rule = tm.rule(state, symbol)) {
                target.next = rule->next;
                target.write = rule->write;
                target.move = rule->move;
            } else {
                target.next = tm.halt;
                target.write = symbol;
                target.move = Move::kRight;
            }
            spec.rules.emplace(RuleKey{state, symbol}, std::vector<RuleTarget>{target});
        }
    }
    spec.check_invariants();
    return spec;
}

std::vector<InjectivityWitness> check_reversible(const ClassicalTM &tm) {
    MachineSpec lifted = lift_unchecked(tm);
    std::vector<InjectivityWitness> witnesses;
    for_each_collision_candidate(lifted, [&](const Configuration &a, const Configuration &b) {
        QuantumState ia = image(lifted, a);
        QuantumState ib = image(lifted, b);
        const Configuration &image_a = ia.begin()->first;
        if (image_a == ib.begin()->first) {
            WitnessKind kind = a.halted == b.halted ? WitnessKind::kLocal : WitnessKind::kHaltDrift;
            witnesses.push_back({a, b, image_a, kind});
        }
    });
    auto rank = [](const InjectivityWitness &w) {
        return std::make_tuple(w.kind == WitnessKind::kHaltDrift,
                               w.first.tape.non_blank_count() + w.second.tape.non_blank_count());
    };
    std::sort(witnesses.begin(), witnesses.end(), [&](const auto &x, const auto &y) {
        auto rx = rank(x);
        auto ry = rank(y);
        if (rx != ry) {
            return rx < ry;
        }
        if (auto c = x.first <=> y.first; c != 0) {
            return c < 0;
        }
        return x.second < y.second;
    });
    return witnesses;
}

std::vector<InjectivityWitness> blocking_witnesses(const std::vector<InjectivityWitness> &witnesses) {
    std::vector<InjectivityWitness> out;
    std::copy_if(witnesses.begin(), witnesses.end(), std::back_inserter(out),
                 [](const auto &w) { return w.kind == WitnessKind::kLocal; });
    return out;
}

NotReversibleError::NotReversibleError(std::vector<InjectivityWitness> witnesses)
    : std::invalid_argument("machine is not reversible: " + std::to_string(witnesses.size()) +
                            " pairs of configurations share a successor"),
      witnesses_(std::move(witnesses)) {
}

MachineSpec lift_to_qtm(const ClassicalTM &tm) {
    auto blocking = blocking_witnesses(check_reversible(tm));
    if (!blocking.empty()) {
        throw NotReversibleError(std::move(blocking));
    }
    return lift_unchecked(tm);
}

Configuration lifted_configuration(const MachineSpec &lifted, const ClassicalConfig &config) {
    return Configuration::make(lifted, config.state, config.tape, config.head);
}

}  // namespace qtm
