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

#include "qtm/input.h"

#include <cmath>
#include <set>
#include <sstream>

namespace qtm {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

void validate_terms(const std::vector<InputTerm> &terms, const MachineSpec &spec, double tol) {
    if (terms.empty()) {
        throw ParseError("input has no terms", 0, 0);
    }
    std::set<std::string> seen;
    double norm2 = 0;
    for (const auto &term : terms) {
        for (Symbol symbol : term.content) {
            if (symbol == kBlank || !spec.has_symbol(symbol)) {
                throw ParseError(std::string("unknown input symbol '") + symbol + "'", 0, 0);
            }
        }
        if (!seen.insert(term.content).second) {
            throw ParseError("duplicate input string '" + term.content + "'", 0, 0);
        }
        norm2 += std::norm(term.amplitude);
    }
    if (std::abs(norm2 - 1.0) > tol) {
        std::ostringstream message;
        message.precision(17);
        message << "input amplitudes have squared norm " << norm2 << ", expected 1";
        throw ParseError(message.str(), 0, 0);
    }
}

}  // namespace

InputSpec parse_input(std::string_view text, const MachineSpec &spec, double tol) {
    std::vector<InputTerm> terms;
    bool omitted_amplitude = false;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && is_space(text[pos])) {
            ++pos;
        }
    };
    while (true) {
        skip_space();
        std::size_t term_start = pos;
        InputTerm term{Amplitude(1.0), {}};
        bool explicit_amplitude = false;
        std::size_t probe = pos;
        std::optional<Amplitude> amplitude;
        try {
            amplitude = parse_amplitude_prefix(text, probe);
        } catch (const ParseError &e) {
            throw ParseError("bad amplitude: " + e.detail(), 0, e.column());
        }
        if (amplitude && probe < text.size() && text[probe] == ':') {
            term.amplitude = *amplitude;
            explicit_amplitude = true;
            pos = probe + 1;
            skip_space();
        } else {
            pos = term_start;
        }
        std::size_t content_start = pos;
        while (pos < text.size() && !is_space(text[pos]) && text[pos] != '+') {
            Symbol symbol = text[pos];
            if (symbol == kBlank || !spec.has_symbol(symbol)) {
                throw ParseError(std::string("unknown input symbol '") + symbol + "'", 0, pos);
            }
            ++pos;
        }
        term.content = std::string(text.substr(content_start, pos - content_start));
        if (!explicit_amplitude) {
            if (term.content.empty()) {
                throw ParseError("expected an input string", 0, pos);
            }
            omitted_amplitude = true;
        }
        terms.push_back(std::move(term));
        skip_space();
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != '+') {
            throw ParseError("expected '+' between input terms", 0, pos);
        }
        ++pos;
    }
    if (omitted_amplitude && terms.size() > 1) {
        throw ParseError("amplitudes may only be omitted for a single-term input", 0, 0);
    }
    validate_terms(terms, spec, tol);
    return InputSpec{std::move(terms)};
}

InputSpec make_input(std::vector<InputTerm> terms, const MachineSpec &spec, double tol) {
    validate_terms(terms, spec, tol);
    return InputSpec{std::move(terms)};
}

std::string render_input(const InputSpec &input) {
    std::string out;
    for (const auto &term : input.terms) {
        if (!out.empty()) {
            out += " + ";
        }
        out += render_amplitude(term.amplitude) + ":" + term.content;
    }
    return out;
}

QuantumState initial_state(const MachineSpec &spec, const InputSpec &input) {
    QuantumState state;
    for (const auto &term : input.terms) {
        state.add(Configuration::make(spec, spec.initial, Tape::from_string(term.content), 0), term.amplitude);
    }
    return state;
}

}  // namespace qtm
