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

#include "spec_text.h"

#include <algorithm>
#include <optional>
#include <set>

namespace qtm::detail {

namespace {

constexpr std::string_view kReservedSymbolChars = "*:|#+";
constexpr std::string_view kReservedNameChars = "*:|#";

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

std::vector<SourceLine> split_lines(std::string_view text) {
    std::vector<SourceLine> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        std::size_t indent = 0;
        while (indent < raw.size() && is_space(raw[indent])) {
            ++indent;
        }
        std::string_view trimmed = trim(raw);
        if (!trimmed.empty()) {
            lines.push_back({number, trimmed, indent});
        }
        start = end + 1;
    }
    return lines;
}

std::string normalize_spaces(std::string_view text) {
    std::string out;
    for (auto token : split_whitespace(text)) {
        if (!out.empty()) {
            out += ' ';
        }
        out += token;
    }
    return out;
}

}  // namespace

std::string_view trim(std::string_view text) {
    std::size_t begin = 0;
    while (begin < text.size() && is_space(text[begin])) {
        ++begin;
    }
    std::size_t end = text.size();
    while (end > begin && is_space(text[end - 1])) {
        --end;
    }
    return text.substr(begin, end - begin);
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) {
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) {
            ++i;
        }
        if (i > start) {
            tokens.push_back(text.substr(start, i - start));
        }
    }
    return tokens;
}

SpecHeader read_spec_header(std::string_view text, std::string_view magic) {
    auto lines = split_lines(text);
    if (lines.empty() || normalize_spaces(lines.front().text) != magic) {
        std::size_t number = lines.empty() ? 1 : lines.front().number;
        throw ParseError("expected '" + std::string(magic) + "' on the first line", number, 0);
    }

    std::optional<SourceLine> states_line, initial_line, halt_line, alphabet_line;
    std::vector<SourceLine> rule_lines;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto &line = lines[i];
        auto colon = line.text.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("expected 'field: value'", line.number, line.indent);
        }
        std::string_view key = trim(line.text.substr(0, colon));
        std::string_view value_text = trim(line.text.substr(colon + 1));
        SourceLine value{line.number, value_text,
                         line.indent + static_cast<std::size_t>(value_text.data() - line.text.data())};
        std::optional<SourceLine> *slot = nullptr;
        if (key == "states") {
            slot = &states_line;
        } else if (key == "initial") {
            slot = &initial_line;
        } else if (key == "halt") {
            slot = &halt_line;
        } else if (key == "alphabet") {
            slot = &alphabet_line;
        } else if (key == "rule") {
            rule_lines.push_back(value);
            continue;
        } else {
            throw ParseError("unknown field '" + std::string(key) + "'", line.number, line.indent);
        }
        if (slot->has_value()) {
            throw ParseError("duplicate header field '" + std::string(key) + "'", line.number, line.indent);
        }
        *slot = value;
    }

    std::size_t end_line = lines.back().number;
    auto require = [&](const std::optional<SourceLine> &field, const char *name) -> const SourceLine & {
        if (!field) {
            throw ParseError(std::string("missing header field '") + name + "'", end_line, 0);
        }
        return *field;
    };
    const auto &states = require(states_line, "states");
    const auto &initial = require(initial_line, "initial");
    const auto &halt = require(halt_line, "halt");
    const auto &alphabet = require(alphabet_line, "alphabet");

    SpecHeader header;
    std::set<std::string_view> seen_states;
    for (auto token : split_whitespace(states.text)) {
        std::size_t column = states.indent + static_cast<std::size_t>(token.data() - states.text.data());
        if (token.find_first_of(kReservedNameChars) != std::string_view::npos || token == "->") {
            throw ParseError("invalid state name '" + std::string(token) + "'", states.number, column);
        }
        if (!seen_states.insert(token).second) {
            throw ParseError("duplicate state '" + std::string(token) + "'", states.number, column);
        }
        header.states.emplace_back(token);
    }
    if (header.states.empty()) {
        throw ParseError("no states declared", states.number, states.indent);
    }

    for (auto token : split_whitespace(alphabet.text)) {
        std::size_t column = alphabet.indent + static_cast<std::size_t>(token.data() - alphabet.text.data());
        if (token.size() != 1 || kReservedSymbolChars.find(token[0]) != std::string_view::npos) {
            throw ParseError("alphabet symbols must be single non-reserved characters, got '" + std::string(token) + "'",
                             alphabet.number, column);
        }
        if (header.alphabet.find(token[0]) != std::string::npos) {
            throw ParseError("duplicate symbol '" + std::string(token) + "'", alphabet.number, column);
        }
        header.alphabet += token[0];
    }
    for (char required : std::string_view("01_")) {
        if (header.alphabet.find(required) == std::string::npos) {
            throw ParseError(std::string("alphabet must contain '") + required + "'", alphabet.number, alphabet.indent);
        }
    }

    auto single_state = [&](const SourceLine &line, const char *field) {
        auto tokens = split_whitespace(line.text);
        if (tokens.size() != 1) {
            throw ParseError(std::string("field '") + field + "' takes exactly one state", line.number, line.indent);
        }
        return resolve_state(header, tokens[0], line.number, line.indent);
    };
    header.initial = single_state(initial, "initial");
    header.halt = single_state(halt, "halt");
    if (header.initial == header.halt) {
        throw ParseError("initial and halt states must differ", halt.number, halt.indent);
    }

    for (const auto &line : rule_lines) {
        auto arrow = line.text.find("->");
        if (arrow == std::string_view::npos) {
            throw ParseError("expected '->' in rule", line.number, line.indent);
        }
        auto lhs = split_whitespace(line.text.substr(0, arrow));
        if (lhs.size() != 2) {
            throw ParseError("rule source must be '<state> <symbol>'", line.number, line.indent);
        }
        RuleLine rule{line, std::string(lhs[0]), std::string(lhs[1]), line.text.substr(arrow + 2),
                      line.indent + arrow + 2};
        header.rules.push_back(std::move(rule));
    }
    return header;
}

Symbol resolve_symbol(const SpecHeader &header, std::string_view token, std::size_t line, std::size_t column,
                      bool allow_wildcard) {
    if (token == "*" && allow_wildcard) {
        return '\0';
    }
    if (token.size() != 1 || header.alphabet.find(token[0]) == std::string::npos) {
        throw ParseError("unknown symbol '" + std::string(token) + "'", line, column);
    }
    return token[0];
}

StateId resolve_state(const SpecHeader &header, std::string_view token, std::size_t line, std::size_t column) {
    auto it = std::find(header.states.begin(), header.states.end(), token);
    if (it == header.states.end()) {
        throw ParseError("unknown state '" + std::string(token) + "'", line, column);
    }
    return StateId{static_cast<std::uint32_t>(it - header.states.begin())};
}

}  // namespace qtm::detail
