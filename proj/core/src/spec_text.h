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

// Shared reader for the line-based `qtm-spec` and `tm-spec` formats.

#ifndef QTM_SRC_SPEC_TEXT_H
#define QTM_SRC_SPEC_TEXT_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qtm/machine.h"

namespace qtm::detail {

struct SourceLine {
    std::size_t number;  // 1-based
    std::string_view text;  // comment stripped, whitespace trimmed
    std::size_t indent;  // column where `text` starts
};

/// A `rule:` line split at its arrow.
struct RuleLine {
    SourceLine line;
    std::string source_state;
    std::string source_symbol;  // may be "*"
    std::string_view body;  // text after "->"
    std::size_t body_column;
};

/// Header section common to both formats.
struct SpecHeader {
    std::vector<std::string> states;
    StateId initial;
    StateId halt;
    std::string alphabet;
    std::vector<RuleLine> rules;
};

/// Reads the magic line, the header fields and collects rule lines (without
/// interpreting their bodies). Validates state names and alphabet tokens.
SpecHeader read_spec_header(std::string_view text, std::string_view magic);

std::vector<std::string_view> split_whitespace(std::string_view text);
std::string_view trim(std::string_view text);

/// Resolves a symbol token against the alphabet; "*" is returned as '\0'.
Symbol resolve_symbol(const SpecHeader &header, std::string_view token, std::size_t line, std::size_t column,
                      bool allow_wildcard);
StateId resolve_state(const SpecHeader &header, std::string_view token, std::size_t line, std::size_t column);

/// Expands a rule table keyed on (state, symbol-or-'\0' wildcard): explicit
/// keys win, a wildcard fills every alphabet symbol without an explicit rule.
template <typename Rule, typename Expand>
void expand_wildcards(const std::vector<std::pair<RuleKey, Rule>> &explicit_rules,
                      const std::vector<std::pair<RuleKey, Rule>> &wildcard_rules, const std::string &alphabet,
                      Expand &&emit) {
    std::vector<RuleKey> present;
    for (const auto &[key, rule] : explicit_rules) {
        emit(key, rule);
        present.push_back(key);
    }
    for (const auto &[key, rule] : wildcard_rules) {
        for (Symbol symbol : alphabet) {
            RuleKey concrete{key.state, symbol};
            bool taken = false;
            for (const auto &p : present) {
                taken |= p == concrete;
            }
            if (!taken) {
                emit(concrete, rule);
            }
        }
    }
}

}  // namespace qtm::detail

#endif
