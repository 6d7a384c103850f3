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

#ifndef QTM_TAPE_H
#define QTM_TAPE_H

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace qtm {

/// A tape symbol. Alphabets are sets of single printable characters.
using Symbol = char;

inline constexpr Symbol kBlank = '_';

/// Two-way infinite tape with finitely many non-blank cells.
///
/// Stored canonically as the smallest window [offset, offset + cells.size())
/// holding every non-blank cell; the window never starts or ends with a blank,
/// and the empty tape has offset 0. Equality, ordering and hashing all work on
/// this canonical form, so a written blank is indistinguishable from a cell
/// that was never touched.
class Tape {
   public:
    Tape() = default;

    /// Lays `cells` out starting at `offset`. Blanks inside `cells` are allowed
    /// and leading/trailing blanks are trimmed.
    static Tape from_string(std::string_view cells, std::int64_t offset = 0);

    Symbol read(std::int64_t index) const noexcept {
        if (index < offset_ || index >= offset_ + static_cast<std::int64_t>(cells_.size())) {
            return kBlank;
        }
        return cells_[static_cast<std::size_t>(index - offset_)];
    }

    void write(std::int64_t index, Symbol symbol);

    /// Returns a copy with cell `index` overwritten.
    Tape with(std::int64_t index, Symbol symbol) const {
        Tape copy = *this;
        copy.write(index, symbol);
        return copy;
    }

    Tape shifted(std::int64_t delta) const;

    bool empty() const noexcept {
        return cells_.empty();
    }
    /// Index of the leftmost non-blank cell (0 for the empty tape).
    std::int64_t offset() const noexcept {
        return offset_;
    }
    /// Canonical window contents; may contain interior blanks.
    const std::string &cells() const noexcept {
        return cells_;
    }
    std::size_t non_blank_count() const noexcept;

    /// "cells@offset", or "@0" for the empty tape.
    std::string to_string() const;

    bool operator==(const Tape &) const = default;
    std::strong_ordering operator<=>(const Tape &other) const {
        if (auto c = offset_ <=> other.offset_; c != 0) {
            return c;
        }
        return cells_.compare(other.cells_) <=> 0;
    }

   private:
    void trim();

    std::int64_t offset_ = 0;
    std::string cells_;
};

}  // namespace qtm

template <>
struct std::hash<qtm::Tape> {
    std::size_t operator()(const qtm::Tape &tape) const noexcept {
        return std::hash<std::string>()(tape.cells()) ^ (std::hash<std::int64_t>()(tape.offset()) * 0x9E3779B97F4A7C15ULL);
    }
};

#endif
