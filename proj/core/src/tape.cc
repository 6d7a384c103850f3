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

#include "qtm/tape.h"

#include <algorithm>

namespace qtm {

Tape Tape::from_string(std::string_view cells, std::int64_t offset) {
    Tape tape;
    tape.offset_ = offset;
    tape.cells_ = std::string(cells);
    tape.trim();
    return tape;
}

void Tape::write(std::int64_t index, Symbol symbol) {
    if (cells_.empty()) {
        if (symbol == kBlank) {
            return;
        }
        offset_ = index;
        cells_.assign(1, symbol);
        return;
    }
    auto end = offset_ + static_cast<std::int64_t>(cells_.size());
    if (index < offset_) {
        if (symbol == kBlank) {
            return;
        }
        cells_.insert(0, static_cast<std::size_t>(offset_ - index), kBlank);
        offset_ = index;
    } else if (index >= end) {
        if (symbol == kBlank) {
            return;
        }
        cells_.append(static_cast<std::size_t>(index - end + 1), kBlank);
    }
    cells_[static_cast<std::size_t>(index - offset_)] = symbol;
    if (symbol == kBlank) {
        trim();
    }
}

Tape Tape::shifted(std::int64_t delta) const {
    Tape copy = *this;
    if (!copy.cells_.empty()) {
        copy.offset_ += delta;
    }
    return copy;
}

std::size_t Tape::non_blank_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](char c) { return c != kBlank; }));
}

std::string Tape::to_string() const {
    return cells_ + "@" + std::to_string(offset_);
}

void Tape::trim() {
    auto first = cells_.find_first_not_of(kBlank);
    if (first == std::string::npos) {
        cells_.clear();
        offset_ = 0;
        return;
    }
    auto last = cells_.find_last_not_of(kBlank);
    cells_ = cells_.substr(first, last - first + 1);
    offset_ += static_cast<std::int64_t>(first);
}

}  // namespace qtm
