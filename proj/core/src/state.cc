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

#include "qtm/state.h"

#include <cmath>

namespace qtm {

std::string to_string(const MachineSpec &spec, const Configuration &config) {
    return "|" + std::to_string(config.halted ? 1 : 0) + "," + spec.state_name(config.state) + "," +
           config.tape.to_string() + "," + std::to_string(config.head) + ">";
}

void QuantumState::add(Configuration config, Amplitude amplitude) {
    auto [it, inserted] = entries_.try_emplace(std::move(config), amplitude);
    if (!inserted) {
        it->second += amplitude;
    }
    if (it->second == Amplitude()) {
        entries_.erase(it);
    }
}

double QuantumState::norm2() const {
    double total = 0;
    for (const auto &[config, amplitude] : entries_) {
        total += std::norm(amplitude);
    }
    return total;
}

double QuantumState::halted_mass() const {
    double total = 0;
    for (const auto &[config, amplitude] : entries_) {
        if (config.halted) {
            total += std::norm(amplitude);
        }
    }
    return total;
}

QuantumState QuantumState::projected(bool halted) const {
    QuantumState out;
    for (const auto &[config, amplitude] : entries_) {
        if (config.halted == halted) {
            out.entries_.emplace_hint(out.entries_.end(), config, amplitude);
        }
    }
    return out;
}

QuantumState QuantumState::scaled(Amplitude factor) const {
    QuantumState out;
    if (factor == Amplitude()) {
        return out;
    }
    for (const auto &[config, amplitude] : entries_) {
        Amplitude value = amplitude * factor;
        if (value != Amplitude()) {
            out.entries_.emplace_hint(out.entries_.end(), config, value);
        }
    }
    return out;
}

void QuantumState::prune(double threshold) {
    std::erase_if(entries_, [&](const auto &entry) { return std::abs(entry.second) < threshold; });
}

Amplitude inner_product(const QuantumState &a, const QuantumState &b) {
    Amplitude total;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        auto order = ia->first <=> ib->first;
        if (order < 0) {
            ++ia;
        } else if (order > 0) {
            ++ib;
        } else {
            total += std::conj(ia->second) * ib->second;
            ++ia;
            ++ib;
        }
    }
    return total;
}

}  // namespace qtm
