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

#ifndef QTM_STATE_H
#define QTM_STATE_H

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "qtm/amplitude.h"
#include "qtm/machine.h"
#include "qtm/tape.h"

namespace qtm {

/// One basis vector |h>|q>|T>|x> of a machine's state space.
///
/// Ordered lexicographically on (halted, state, head, tape); this order fixes
/// the accumulation order of every sum in the library.
struct Configuration {
    bool halted = false;
    StateId state;
    std::int64_t head = 0;
    Tape tape;

    /// Builds a configuration whose halt bit agrees with `state`.
    static Configuration make(const MachineSpec &spec, StateId state, Tape tape, std::int64_t head) {
        return Configuration{spec.is_halt(state), state, head, std::move(tape)};
    }

    Symbol read() const noexcept {
        return tape.read(head);
    }

    bool operator==(const Configuration &) const = default;
    std::strong_ordering operator<=>(const Configuration &) const = default;
};

std::string to_string(const MachineSpec &spec, const Configuration &config);

/// Finitely supported superposition of configurations.
///
/// Entries are kept in canonical configuration order. Zero amplitudes are
/// never stored.
class QuantumState {
   public:
    using Map = std::map<Configuration, Amplitude>;

    QuantumState() = default;
    explicit QuantumState(Configuration basis) {
        add(std::move(basis), Amplitude(1.0));
    }

    void add(Configuration config, Amplitude amplitude);

    Amplitude amplitude(const Configuration &config) const {
        auto it = entries_.find(config);
        return it == entries_.end() ? Amplitude() : it->second;
    }

    const Map &entries() const noexcept {
        return entries_;
    }
    std::size_t size() const noexcept {
        return entries_.size();
    }
    bool empty() const noexcept {
        return entries_.empty();
    }
    auto begin() const {
        return entries_.begin();
    }
    auto end() const {
        return entries_.end();
    }

    double norm2() const;
    /// Sum of squared moduli over halted configurations.
    double halted_mass() const;

    /// Component with halt bit equal to `halted` (not renormalized).
    QuantumState projected(bool halted) const;
    QuantumState scaled(Amplitude factor) const;
    /// Drops entries with modulus below threshold.
    void prune(double threshold);

    bool operator==(const QuantumState &) const = default;

   private:
    Map entries_;
};

/// <a|b>, conjugate-linear in the first argument.
Amplitude inner_product(const QuantumState &a, const QuantumState &b);

}  // namespace qtm

#endif
