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

#ifndef QTM_INPUT_H
#define QTM_INPUT_H

#include <string>
#include <string_view>
#include <vector>

#include "qtm/amplitude.h"
#include "qtm/machine.h"
#include "qtm/state.h"

namespace qtm {

struct InputTerm {
    Amplitude amplitude;
    std::string content;  // non-blank symbols, laid on cells 0..size-1

    bool operator==(const InputTerm &) const = default;
};

/// A finite superposition of classical inputs. Every term starts with the head
/// on cell 0 in the initial state.
struct InputSpec {
    std::vector<InputTerm> terms;

    bool operator==(const InputSpec &) const = default;
};

/// Parses `term ('+' term)*` with `term ::= [amplitude ':'] string`. The
/// amplitude may only be omitted for a single-term input.
///
/// Throws ParseError for unknown symbols, duplicate strings, or when the
/// squared amplitudes do not sum to 1 within `tol`.
InputSpec parse_input(std::string_view text, const MachineSpec &spec, double tol = kDefaultTolerance);

/// Builds an InputSpec from already-validated terms; throws std::invalid_argument
/// on the same conditions as parse_input.
InputSpec make_input(std::vector<InputTerm> terms, const MachineSpec &spec, double tol = kDefaultTolerance);

std::string render_input(const InputSpec &input);

/// The superposition sum_k a_k |0>|initial>|content_k>|0>.
QuantumState initial_state(const MachineSpec &spec, const InputSpec &input);

}  // namespace qtm

#endif
