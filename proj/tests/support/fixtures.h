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


#ifndef QTM_TESTS_FIXTURES_H
#define QTM_TESTS_FIXTURES_H

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qtm/classical.h"
#include "qtm/machine.h"

namespace qtm::testing {

inline std::string fixture_path(const std::string &name) {
    return std::string(QTM_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string &name) {
    std::ifstream file(fixture_path(name));
    if (!file) {
        throw std::runtime_error("missing fixture " + name);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

inline MachineSpec load_qtm(const std::string &name) {
    return parse_machine(read_fixture(name + ".qtm"));
}

inline ClassicalTM load_tm(const std::string &name) {
    return parse_classical(read_fixture(name + ".tm"));
}

}  // namespace qtm::testing

#endif
