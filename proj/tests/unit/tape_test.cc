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

#include <gtest/gtest.h>

#include <unordered_set>

namespace qtm {
namespace {

TEST(Tape, ReadsBlankOutsideWrittenRegion) {
    Tape tape = Tape::from_string("101", 4);
    EXPECT_EQ(tape.read(3), kBlank);
    EXPECT_EQ(tape.read(4), '1');
    EXPECT_EQ(tape.read(5), '0');
    EXPECT_EQ(tape.read(7), kBlank);
    EXPECT_EQ(tape.read(-1000000), kBlank);
}

TEST(Tape, WritingBlankIsIndistinguishableFromNeverWriting) {
    Tape written = Tape::from_string("1").with(5, '0').with(5, kBlank);
    EXPECT_EQ(written, Tape::from_string("1"));
    EXPECT_EQ(std::hash<Tape>()(written), std::hash<Tape>()(Tape::from_string("1")));
    EXPECT_EQ(Tape().with(-3, kBlank), Tape());
    EXPECT_EQ(Tape::from_string("__1_0__", -2), Tape::from_string("1_0", 0));
}

TEST(Tape, CanonicalEncoding) {
    EXPECT_EQ(Tape().to_string(), "@0");
    EXPECT_EQ(Tape::from_string("1_0", -1).to_string(), "1_0@-1");
    Tape tape = Tape::from_string("1_0", -1);
    EXPECT_EQ(tape.offset(), -1);
    EXPECT_EQ(tape.cells(), "1_0");
    EXPECT_EQ(tape.non_blank_count(), 2u);
}

TEST(Tape, WritesExtendInBothDirections) {
    Tape tape = Tape::from_string("1").with(-2, '0').with(3, '1');
    EXPECT_EQ(tape.to_string(), "0_1__1@-2");
    tape = tape.with(-2, kBlank);
    EXPECT_EQ(tape.to_string(), "1__1@0");
    tape = tape.with(0, kBlank).with(3, kBlank);
    EXPECT_TRUE(tape.empty());
    EXPECT_EQ(tape, Tape());
}

TEST(Tape, ShiftedMovesContent) {
    Tape tape = Tape::from_string("10", 2);
    EXPECT_EQ(tape.shifted(-2), Tape::from_string("10"));
    EXPECT_EQ(Tape().shifted(5), Tape());
}

TEST(Tape, OrderingIsTotalAndConsistentWithEquality) {
    Tape a = Tape::from_string("0");
    Tape b = Tape::from_string("1");
    Tape c = Tape::from_string("0", 1);
    EXPECT_LT(a, b);
    EXPECT_LT(b, c);
    EXPECT_EQ(a <=> Tape::from_string("_0_", -1), std::strong_ordering::equal);
    std::unordered_set<Tape> set{a, b, c, Tape::from_string("_0")};
    EXPECT_EQ(set.size(), 3u);
}

}  // namespace
}  // namespace qtm
