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


#include "qtm/halting.h"

#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.h"
#include "qtm/evolution.h"
#include "qtm/report.h"

namespace qtm {
namespace {

Configuration config(const MachineSpec &spec, const std::string &state, const std::string &tape, std::int64_t head) {
    return Configuration::make(spec, *spec.find_state(state), Tape::from_string(tape), head);
}

struct CorpusCase {
    const char *machine;
    const char *input;
};

/// Machines that are isometric on their reachable configurations, with inputs.
const CorpusCase kCorpus[] = {
    {"hadamard_walker", "0110"},
    {"coin_walker", "01"},
    {"right_shift", "101"},
    {"flip_walker", "0"},
    {"left_walker", "11"},
    {"incrementer", "111"},
    {"complement", "0110"},
    {"parity", "1011"},
    {"coin_corrected", "1/sqrt(2):0 + 1/sqrt(2) i:1"},
    {"two_time_coin", "01"},
    {"two_time_coin", "1/sqrt(2):0 + 1/sqrt(2):0101"},
    {"phase_coin", "0111"},
};

TEST(MeasurementSchedule, ParseAndRender) {
    EXPECT_EQ(MeasurementSchedule::parse("every", 7), MeasurementSchedule::every_step());
    EXPECT_EQ(MeasurementSchedule::parse("end", 7), MeasurementSchedule::end_only(7));
    EXPECT_EQ(MeasurementSchedule::parse("end:3", 7), MeasurementSchedule::end_only(3));
    EXPECT_EQ(MeasurementSchedule::parse("at:5,2,5", 7), MeasurementSchedule::at_steps({2, 5}));
    EXPECT_EQ(MeasurementSchedule::at_steps({2, 5}).to_string(), "at:2,5");
    EXPECT_EQ(MeasurementSchedule::end_only(7).to_string(), "end:7");
    EXPECT_EQ(MeasurementSchedule::every_step().to_string(), "every");
    for (const char *bad : {"", "sometimes", "at:", "at:0", "at:1,,2", "at:x", "end:-1", "end:"}) {
        EXPECT_THROW(MeasurementSchedule::parse(bad, 7), std::invalid_argument) << bad;
    }
    EXPECT_THROW(MeasurementSchedule::end_only(-1), std::invalid_argument);
}

TEST(MeasurementSchedule, MeasuresAt) {
    EXPECT_TRUE(MeasurementSchedule::every_step().measures_at(1));
    EXPECT_FALSE(MeasurementSchedule::every_step().measures_at(0));
    EXPECT_TRUE(MeasurementSchedule::end_only(4).measures_at(4));
    EXPECT_FALSE(MeasurementSchedule::end_only(4).measures_at(3));
    EXPECT_FALSE(MeasurementSchedule::end_only(0).measures_at(0));
    EXPECT_TRUE(MeasurementSchedule::at_steps({3}).measures_at(3));
    EXPECT_EQ(MeasurementSchedule::at_steps({3, 9}).last_scheduled_step(), 9);
}

TEST(MeasureHalt, SplitsByHaltBit) {
    MachineSpec spec = testing::load_qtm("coin_corrected");
    QuantumState state;
    state.add(config(spec, "qH", "1", 1), Amplitude(0.6));
    state.add(config(spec, "q0", "0", 0), Amplitude(0.0, 0.8));
    auto outcomes = measure_halt(state);
    ASSERT_EQ(outcomes.size(), 2u);
    EXPECT_EQ(outcomes[0].bit, 1);
    EXPECT_NEAR(outcomes[0].probability, 0.36, 1e-15);
    EXPECT_EQ(outcomes[0].collapsed.size(), 1u);
    EXPECT_NEAR(outcomes[0].collapsed.norm2(), 1.0, 1e-15);
    EXPECT_EQ(outcomes[1].bit, 0);
    EXPECT_NEAR(outcomes[1].probability, 0.64, 1e-15);
    EXPECT_NEAR(outcomes[1].collapsed.norm2(), 1.0, 1e-15);
}

TEST(MeasureHalt, UnhaltedStateIsUnchanged) {
    MachineSpec spec = testing::load_qtm("coin_corrected");
    QuantumState state(config(spec, "q0", "01", 0));
    auto outcomes = measure_halt(state);
    ASSERT_EQ(outcomes.size(), 1u);
    EXPECT_EQ(outcomes[0].bit, 0);
    EXPECT_DOUBLE_EQ(outcomes[0].probability, 1.0);
    EXPECT_EQ(outcomes[0].collapsed, state);
}

TEST(SplitBranch, ProbabilitiesMultiplyAlongTranscript) {
    MachineSpec spec = testing::load_qtm("coin_corrected");
    Branch parent;
    parent.probability = 0.5;
    parent.state.add(config(spec, "qH", "1", 1), Amplitude(0.6));
    parent.state.add(config(spec, "q0", "0", 0), Amplitude(0.8));
    auto children = split_branch(parent, 4);
    ASSERT_EQ(children.size(), 2u);
    EXPECT_NEAR(children[0].probability + children[1].probability, 0.5, 1e-15);
    EXPECT_EQ(children[0].transcript, (std::vector<std::pair<std::int64_t, int>>{{4, 1}}));
}

TEST(RunSchedule, CorrectedCoinOnZero) {
    MachineSpec spec = testing::load_qtm("coin_corrected");
    auto dist = run_schedule(spec, parse_input("0", spec), MeasurementSchedule::every_step(), 1);
    ASSERT_EQ(dist.probabilities.size(), 2u);
    EXPECT_NEAR(dist.probability(Outcome::halted_at(1, Tape::from_string("0"))), 0.5, 1e-15);
    EXPECT_NEAR(dist.probability(Outcome::halted_at(1, Tape::from_string("1"))), 0.5, 1e-15);
    EXPECT_FALSE(dist.norm_audit_flag);
}

TEST(RunSchedule, TwoTimeCoinHaltsAtTwoSteps) {
    MachineSpec spec = testing::load_qtm("two_time_coin");
    auto dist = run_schedule(spec, parse_input("01", spec), MeasurementSchedule::every_step(), 10);
    ASSERT_EQ(dist.probabilities.size(), 2u);
    EXPECT_NEAR(dist.probability(Outcome::halted_at(1, Tape::from_string("01"))), 0.5, 1e-15);
    EXPECT_NEAR(dist.probability(Outcome::halted_at(4, Tape::from_string("1101"))), 0.5, 1e-15);
    EXPECT_NEAR(dist.halted_by(3), 0.5, 1e-15);
}

TEST(RunSchedule, LiftedIncrementerIsAPointMass) {
    ClassicalTM tm = testing::load_tm("incrementer");
    MachineSpec spec = lift_to_qtm(tm);
    auto classical = run_classical(tm, "111", 100);
    ASSERT_TRUE(classical.halted);
    EXPECT_EQ(classical.steps, 5);
    auto dist = run_schedule(spec, parse_input("111", spec), MeasurementSchedule::every_step(), 100);
    ASSERT_EQ(dist.probabilities.size(), 1u);
    EXPECT_EQ(dist.probabilities.begin()->first, Outcome::halted_at(5, Tape::from_string("1111")));
    EXPECT_DOUBLE_EQ(dist.probabilities.begin()->second, 1.0);
}

TEST(RunSchedule, RightShiftNeverHalts) {
    MachineSpec spec = testing::load_qtm("right_shift");
    InputSpec input = parse_input("10", spec);
    for (const auto &schedule : {MeasurementSchedule::every_step(), MeasurementSchedule::end_only(20),
                                 MeasurementSchedule::at_steps({3, 7, 20})}) {
        auto dist = run_schedule(spec, input, schedule, 20);
        ASSERT_EQ(dist.probabilities.size(), 1u);
        EXPECT_EQ(dist.probabilities.begin()->first, Outcome::unhalted());
        EXPECT_DOUBLE_EQ(dist.probabilities.begin()->second, 1.0);
    }
}

TEST(RunSchedule, ScheduleBeyondBudgetIsRejected) {
    MachineSpec spec = testing::load_qtm("right_shift");
    InputSpec input = parse_input("1", spec);
    EXPECT_THROW(run_schedule(spec, input, MeasurementSchedule::at_steps({5}), 4), std::invalid_argument);
    EXPECT_THROW(run_schedule(spec, input, MeasurementSchedule::end_only(5), 4), std::invalid_argument);
    EXPECT_THROW(run_schedule(spec, input, MeasurementSchedule::every_step(), -1), std::invalid_argument);
}

TEST(RunSchedule, ProbabilityIsConserved) {
    for (auto [machine, input] : kCorpus) {
        MachineSpec spec = testing::load_qtm(machine);
        InputSpec parsed = parse_input(input, spec);
        for (const auto &schedule : {MeasurementSchedule::every_step(), MeasurementSchedule::end_only(30),
                                     MeasurementSchedule::at_steps({1, 4, 9})}) {
            auto dist = run_schedule(spec, parsed, schedule, 30);
            EXPECT_NEAR(dist.total(), 1.0, 1e-9) << machine;
            EXPECT_FALSE(dist.norm_audit_flag) << machine;
            for (const auto &[outcome, p] : dist.probabilities) {
                EXPECT_GE(p, 0.0);
            }
        }
    }
}

TEST(RunSchedule, CumulativeHaltMatchesUnmeasuredHaltedMass) {
    for (auto [machine, input] : kCorpus) {
        MachineSpec spec = testing::load_qtm(machine);
        InputSpec parsed = parse_input(input, spec);
        auto dist = run_schedule(spec, parsed, MeasurementSchedule::every_step(), 20);
        auto [state, trace] = evolve(spec, parsed, 20);
        double previous = 0;
        for (const auto &row : trace.rows) {
            double cumulative = dist.halted_by(row.step);
            EXPECT_NEAR(cumulative, row.halted_mass, 1e-9) << machine << " step " << row.step;
            EXPECT_GE(cumulative, previous - 1e-12);
            previous = cumulative;
        }
    }
}

TEST(CompareSchedules, EveryStepMatchesEndOnly) {
    for (auto [machine, input] : kCorpus) {
        MachineSpec spec = testing::load_qtm(machine);
        InputSpec parsed = parse_input(input, spec);
        for (std::int64_t n : {1, 5, 20}) {
            auto report = compare_schedules(spec, parsed, n, MeasurementSchedule::every_step(),
                                            MeasurementSchedule::end_only(n));
            EXPECT_LE(report.total_variation, 1e-9) << machine << " n=" << n;
            EXPECT_TRUE(report.equivalent());
            // The final measurement must be at n: mass halting after the last
            // scheduled step is never observed.
            auto at = compare_schedules(spec, parsed, n, MeasurementSchedule::at_steps({1, (n + 1) / 2, n}),
                                        MeasurementSchedule::end_only(n));
            EXPECT_LE(at.total_variation, 1e-9) << machine << " n=" << n;
        }
    }
}

TEST(CompareSchedules, EarlyFinalMeasurementMissesLateHalts) {
    MachineSpec spec = testing::load_qtm("two_time_coin");
    auto report = compare_schedules(spec, parse_input("01", spec), 6, MeasurementSchedule::at_steps({2}),
                                    MeasurementSchedule::end_only(6));
    EXPECT_NEAR(report.total_variation, 0.5, 1e-15);
    EXPECT_FALSE(report.equivalent());
    EXPECT_NEAR(report.a.probability(Outcome::unhalted()), 0.5, 1e-15);
}

TEST(CompareSchedules, CoarsenedKeysDropHaltStep) {
    MachineSpec spec = testing::load_qtm("two_time_coin");
    auto report = compare_schedules(spec, parse_input("01", spec), 6, MeasurementSchedule::every_step(),
                                    MeasurementSchedule::end_only(6));
    ASSERT_EQ(report.a.probabilities.size(), 2u);
    EXPECT_EQ(report.a.probabilities, report.b.probabilities);
    for (const auto &[outcome, p] : report.a.probabilities) {
        EXPECT_TRUE(outcome.halted);
        EXPECT_FALSE(outcome.step.has_value());
    }
}

TEST(CompareSchedules, ZeroStepsIsUnhaltedOnBothSides) {
    MachineSpec spec = testing::load_qtm("coin_corrected");
    auto report = compare_schedules(spec, parse_input("0", spec), 0, MeasurementSchedule::every_step(),
                                    MeasurementSchedule::end_only(0));
    EXPECT_EQ(report.total_variation, 0.0);
    ASSERT_EQ(report.a.probabilities.size(), 1u);
    EXPECT_EQ(report.a.probabilities.begin()->first, Outcome::unhalted());
}

TEST(CompareSchedules, NaiveCoinRaisesTheNormAudit) {
    MachineSpec spec = testing::load_qtm("coin_naive");
    auto report = compare_schedules(spec, parse_input("1/sqrt(2):0 + 1/sqrt(2):1", spec), 3,
                                    MeasurementSchedule::every_step(), MeasurementSchedule::end_only(3));
    EXPECT_TRUE(report.norm_audit_flag);
    EXPECT_NEAR(report.a.max_norm_deviation, 1.0 / std::sqrt(2.0), 1e-12);
    // Frozen baseline: both schedules renormalize the same single halting
    // event, so their distributions coincide.
    EXPECT_NEAR(report.total_variation, 0.0, 1e-12);
    // Renormalized: |1/2|^2 / (1/4 + (1/2 + 1/sqrt(2))^2) with denominator 1 + 1/sqrt(2).
    double p0 = 0.25 / (1.0 + 1.0 / std::sqrt(2.0));
    EXPECT_NEAR(report.a.probability(Outcome::halted_by_end(Tape::from_string("0"))), p0, 1e-12);
}

TEST(TotalVariation, Definition) {
    OutputDistribution a;
    OutputDistribution b;
    a.probabilities[Outcome::unhalted()] = 0.5;
    a.probabilities[Outcome::halted_by_end(Tape::from_string("1"))] = 0.5;
    b.probabilities[Outcome::halted_by_end(Tape::from_string("1"))] = 0.2;
    b.probabilities[Outcome::halted_by_end(Tape::from_string("0"))] = 0.8;
    EXPECT_NEAR(total_variation(a, b), 0.8, 1e-15);
    EXPECT_EQ(total_variation(a, a), 0.0);
}

TEST(SampleRun, PointMassSamplesAreIdentical) {
    MachineSpec spec = testing::load_qtm("incrementer");
    auto empirical = sample_run(spec, parse_input("11", spec), MeasurementSchedule::every_step(), 10, 5, 100);
    ASSERT_EQ(empirical.counts.size(), 1u);
    EXPECT_EQ(empirical.counts.begin()->second, 100u);
}

TEST(SampleRun, SameSeedSameResult) {
    MachineSpec spec = testing::load_qtm("two_time_coin");
    InputSpec input = parse_input("1/sqrt(2):0 + 1/sqrt(2):0101", spec);
    auto a = sample_run(spec, input, MeasurementSchedule::every_step(), 12, 42, 500);
    auto b = sample_run(spec, input, MeasurementSchedule::every_step(), 12, 42, 500);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(sample_report_json("m", {}, a), sample_report_json("m", {}, b));
    auto c = sample_run(spec, input, MeasurementSchedule::every_step(), 12, 43, 500);
    EXPECT_NE(a.counts, c.counts);
}

TEST(SampleRun, ConvergesToExactDistribution) {
    MachineSpec spec = testing::load_qtm("two_time_coin");
    InputSpec input = parse_input("1/sqrt(2):0 + 1/sqrt(2):0101", spec);
    auto exact = run_schedule(spec, input, MeasurementSchedule::every_step(), 12);
    auto empirical = sample_run(spec, input, MeasurementSchedule::every_step(), 12, 1, 20000);
    EXPECT_LT(total_variation(exact, empirical.distribution), 0.03);
    std::uint64_t total = 0;
    for (const auto &[outcome, count] : empirical.counts) {
        total += count;
        EXPECT_GT(exact.probability(outcome), 0.0);
    }
    EXPECT_EQ(total, 20000u);
}

}  // namespace
}  // namespace qtm
