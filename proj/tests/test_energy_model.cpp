/*
 * Copyright 2026 The revlogic Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "revlogic/energy_model.hpp"
#include "revlogic/error.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

using namespace revlogic;

namespace {

constexpr double kLn2 = 0.69314718055994530942;

PhysicalParams desk() {
    PhysicalParams p;
    p.resistance = 1e3;
    p.capacitance = 1e-12;
    p.vdd = 1.0;
    p.temperature = 300.0;
    p.ramp_time = 1e-7;
    return p;
}

/// Entropy loss by counting output frequencies row by row.
double brute_force_lost_bits(std::size_t n, const std::vector<std::uint32_t>& rows) {
    std::map<std::uint32_t, int> freq;
    for (auto y : rows) ++freq[y];
    double h = 0.0;
    for (const auto& [_, count] : freq) {
        const double p = static_cast<double>(count) / static_cast<double>(rows.size());
        h -= p * std::log(p) / std::log(2.0);
    }
    return static_cast<double>(n) - h;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Landauer, OneBitAtRoomTemperature) {
    const double oracle = 1.3807e-23 * 300.0 * kLn2;
    EXPECT_NEAR(oracle, 2.871e-21, 1e-24);
    EXPECT_NEAR(landauer_bound(1.0, desk()), oracle, 1e-35);
    EXPECT_EQ(landauer_bound(0.0, desk()), 0.0);
    EXPECT_DOUBLE_EQ(landauer_bound(2.0, desk()), 2.0 * landauer_bound(1.0, desk()));
    EXPECT_EQ(code_of([] { landauer_bound(-1.0, desk()); }), ErrorCode::NegativeBits);
}

TEST(Landauer, LinearAndNonNegative) {
    for (double bits = 0.0; bits < 20.0; bits += 0.37) {
        const double e = landauer_bound(bits, desk());
        EXPECT_GE(e, 0.0);
        EXPECT_NEAR(e, bits * landauer_bound(1.0, desk()), 1e-30);
    }
}

TEST(Erasure, NandLosesAboutOnePointOneNineBits) {
    const std::vector<std::uint32_t> rows{1, 1, 1, 0};
    const double oracle = brute_force_lost_bits(2, rows);
    EXPECT_NEAR(oracle, 1.1887, 1e-4);
    const ErasureAccount a = erasure_of(FunctionTable(2, 1, rows), desk());
    EXPECT_NEAR(a.lost_bits, oracle, 1e-12);
    EXPECT_NEAR(a.output_entropy_bits, 2.0 - oracle, 1e-12);
    EXPECT_DOUBLE_EQ(a.worst_case_lost_bits, 1.0);
    EXPECT_DOUBLE_EQ(a.landauer_energy, landauer_bound(a.lost_bits, desk()));
}

TEST(Erasure, ConstantAndPermutation) {
    EXPECT_DOUBLE_EQ(erasure_of(FunctionTable(1, 1, {0, 0}), desk()).lost_bits, 1.0);
    const ErasureAccount perm = erasure_of(FunctionTable(2, 2, {3, 1, 0, 2}), desk());
    EXPECT_EQ(perm.lost_bits, 0.0);
    EXPECT_EQ(perm.landauer_energy, 0.0);
}

TEST(Erasure, PermutationsLoseNothing) {
    std::mt19937 rng(4);
    for (std::size_t n = 1; n <= 12; ++n) {
        std::vector<std::uint32_t> rows(std::size_t{1} << n);
        std::iota(rows.begin(), rows.end(), 0U);
        std::shuffle(rows.begin(), rows.end(), rng);
        EXPECT_EQ(erasure_of(FunctionTable(n, n, rows), desk()).lost_bits, 0.0) << n;
    }
}

TEST(Erasure, BoundedByInputBits) {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 8, m = 1 + rng() % 8;
        std::vector<std::uint32_t> rows(std::size_t{1} << n);
        for (auto& r : rows) r = rng() % (1U << m);
        const ErasureAccount a = erasure_of(FunctionTable(n, m, rows), desk());
        EXPECT_GE(a.lost_bits, 0.0);
        EXPECT_LE(a.lost_bits, static_cast<double>(n));
        EXPECT_NEAR(a.lost_bits, brute_force_lost_bits(n, rows), 1e-9);
        // H(output) <= log2 |image|, so counting distinguishable outputs never exceeds the entropy loss
        EXPECT_LE(a.worst_case_lost_bits, a.lost_bits + 1e-12);
        EXPECT_GE(a.worst_case_lost_bits, -1e-12);
    }
}

TEST(Erasure, CircuitDiscardsGarbage) {
    std::vector<LineRole> roles(3);
    roles[0].output = OutputRole::Garbage;
    roles[1].output = OutputRole::Garbage;
    roles[2].input = InputRole::Constant0;
    const Circuit c("and", 3, roles, {{std::make_shared<const GateDef>(builtin_gate(GateKind::Toffoli)), {0, 1, 2}}});
    EXPECT_NEAR(erasure_of(c, desk()).lost_bits, brute_force_lost_bits(2, {0, 0, 0, 1}), 1e-12);
    EXPECT_EQ(erasure_of(Circuit("id", 3, {}), desk()).lost_bits, 0.0);
}

TEST(Conventional, HalfCVSquared) {
    EXPECT_DOUBLE_EQ(conventional_switching_energy(desk()), 5e-13);
    PhysicalParams p = desk();
    p.vdd = 0.0;
    EXPECT_EQ(conventional_switching_energy(p), 0.0);
    p.vdd = 2.0;
    EXPECT_DOUBLE_EQ(conventional_switching_energy(p), 4.0 * 5e-13);
}

TEST(Adiabatic, ClosedForm) {
    EXPECT_DOUBLE_EQ(adiabatic_energy(desk()), 1e-14);
    PhysicalParams p = desk();
    p.ramp_time = 2.0 * p.rc();
    EXPECT_NEAR(adiabatic_energy(p), conventional_switching_energy(p), 1e-12 * conventional_switching_energy(p));
    PhysicalParams slow = desk();
    slow.ramp_time *= 2.0;
    EXPECT_DOUBLE_EQ(adiabatic_energy(slow), 0.5 * adiabatic_energy(desk()));
    p.ramp_time = 0.0;
    EXPECT_EQ(code_of([&] { adiabatic_energy(p); }), ErrorCode::NonpositiveT);
    p.ramp_time = -1.0;
    EXPECT_EQ(code_of([&] { adiabatic_energy(p); }), ErrorCode::NonpositiveT);
}

TEST(Adiabatic, Monotonicity) {
    const PhysicalParams base = desk();
    PhysicalParams p = base;
    double prev = adiabatic_energy(p);
    for (int i = 0; i < 10; ++i) {
        p.ramp_time *= 1.5;
        const double e = adiabatic_energy(p);
        EXPECT_LT(e, prev);
        prev = e;
    }
    for (double PhysicalParams::*field : {&PhysicalParams::resistance, &PhysicalParams::capacitance, &PhysicalParams::vdd}) {
        PhysicalParams q = base;
        q.*field *= 1.3;
        EXPECT_GT(adiabatic_energy(q), adiabatic_energy(base));
    }
}

TEST(Adiabatic, CrossoverAtTwoRC) {
    const PhysicalParams base = desk();
    EXPECT_DOUBLE_EQ(crossover_ramp_time(base), 2e-9);
    for (double factor : {0.1, 0.5, 0.99, 1.01, 2.0, 100.0}) {
        PhysicalParams p = base;
        p.ramp_time = factor * crossover_ramp_time(base);
        EXPECT_EQ(adiabatic_energy(p) < conventional_switching_energy(p), factor > 1.0) << factor;
    }
}

TEST(Efficiency, OpsPerJoule) {
    EXPECT_EQ(computational_efficiency(0.0, 1.0), 0.0);
    EXPECT_DOUBLE_EQ(computational_efficiency(1e9, 1e-3), 1e12);
    const double per_bit = 1.3807e-23 * 300.0 * kLn2;
    const double n = 1e6;
    EXPECT_NEAR(computational_efficiency(n, n * per_bit), 3.483e20, 1e17);
    EXPECT_EQ(code_of([] { computational_efficiency(1.0, 0.0); }), ErrorCode::NonpositiveEnergy);
}

TEST(Params, Validation) {
    PhysicalParams p = desk();
    p.capacitance = 0.0;
    EXPECT_EQ(code_of([&] { conventional_switching_energy(p); }), ErrorCode::InvalidArgument);
    p = desk();
    p.temperature = -3.0;
    EXPECT_EQ(code_of([&] { landauer_bound(1.0, p); }), ErrorCode::InvalidArgument);
}

TEST(EnergyReport, JsonFieldsAndCycleDoubling) {
    const EnergyReport r = energy_report(1.0, desk());
    EXPECT_DOUBLE_EQ(r.conventional_cycle_J, 2.0 * r.conventional_J);
    EXPECT_DOUBLE_EQ(r.adiabatic_cycle_J, 2.0 * r.adiabatic_J);
    const auto j = nlohmann::json::parse(to_json(r));
    for (const char* key : {"lost_bits", "landauer_J", "conventional_J", "adiabatic_J", "crossover_T_s"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_DOUBLE_EQ(j.at("adiabatic_J").get<double>(), 1e-14);
}
