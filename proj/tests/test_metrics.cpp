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

#include "revlogic/metrics.hpp"

#include "support/random_circuits.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <random>

using namespace revlogic;

namespace {

std::shared_ptr<const GateDef> gate(GateKind kind) { return std::make_shared<const GateDef>(builtin_gate(kind)); }

}  // namespace

TEST(QuantumCost, Examples) {
    EXPECT_EQ(quantum_cost(Circuit("f", 2, {{gate(GateKind::Feynman), {0, 1}}})), 1u);
    EXPECT_EQ(quantum_cost(Circuit("e", 2, {})), 0u);
    EXPECT_EQ(quantum_cost(Circuit("tp", 3, {{gate(GateKind::Toffoli), {0, 1, 2}}, {gate(GateKind::Peres), {2, 0, 1}}})),
              9u);
}

TEST(QuantumCost, OverriddenAttributeIsUsed) {
    auto cheap = std::make_shared<const GateDef>(builtin_gate(GateKind::Toffoli).with_quantum_cost(3));
    EXPECT_EQ(quantum_cost(Circuit("t", 3, {{cheap, {0, 1, 2}}})), 3u);
}

TEST(ConstantInputs, Examples) {
    EXPECT_EQ(constant_inputs(Circuit("p", 3, {})), 0u);

    std::vector<LineRole> roles(3);
    roles[0].input = InputRole::Constant1;
    EXPECT_EQ(constant_inputs(Circuit("fr", 3, roles, {{gate(GateKind::Fredkin), {0, 1, 2}}})), 1u);

    const Embedding e = embed_irreversible(FunctionTable(2, 1, {0, 0, 0, 1}));
    EXPECT_EQ(constant_inputs(e.to_circuit("and")), 1u);
    EXPECT_EQ(garbage_outputs(e.to_circuit("and")), 2u);
}

TEST(GarbageOutputs, Examples) {
    std::vector<LineRole> copy(2);
    copy[1].input = InputRole::Constant0;
    EXPECT_EQ(garbage_outputs(Circuit("copy", 2, copy, {{gate(GateKind::Feynman), {0, 1}}})), 0u);

    std::vector<LineRole> all_garbage(4);
    for (auto& r : all_garbage) r.output = OutputRole::Garbage;
    EXPECT_EQ(garbage_outputs(Circuit("g", 4, all_garbage, {})), 4u);
}

TEST(Metrics, AdditiveUnderConcatenation) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t w = 3 + rng() % 6;
        const Circuit a = gen::random_circuit(rng, w, rng() % 20);
        const Circuit b = gen::random_circuit(rng, w, rng() % 20);
        EXPECT_EQ(quantum_cost(concatenate(a, b)), quantum_cost(a) + quantum_cost(b));
    }
}

TEST(Metrics, InversionKeepsQuantumCost) {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        const Circuit c = gen::random_circuit(rng, 3 + rng() % 6, rng() % 30, {}, true);
        const MetricsReport m = metrics(c);
        const MetricsReport inv = metrics(invert_circuit(c));
        EXPECT_EQ(inv.quantum_cost, m.quantum_cost);
        EXPECT_EQ(inv.gate_count, m.gate_count);
        EXPECT_LE(m.constant_inputs, m.width);
        EXPECT_LE(m.garbage_outputs, m.width);
        EXPECT_GE(m.quantum_cost, m.gate_count);  // built-ins all cost >= 1
    }
}

TEST(Metrics, JsonShape) {
    const Circuit c("f", 2, {{gate(GateKind::Feynman), {0, 1}}});
    const auto j = nlohmann::json::parse(to_json(metrics(c)));
    EXPECT_EQ(j.at("quantum_cost"), 1);
    EXPECT_EQ(j.at("constant_inputs"), 0);
    EXPECT_EQ(j.at("garbage_outputs"), 0);
    EXPECT_EQ(j.at("gate_count"), 1);
    EXPECT_EQ(j.at("width"), 2);
    EXPECT_NE(to_table(metrics(c)).find("quantum cost"), std::string::npos);
}
