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

#include "revlogic/error.hpp"
#include "revlogic/metrics.hpp"
#include "revlogic/text_format.hpp"

#include "support/random_circuits.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace revlogic;

namespace {

ParseError parse_error_of(auto&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no parse error thrown";
    return ParseError(ErrorCode::InvalidArgument, 0, "");
}

constexpr const char* kFeynman = R"(# fan-out copy
circuit feynman 2
line 0 primary primary
line 1 primary primary   # target
apply feynman 0 1
)";

}  // namespace

TEST(Netlist, ParsesFeynman) {
    const GateLibrary lib;
    const Circuit c = parse_netlist(kFeynman, lib);
    EXPECT_EQ(c.name(), "feynman");
    EXPECT_EQ(c.width(), 2u);
    ASSERT_EQ(c.cascade().size(), 1u);
    EXPECT_EQ(simulate(c, BitVec::from_string("10")), BitVec::from_string("11"));
}

TEST(Netlist, RolesAndDefaults) {
    const GateLibrary lib;
    const Circuit c = parse_netlist("circuit x 3\nline 2 const1 garbage\nline 0 const0 check1\n", lib);
    EXPECT_EQ(c.lines()[0].input, InputRole::Constant0);
    EXPECT_EQ(c.lines()[0].output, OutputRole::Garbage);
    EXPECT_EQ(c.lines()[0].expected_output, std::optional<bool>(true));
    EXPECT_EQ(c.lines()[1], LineRole{});
    EXPECT_EQ(c.lines()[2].input, InputRole::Constant1);
}

TEST(Netlist, Errors) {
    const GateLibrary lib;
    auto e = parse_error_of([&] { parse_netlist("circuit x 2\napply feynman 0 0\n", lib); });
    EXPECT_EQ(e.code(), ErrorCode::DuplicateLineInGate);
    EXPECT_EQ(e.line(), 2u);

    e = parse_error_of([&] { parse_netlist("circuit x 3\n\n# gate file not loaded\napply tsg 0 1 2\n", lib); });
    EXPECT_EQ(e.code(), ErrorCode::UnknownGate);
    EXPECT_EQ(e.line(), 4u);

    e = parse_error_of([&] { parse_netlist("circuit x 2\napply feynman 0 2\n", lib); });
    EXPECT_EQ(e.code(), ErrorCode::BadLineIndex);

    e = parse_error_of([&] { parse_netlist("circuit x 2\nline 5 primary primary\n", lib); });
    EXPECT_EQ(e.code(), ErrorCode::BadLineIndex);

    e = parse_error_of([&] { parse_netlist("circuit x 2\napply toffoli 0 1\n", lib); });
    EXPECT_EQ(e.code(), ErrorCode::WidthMismatch);

    e = parse_error_of([&] { parse_netlist("circuit x two\n", lib); });
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_EQ(e.line(), 1u);

    e = parse_error_of([&] { parse_netlist("circuit x 2\nline 0 primary sideways\n", lib); });
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);

    e = parse_error_of([&] { parse_netlist("circuit x 2\nline 0 primary primary\nline 0 const0 primary\n", lib); });
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_EQ(e.line(), 3u);

    e = parse_error_of([&] { parse_netlist("wire 0 1\n", lib); });
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
}

TEST(Netlist, RenderParseRoundTripProperty) {
    std::mt19937 rng(77);
    GateLibrary lib;
    std::vector<std::shared_ptr<const GateDef>> extra;
    for (std::size_t w = 2; w <= 4; ++w) {
        GateDef g = gen::random_gate(rng, w, "user" + std::to_string(w));
        lib.add(g);
        extra.push_back(lib.find(g.name()));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t width = 1 + rng() % 10;
        Circuit c = gen::random_circuit(rng, width, rng() % 30, extra, true);
        if (trial % 3 == 0) c = invert_circuit(c);
        const Circuit back = parse_netlist(render_netlist(c), lib);
        EXPECT_EQ(back.lines(), c.lines());
        EXPECT_EQ(permutation_table(back), permutation_table(c));
        EXPECT_EQ(truth_table(back), truth_table(c));
        EXPECT_EQ(metrics(back), metrics(c));
    }
}

TEST(GateFile, ParsesAndValidates) {
    const auto gates = parse_gate_file(R"(# cyclic shift
gate cycle3 2 3
00 01
01 10
10 00
11 11
)");
    ASSERT_EQ(gates.size(), 1u);
    EXPECT_EQ(gates[0].name(), "cycle3");
    EXPECT_EQ(gates[0].quantum_cost(), 3u);
    EXPECT_EQ(gates[0].apply(0b10), 0b00u);

    auto e = parse_error_of([] { parse_gate_file("gate bad 1 0\n0 0\n1 0\n"); });
    EXPECT_EQ(e.code(), ErrorCode::DuplicateOutput);
    e = parse_error_of([] { parse_gate_file("gate bad 2 0\n00 00\n01 01\n"); });
    EXPECT_EQ(e.code(), ErrorCode::IncompleteMapping);
    e = parse_error_of([] { parse_gate_file("gate bad 2 0\n00 00\n01 01\n10 1\n11 11\n"); });
    EXPECT_EQ(e.code(), ErrorCode::WidthMismatch);
    EXPECT_EQ(e.line(), 4u);
    e = parse_error_of([] { parse_gate_file("gate big 13 0\n"); });
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
}

TEST(GateFile, RenderRoundTrip) {
    std::mt19937 rng(12);
    for (std::size_t w = 1; w <= 6; ++w) {
        const GateDef g = gen::random_gate(rng, w, "g" + std::to_string(w));
        const auto back = parse_gate_file(render_gate(g));
        ASSERT_EQ(back.size(), 1u);
        EXPECT_TRUE(back[0].same_function(g));
        EXPECT_EQ(back[0].quantum_cost(), g.quantum_cost());
    }
}

TEST(FunctionTableFile, ParseAndErrors) {
    const FunctionTable t = parse_function_table("table 2 1\n00 1\n01 1\n10 1\n11 0\n");
    EXPECT_EQ(t, FunctionTable(2, 1, {1, 1, 1, 0}));
    EXPECT_EQ(parse_function_table(render_function_table(t)), t);

    auto e = parse_error_of([] { parse_function_table("table 2 1\n00 1\n01 1\n"); });
    EXPECT_EQ(e.code(), ErrorCode::IncompleteMapping);
    e = parse_error_of([] { parse_function_table("table 1 1\n0 1\n1 0\n1 1\n"); });
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    e = parse_error_of([] { parse_function_table("table 1 1\n0 1\n0 0\n"); });
    EXPECT_EQ(e.code(), ErrorCode::IncompleteMapping);
}

TEST(Embedding, RenderListsRolesAndTable) {
    const Embedding e = embed_irreversible(FunctionTable(2, 1, {0, 0, 0, 1}));
    const std::string text = render_embedding(e);
    EXPECT_NE(text.find("constant_inputs 1"), std::string::npos);
    EXPECT_NE(text.find("garbage_outputs 2"), std::string::npos);
    EXPECT_NE(text.find("line 2 const0 garbage"), std::string::npos);
    EXPECT_NE(text.find("table 3 3"), std::string::npos);
}

TEST(ReadFile, MissingFileIsIoError) {
    try {
        read_file("/nonexistent/path.rev");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IoError);
        EXPECT_NE(std::string(e.what()).find("/nonexistent/path.rev"), std::string::npos);
    }
}
