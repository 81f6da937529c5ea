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

#pragma once

#include "revlogic/bitvec.hpp"
#include "revlogic/function_table.hpp"
#include "revlogic/gates.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace revlogic {

enum class InputRole { Primary, Constant0, Constant1 };
enum class OutputRole { Primary, Garbage };

struct LineRole {
    InputRole input = InputRole::Primary;
    OutputRole output = OutputRole::Primary;
    /// Value a garbage output must carry. Set on lines of an inverted circuit
    /// whose forward counterpart was a constant input: running backward
    /// reconstructs the constant, and simulate() checks that it does.
    std::optional<bool> expected_output;

    friend bool operator==(const LineRole&, const LineRole&) = default;
};

bool is_constant(InputRole role) noexcept;

struct GateInstance {
    std::shared_ptr<const GateDef> gate;
    /// Position k of the gate reads and writes circuit line line_map[k].
    std::vector<std::size_t> line_map;
};

/// Ordered cascade of reversible gates over a fixed set of lines. There is
/// no branching: a signal is copied only through an explicit Feynman gate
/// with a constant target. Immutable after construction.
class Circuit {
public:
    /// Validates width (1..kMaxWidth), one role per line, and each gate
    /// instance (gate present, line_map size == gate width, indices distinct
    /// and in range). Throws InvalidArgument, BadLineIndex or
    /// DuplicateLineInGate.
    Circuit(std::string name, std::size_t width, std::vector<LineRole> lines,
            std::vector<GateInstance> cascade);

    /// All lines primary in and out.
    Circuit(std::string name, std::size_t width, std::vector<GateInstance> cascade);

    const std::string& name() const noexcept { return name_; }
    std::size_t width() const noexcept { return width_; }
    const std::vector<LineRole>& lines() const noexcept { return lines_; }
    const std::vector<GateInstance>& cascade() const noexcept { return cascade_; }

    /// Applies the cascade to a full-width pattern, ignoring line roles.
    std::uint32_t propagate(std::uint32_t pattern) const;

    /// Lines whose input role is Primary, top to bottom.
    std::vector<std::size_t> free_inputs() const;

    /// Full-width pattern with constant lines at their declared values and
    /// the free lines taken from `free_bits` (MSB = first free line).
    std::uint32_t expand_free_inputs(std::uint32_t free_bits) const;

private:
    std::string name_;
    std::size_t width_;
    std::vector<LineRole> lines_;
    std::vector<GateInstance> cascade_;
};

/// Line values after the cascade. Throws WidthMismatch, or
/// ConstantViolation if the input contradicts a constant line or an output
/// misses an expected value.
BitVec simulate(const Circuit& circuit, const BitVec& input);

/// Reversed cascade of inverse gates; roles swap per line (see LineRole).
Circuit invert_circuit(const Circuit& circuit);

/// Full-width permutation table, ignoring roles.
std::vector<std::uint32_t> permutation_table(const Circuit& circuit);

/// Table over the free input lines (constants fixed) to the full-width
/// output. Large tables are evaluated in parallel blocks; the result is
/// identical to sequential evaluation.
FunctionTable truth_table(const Circuit& circuit);

/// Injectivity of the full-width map over all 2^n patterns.
VerificationReport verify_reversible(const Circuit& circuit);

/// Free inputs -> primary outputs, the function a user sees once garbage is
/// discarded. Empty when the circuit has no free input or no primary output.
std::optional<FunctionTable> primary_function(const Circuit& circuit);

/// Cascade of `second` appended to `first`; both must share width. Roles
/// are taken from `first` inputs and `second` outputs.
Circuit concatenate(const Circuit& first, const Circuit& second);

/// Result of embedding an irreversible function into a reversible one.
struct Embedding {
    std::size_t function_inputs = 0;   // n
    std::size_t function_outputs = 0;  // m
    std::size_t ancilla = 0;           // a
    std::size_t lines = 0;             // max(n, m) + a
    std::size_t constant_inputs = 0;   // lines - n, all constant 0
    std::size_t garbage_outputs = 0;   // lines - m
    FunctionTable table;               // lines -> lines permutation

    /// Role annotations: inputs past n are Constant0, outputs past m Garbage.
    std::vector<LineRole> roles() const;

    /// Single-gate circuit realizing `table` with the embedding's roles. The
    /// gate carries quantum cost 0 since no decomposition is synthesized.
    Circuit to_circuit(std::string name) const;
};

/// Smallest a >= 0 such that f extends injectively onto max(n, m) + a lines;
/// unused patterns are assigned in lexicographic order. Throws TooWide when
/// the embedding would exceed kMaxWidth lines.
Embedding embed_irreversible(const FunctionTable& f);

}  // namespace revlogic
