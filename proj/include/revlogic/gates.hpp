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

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revlogic {

enum class GateKind { Not, Feynman, Toffoli, Fredkin, Peres };

inline constexpr GateKind kBuiltinGates[] = {GateKind::Not, GateKind::Feynman, GateKind::Toffoli,
                                             GateKind::Fredkin, GateKind::Peres};

/// Width limit for gates entered as explicit mappings (gate files).
inline constexpr std::size_t kMaxUserGateWidth = 12;

/// A named reversible gate: a bijection over the 2^w patterns of its lines
/// plus a declared quantum cost. Immutable once constructed; every
/// constructor path validates bijectivity.
class GateDef {
public:
    /// Builds a gate from a full permutation table indexed by input pattern.
    /// Accepts widths up to kMaxWidth.
    static GateDef from_permutation(std::string name, std::size_t width,
                                    std::vector<std::uint32_t> perm, std::uint64_t quantum_cost);

    const std::string& name() const noexcept { return name_; }
    std::size_t width() const noexcept { return width_; }
    std::uint64_t quantum_cost() const noexcept { return quantum_cost_; }
    std::span<const std::uint32_t> permutation() const noexcept { return perm_; }

    std::uint32_t apply(std::uint32_t pattern) const { return perm_[pattern]; }

    /// Same permutation under a different cost attribute.
    GateDef with_quantum_cost(std::uint64_t quantum_cost) const;

    /// Pattern-for-pattern equality of the permutations; names and costs are ignored.
    bool same_function(const GateDef& other) const noexcept {
        return width_ == other.width_ && perm_ == other.perm_;
    }

private:
    GateDef(std::string name, std::size_t width, std::vector<std::uint32_t> perm,
            std::uint64_t quantum_cost)
        : name_(std::move(name)), width_(width), perm_(std::move(perm)),
          quantum_cost_(quantum_cost) {}

    std::string name_;
    std::size_t width_;
    std::vector<std::uint32_t> perm_;
    std::uint64_t quantum_cost_;
};

std::string_view gate_kind_name(GateKind kind) noexcept;

/// NOT, FEYNMAN (CNOT), TOFFOLI (2-CNOT), FREDKIN (controlled swap) and PERES,
/// with quantum costs 1, 1, 5, 5, 4.
GateDef builtin_gate(GateKind kind);

/// Validates an explicit input->output table. Throws WidthMismatch when a
/// pattern has the wrong width, IncompleteMapping when some input pattern is
/// missing or listed twice, DuplicateOutput when two inputs share an output.
GateDef user_gate(std::string name, std::size_t width,
                  std::span<const std::pair<BitVec, BitVec>> mapping, std::uint64_t quantum_cost);

BitVec apply(const GateDef& gate, const BitVec& input);

/// Gate realizing the inverse permutation with the same quantum cost.
/// Self-inverse gates keep their name; otherwise the name toggles an "_inv"
/// suffix so that rendered netlists stay resolvable through GateLibrary.
GateDef inverse(const GateDef& gate);

bool is_self_inverse(const GateDef& gate);

/// Name -> gate registry used by the netlist reader. Starts with the
/// built-ins under their lower-case names. Lookups are case-insensitive and
/// resolve "<name>_inv" to the inverse of a registered gate.
class GateLibrary {
public:
    GateLibrary();

    /// Registers a user gate. Throws InvalidArgument if the name is taken.
    void add(GateDef gate);

    std::shared_ptr<const GateDef> find(std::string_view name) const;

    std::vector<std::shared_ptr<const GateDef>> gates() const;

private:
    std::map<std::string, std::shared_ptr<const GateDef>> gates_;
};

}  // namespace revlogic
