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
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace revlogic {

/// Explicit Boolean function {0,1}^n -> {0,1}^m, possibly irreversible.
/// Row i holds the output pattern for input pattern i (index 0 = MSB on
/// both sides, as for BitVec).
class FunctionTable {
public:
    FunctionTable(std::size_t inputs, std::size_t outputs, std::vector<std::uint32_t> rows);

    /// Wraps a permutation as an n -> n table.
    static FunctionTable from_permutation(std::size_t width, std::span<const std::uint32_t> perm);

    std::size_t inputs() const noexcept { return inputs_; }
    std::size_t outputs() const noexcept { return outputs_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::span<const std::uint32_t> rows() const noexcept { return rows_; }

    std::uint32_t operator()(std::uint32_t input) const { return rows_[input]; }
    BitVec evaluate(const BitVec& input) const;

    /// True iff n == m and every output pattern is hit exactly once.
    bool is_permutation() const;

    friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

private:
    std::size_t inputs_;
    std::size_t outputs_;
    std::vector<std::uint32_t> rows_;
};

/// Outcome of an injectivity check; `collision` names two inputs that share
/// an output when the map is not injective.
struct VerificationReport {
    bool reversible = true;
    std::optional<std::pair<BitVec, BitVec>> collision;
};

/// Injectivity of the table over all 2^n inputs. A table with n == m that
/// passes is a bijection.
VerificationReport verify_reversible(const FunctionTable& table);

}  // namespace revlogic
