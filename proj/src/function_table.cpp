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

#include "revlogic/function_table.hpp"

#include "revlogic/error.hpp"

#include <vector>

namespace revlogic {

FunctionTable::FunctionTable(std::size_t inputs, std::size_t outputs, std::vector<std::uint32_t> rows)
    : inputs_(inputs), outputs_(outputs), rows_(std::move(rows)) {
    if (inputs == 0 || outputs == 0) {
        throw Error(ErrorCode::InvalidArgument, "function table needs at least one input and one output");
    }
    if (inputs > kMaxWidth || outputs > kMaxWidth) {
        throw Error(ErrorCode::WidthTooLarge, "function table wider than " + std::to_string(kMaxWidth) + " bits");
    }
    if (rows_.size() != (std::size_t{1} << inputs)) {
        throw Error(ErrorCode::IncompleteMapping, "function table over " + std::to_string(inputs) +
                                                      " inputs needs " + std::to_string(std::size_t{1} << inputs) +
                                                      " rows, got " + std::to_string(rows_.size()));
    }
    for (std::uint32_t y : rows_) {
        if (y >> outputs) {
            throw Error(ErrorCode::WidthMismatch, "function table output does not fit in " +
                                                      std::to_string(outputs) + " bits");
        }
    }
}

FunctionTable FunctionTable::from_permutation(std::size_t width, std::span<const std::uint32_t> perm) {
    return FunctionTable(width, width, std::vector<std::uint32_t>(perm.begin(), perm.end()));
}

BitVec FunctionTable::evaluate(const BitVec& input) const {
    if (input.width() != inputs_) {
        throw Error(ErrorCode::WidthMismatch, "function table expects " + std::to_string(inputs_) +
                                                  " input bits, got " + std::to_string(input.width()));
    }
    return BitVec(outputs_, rows_[input.value()]);
}

bool FunctionTable::is_permutation() const {
    return inputs_ == outputs_ && verify_reversible(*this).reversible;
}

VerificationReport verify_reversible(const FunctionTable& table) {
    constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
    std::vector<std::uint32_t> first_input(std::size_t{1} << table.outputs(), kUnseen);
    const auto rows = table.rows();
    for (std::uint32_t x = 0; x < rows.size(); ++x) {
        std::uint32_t& slot = first_input[rows[x]];
        if (slot != kUnseen) {
            return {false, std::make_pair(BitVec(table.inputs(), slot), BitVec(table.inputs(), x))};
        }
        slot = x;
    }
    return {};
}

}  // namespace revlogic
