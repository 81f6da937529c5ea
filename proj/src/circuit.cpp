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

#include "revlogic/circuit.hpp"

#include "revlogic/error.hpp"

#include <algorithm>
#include <thread>

namespace revlogic {
namespace {

/// Below this many rows a table is filled on the calling thread.
constexpr std::size_t kParallelRows = std::size_t{1} << 14;

template <typename Fn>
void for_each_block(std::size_t count, Fn&& fn) {
    const std::size_t threads =
        count < kParallelRows ? 1 : std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
    if (threads == 1) {
        fn(std::size_t{0}, count);
        return;
    }
    const std::size_t block = (count + threads - 1) / threads;
    std::vector<std::jthread> workers;
    for (std::size_t begin = 0; begin < count; begin += block) {
        workers.emplace_back([&fn, begin, end = std::min(count, begin + block)] { fn(begin, end); });
    }
}

std::uint32_t apply_instance(const GateInstance& inst, std::size_t width, std::uint32_t state) {
    const std::size_t w = inst.line_map.size();
    std::uint32_t local = 0;
    for (std::size_t k = 0; k < w; ++k) {
        local = (local << 1) | static_cast<std::uint32_t>(bit_at(state, width, inst.line_map[k]));
    }
    const std::uint32_t out = inst.gate->apply(local);
    for (std::size_t k = 0; k < w; ++k) {
        const std::uint32_t mask = 1U << (width - 1 - inst.line_map[k]);
        state = bit_at(out, w, k) ? (state | mask) : (state & ~mask);
    }
    return state;
}

}  // namespace

bool is_constant(InputRole role) noexcept { return role != InputRole::Primary; }

Circuit::Circuit(std::string name, std::size_t width, std::vector<LineRole> lines,
                 std::vector<GateInstance> cascade)
    : name_(std::move(name)), width_(width), lines_(std::move(lines)), cascade_(std::move(cascade)) {
    if (width_ == 0 || width_ > kMaxWidth) {
        throw Error(ErrorCode::InvalidArgument,
                    "circuit width " + std::to_string(width_) + " outside 1.." + std::to_string(kMaxWidth));
    }
    if (lines_.size() != width_) {
        throw Error(ErrorCode::InvalidArgument, "circuit has " + std::to_string(width_) + " lines but " +
                                                    std::to_string(lines_.size()) + " role entries");
    }
    for (std::size_t g = 0; g < cascade_.size(); ++g) {
        const GateInstance& inst = cascade_[g];
        const std::string where = "gate " + std::to_string(g);
        if (!inst.gate) {
            throw Error(ErrorCode::InvalidArgument, where + " has no definition");
        }
        if (inst.line_map.size() != inst.gate->width()) {
            throw Error(ErrorCode::WidthMismatch, where + " ('" + inst.gate->name() + "') needs " +
                                                      std::to_string(inst.gate->width()) + " lines, got " +
                                                      std::to_string(inst.line_map.size()));
        }
        for (std::size_t k = 0; k < inst.line_map.size(); ++k) {
            if (inst.line_map[k] >= width_) {
                throw Error(ErrorCode::BadLineIndex, where + " uses line " + std::to_string(inst.line_map[k]) +
                                                         " of a " + std::to_string(width_) + "-line circuit");
            }
            for (std::size_t j = 0; j < k; ++j) {
                if (inst.line_map[j] == inst.line_map[k]) {
                    throw Error(ErrorCode::DuplicateLineInGate,
                                where + " uses line " + std::to_string(inst.line_map[k]) +
                                    " twice; fan-out is not allowed in a reversible circuit");
                }
            }
        }
    }
}

Circuit::Circuit(std::string name, std::size_t width, std::vector<GateInstance> cascade)
    : Circuit(std::move(name), width, std::vector<LineRole>(width), std::move(cascade)) {}

std::uint32_t Circuit::propagate(std::uint32_t pattern) const {
    for (const GateInstance& inst : cascade_) {
        pattern = apply_instance(inst, width_, pattern);
    }
    return pattern;
}

std::vector<std::size_t> Circuit::free_inputs() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < width_; ++i) {
        if (!is_constant(lines_[i].input)) out.push_back(i);
    }
    return out;
}

std::uint32_t Circuit::expand_free_inputs(std::uint32_t free_bits) const {
    const auto free = free_inputs();
    std::uint32_t pattern = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < width_; ++i) {
        bool bit;
        if (lines_[i].input == InputRole::Primary) {
            bit = bit_at(free_bits, free.size(), k++);
        } else {
            bit = lines_[i].input == InputRole::Constant1;
        }
        pattern = (pattern << 1) | static_cast<std::uint32_t>(bit);
    }
    return pattern;
}

BitVec simulate(const Circuit& circuit, const BitVec& input) {
    if (input.width() != circuit.width()) {
        throw Error(ErrorCode::WidthMismatch, "circuit '" + circuit.name() + "' has " +
                                                  std::to_string(circuit.width()) + " lines, input has " +
                                                  std::to_string(input.width()));
    }
    const auto& lines = circuit.lines();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (is_constant(lines[i].input) && input[i] != (lines[i].input == InputRole::Constant1)) {
            throw Error(ErrorCode::ConstantViolation,
                        "line " + std::to_string(i) + " is declared constant " +
                            (lines[i].input == InputRole::Constant1 ? "1" : "0") + " but input " +
                            input.to_string() + " sets it otherwise");
        }
    }
    BitVec output(circuit.width(), circuit.propagate(input.value()));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].expected_output && output[i] != *lines[i].expected_output) {
            throw Error(ErrorCode::ConstantViolation,
                        "line " + std::to_string(i) + " should reconstruct constant " +
                            (*lines[i].expected_output ? "1" : "0") + " but output is " + output.to_string());
        }
    }
    return output;
}

Circuit invert_circuit(const Circuit& circuit) {
    std::vector<LineRole> lines;
    lines.reserve(circuit.width());
    for (const LineRole& role : circuit.lines()) {
        LineRole inv;
        if (role.expected_output) {
            inv.input = *role.expected_output ? InputRole::Constant1 : InputRole::Constant0;
        }
        if (is_constant(role.input)) {
            inv.output = OutputRole::Garbage;
            inv.expected_output = role.input == InputRole::Constant1;
        }
        lines.push_back(inv);
    }
    std::vector<GateInstance> cascade;
    cascade.reserve(circuit.cascade().size());
    for (auto it = circuit.cascade().rbegin(); it != circuit.cascade().rend(); ++it) {
        auto gate = is_self_inverse(*it->gate) ? it->gate : std::make_shared<const GateDef>(inverse(*it->gate));
        cascade.push_back({std::move(gate), it->line_map});
    }
    return Circuit(circuit.name(), circuit.width(), std::move(lines), std::move(cascade));
}

std::vector<std::uint32_t> permutation_table(const Circuit& circuit) {
    std::vector<std::uint32_t> table(std::size_t{1} << circuit.width());
    for_each_block(table.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t x = begin; x < end; ++x) {
            table[x] = circuit.propagate(static_cast<std::uint32_t>(x));
        }
    });
    return table;
}

FunctionTable truth_table(const Circuit& circuit) {
    const std::size_t free = circuit.free_inputs().size();
    if (free == 0) {
        throw Error(ErrorCode::InvalidArgument, "circuit '" + circuit.name() + "' has no free input lines");
    }
    std::vector<std::uint32_t> rows(std::size_t{1} << free);
    for_each_block(rows.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t x = begin; x < end; ++x) {
            rows[x] = circuit.propagate(circuit.expand_free_inputs(static_cast<std::uint32_t>(x)));
        }
    });
    return FunctionTable(free, circuit.width(), std::move(rows));
}

VerificationReport verify_reversible(const Circuit& circuit) {
    return verify_reversible(FunctionTable::from_permutation(circuit.width(), permutation_table(circuit)));
}

Circuit concatenate(const Circuit& first, const Circuit& second) {
    if (first.width() != second.width()) {
        throw Error(ErrorCode::WidthMismatch, "cannot concatenate circuits of width " +
                                                  std::to_string(first.width()) + " and " +
                                                  std::to_string(second.width()));
    }
    std::vector<LineRole> lines = first.lines();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        lines[i].output = second.lines()[i].output;
        lines[i].expected_output = second.lines()[i].expected_output;
    }
    std::vector<GateInstance> cascade = first.cascade();
    cascade.insert(cascade.end(), second.cascade().begin(), second.cascade().end());
    return Circuit(first.name(), first.width(), std::move(lines), std::move(cascade));
}

}  // namespace revlogic

namespace revlogic {

std::optional<FunctionTable> primary_function(const Circuit& circuit) {
    std::vector<std::size_t> outputs;
    for (std::size_t i = 0; i < circuit.width(); ++i) {
        if (circuit.lines()[i].output == OutputRole::Primary) outputs.push_back(i);
    }
    if (outputs.empty() || circuit.free_inputs().empty()) return std::nullopt;
    const FunctionTable full = truth_table(circuit);
    std::vector<std::uint32_t> rows(full.row_count());
    for (std::uint32_t x = 0; x < rows.size(); ++x) {
        std::uint32_t y = 0;
        for (std::size_t line : outputs) {
            y = (y << 1) | static_cast<std::uint32_t>(bit_at(full(x), circuit.width(), line));
        }
        rows[x] = y;
    }
    return FunctionTable(full.inputs(), outputs.size(), std::move(rows));
}

}  // namespace revlogic
