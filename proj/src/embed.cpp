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
#include <numeric>

namespace revlogic {

std::vector<LineRole> Embedding::roles() const {
    std::vector<LineRole> out(lines);
    for (std::size_t i = 0; i < lines; ++i) {
        if (i >= function_inputs) out[i].input = InputRole::Constant0;
        if (i >= function_outputs) out[i].output = OutputRole::Garbage;
    }
    return out;
}

Circuit Embedding::to_circuit(std::string name) const {
    auto gate = std::make_shared<const GateDef>(
        GateDef::from_permutation(name + "_embed", lines,
                                  std::vector<std::uint32_t>(table.rows().begin(), table.rows().end()), 0));
    std::vector<std::size_t> line_map(lines);
    std::iota(line_map.begin(), line_map.end(), std::size_t{0});
    return Circuit(std::move(name), lines, roles(), {GateInstance{std::move(gate), std::move(line_map)}});
}

Embedding embed_irreversible(const FunctionTable& f) {
    const std::size_t n = f.inputs();
    const std::size_t m = f.outputs();

    std::vector<std::uint32_t> multiplicity(std::size_t{1} << m, 0);
    for (std::uint32_t y : f.rows()) ++multiplicity[y];
    const std::uint64_t worst = *std::max_element(multiplicity.begin(), multiplicity.end());

    // Each output value y needs |f^-1(y)| distinct fillers on the L - m extra lines.
    const std::size_t base = std::max(n, m);
    std::size_t lines = base;
    while ((std::uint64_t{1} << (lines - m)) < worst) ++lines;
    if (lines > kMaxWidth) {
        throw Error(ErrorCode::TooWide, "embedding needs " + std::to_string(lines) + " lines, limit is " +
                                            std::to_string(kMaxWidth));
    }

    const std::size_t size = std::size_t{1} << lines;
    constexpr std::uint32_t kUnset = ~std::uint32_t{0};
    std::vector<std::uint32_t> perm(size, kUnset);
    std::vector<bool> used(size, false);
    std::vector<std::uint32_t> next_filler(std::size_t{1} << m, 0);

    for (std::uint32_t x = 0; x < f.row_count(); ++x) {
        const std::uint32_t y = f(x);
        const std::uint32_t in = x << (lines - n);
        const std::uint32_t out = (y << (lines - m)) | next_filler[y]++;
        perm[in] = out;
        used[out] = true;
    }
    std::uint32_t free_out = 0;
    for (std::uint32_t in = 0; in < size; ++in) {
        if (perm[in] != kUnset) continue;
        while (used[free_out]) ++free_out;
        perm[in] = free_out;
        used[free_out] = true;
    }

    Embedding e{.function_inputs = n,
                .function_outputs = m,
                .ancilla = lines - base,
                .lines = lines,
                .constant_inputs = lines - n,
                .garbage_outputs = lines - m,
                .table = FunctionTable(lines, lines, std::move(perm))};
    return e;
}

}  // namespace revlogic
