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

#include "revlogic/circuit.hpp"

#include <cstdint>
#include <string>

namespace revlogic {

struct MetricsReport {
    std::uint64_t quantum_cost = 0;
    std::size_t constant_inputs = 0;
    std::size_t garbage_outputs = 0;
    std::size_t gate_count = 0;
    std::size_t width = 0;

    friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Sum of the declared per-gate quantum costs over the cascade.
std::uint64_t quantum_cost(const Circuit& circuit);
std::size_t constant_inputs(const Circuit& circuit);
std::size_t garbage_outputs(const Circuit& circuit);

MetricsReport metrics(const Circuit& circuit);

std::string to_json(const MetricsReport& report);
std::string to_table(const MetricsReport& report);

}  // namespace revlogic
