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

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace revlogic {

std::uint64_t quantum_cost(const Circuit& circuit) {
    std::uint64_t total = 0;
    for (const GateInstance& inst : circuit.cascade()) total += inst.gate->quantum_cost();
    return total;
}

std::size_t constant_inputs(const Circuit& circuit) {
    return static_cast<std::size_t>(std::count_if(circuit.lines().begin(), circuit.lines().end(),
                                                  [](const LineRole& r) { return is_constant(r.input); }));
}

std::size_t garbage_outputs(const Circuit& circuit) {
    return static_cast<std::size_t>(std::count_if(circuit.lines().begin(), circuit.lines().end(),
                                                  [](const LineRole& r) { return r.output == OutputRole::Garbage; }));
}

MetricsReport metrics(const Circuit& circuit) {
    return {quantum_cost(circuit), constant_inputs(circuit), garbage_outputs(circuit), circuit.cascade().size(),
            circuit.width()};
}

std::string to_json(const MetricsReport& report) {
    nlohmann::ordered_json j;
    j["quantum_cost"] = report.quantum_cost;
    j["constant_inputs"] = report.constant_inputs;
    j["garbage_outputs"] = report.garbage_outputs;
    j["gate_count"] = report.gate_count;
    j["width"] = report.width;
    return j.dump(2);
}

std::string to_table(const MetricsReport& report) {
    std::ostringstream out;
    out << "quantum cost (QC)       " << report.quantum_cost << '\n'
        << "constant inputs (CO)    " << report.constant_inputs << '\n'
        << "garbage outputs (GO)    " << report.garbage_outputs << '\n'
        << "gate count              " << report.gate_count << '\n'
        << "width                   " << report.width << '\n';
    return out.str();
}

}  // namespace revlogic
