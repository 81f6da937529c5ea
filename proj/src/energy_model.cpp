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

#include "revlogic/energy_model.hpp"

#include "revlogic/error.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace revlogic {

void PhysicalParams::validate() const {
    auto positive = [](double v, const char* what) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
        }
    };
    positive(boltzmann_k, "Boltzmann constant");
    positive(temperature, "temperature");
    positive(capacitance, "capacitance");
    positive(resistance, "resistance");
    if (!(vdd >= 0.0) || !std::isfinite(vdd)) {
        throw Error(ErrorCode::InvalidArgument, "supply voltage must be non-negative");
    }
}

double landauer_bound(double lost_bits, const PhysicalParams& params) {
    params.validate();
    if (lost_bits < 0.0 || std::isnan(lost_bits)) {
        throw Error(ErrorCode::NegativeBits, "lost bits must be non-negative");
    }
    return lost_bits * params.boltzmann_k * params.temperature * std::numbers::ln2;
}

double output_entropy_bits(const FunctionTable& f) {
    std::vector<std::uint64_t> counts(std::size_t{1} << f.outputs(), 0);
    for (std::uint32_t y : f.rows()) ++counts[y];
    const double total = static_cast<double>(f.row_count());
    double h = 0.0;
    for (std::uint64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / total;
        h -= p * std::log2(p);
    }
    return h;
}

ErasureAccount erasure_of(const FunctionTable& f, const PhysicalParams& params) {
    ErasureAccount account;
    account.input_bits = f.inputs();
    account.output_entropy_bits = output_entropy_bits(f);
    const double n = static_cast<double>(f.inputs());
    // Rounding in the entropy sum can leave a bijection a hair above zero.
    account.lost_bits = std::max(0.0, n - account.output_entropy_bits);
    if (account.lost_bits < 1e-12) account.lost_bits = 0.0;

    std::vector<bool> hit(std::size_t{1} << f.outputs(), false);
    std::size_t image = 0;
    for (std::uint32_t y : f.rows()) {
        if (!hit[y]) {
            hit[y] = true;
            ++image;
        }
    }
    account.worst_case_lost_bits = n - std::log2(static_cast<double>(image));
    account.landauer_energy = landauer_bound(account.lost_bits, params);
    return account;
}

double conventional_switching_energy(const PhysicalParams& params) {
    params.validate();
    return 0.5 * params.capacitance * params.vdd * params.vdd;
}

double adiabatic_energy(const PhysicalParams& params) {
    params.validate();
    if (!(params.ramp_time > 0.0)) {
        throw Error(ErrorCode::NonpositiveT, "ramp time must be positive");
    }
    return params.rc() / params.ramp_time * params.capacitance * params.vdd * params.vdd;
}

double crossover_ramp_time(const PhysicalParams& params) {
    params.validate();
    return 2.0 * params.rc();
}

double computational_efficiency(double n_ops, double consumed_energy) {
    if (!(consumed_energy > 0.0)) {
        throw Error(ErrorCode::NonpositiveEnergy, "consumed energy must be positive");
    }
    if (n_ops < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "operation count must be non-negative");
    }
    return n_ops / consumed_energy;
}

EnergyReport energy_report(double lost_bits, const PhysicalParams& params) {
    EnergyReport r;
    r.lost_bits = lost_bits;
    r.landauer_J = landauer_bound(lost_bits, params);
    r.conventional_J = conventional_switching_energy(params);
    r.adiabatic_J = adiabatic_energy(params);
    r.crossover_T_s = crossover_ramp_time(params);
    r.conventional_cycle_J = 2.0 * r.conventional_J;
    r.adiabatic_cycle_J = 2.0 * r.adiabatic_J;
    return r;
}

std::string to_json(const EnergyReport& report) {
    nlohmann::ordered_json j;
    j["lost_bits"] = report.lost_bits;
    j["landauer_J"] = report.landauer_J;
    j["conventional_J"] = report.conventional_J;
    j["adiabatic_J"] = report.adiabatic_J;
    j["crossover_T_s"] = report.crossover_T_s;
    j["conventional_cycle_J"] = report.conventional_cycle_J;
    j["adiabatic_cycle_J"] = report.adiabatic_cycle_J;
    return j.dump(2);
}

std::string to_table(const EnergyReport& report) {
    std::ostringstream out;
    out.precision(6);
    out << "lost bits                    " << report.lost_bits << '\n'
        << "Landauer bound (J)           " << report.landauer_J << '\n'
        << "conventional, per edge (J)   " << report.conventional_J << '\n'
        << "adiabatic, per edge (J)      " << report.adiabatic_J << '\n'
        << "crossover ramp time (s)      " << report.crossover_T_s << '\n'
        << "conventional, per cycle (J)  " << report.conventional_cycle_J << '\n'
        << "adiabatic, per cycle (J)     " << report.adiabatic_cycle_J << '\n';
    return out.str();
}

}  // namespace revlogic

namespace revlogic {

ErasureAccount erasure_of(const Circuit& circuit, const PhysicalParams& params) {
    if (auto f = primary_function(circuit)) {
        return erasure_of(*f, params);
    }
    ErasureAccount account;
    account.input_bits = circuit.free_inputs().size();
    account.lost_bits = static_cast<double>(account.input_bits);
    account.worst_case_lost_bits = account.lost_bits;
    account.landauer_energy = landauer_bound(account.lost_bits, params);
    return account;
}

}  // namespace revlogic
