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
#include "revlogic/function_table.hpp"

#include <string>

namespace revlogic {

/// Boltzmann constant in J/K.
inline constexpr double kBoltzmann = 1.3807e-23;

/// Lumped physical parameters of one switching stage, SI units.
struct PhysicalParams {
    double boltzmann_k = kBoltzmann;
    double temperature = 300.0;   // K
    double capacitance = 1e-12;   // F
    double resistance = 1e3;      // ohm
    double vdd = 1.0;             // V
    double ramp_time = 1e-7;      // s, charging time of the adiabatic ramp

    double rc() const noexcept { return resistance * capacitance; }

    /// Throws InvalidArgument unless k, temperature, C and R are positive
    /// and vdd is non-negative. A zero supply is allowed (no charge moves).
    /// ramp_time is checked by the operations that use it.
    void validate() const;
};

struct ErasureAccount {
    std::size_t input_bits = 0;
    double output_entropy_bits = 0.0;
    /// n - H(output) under uniformly distributed inputs.
    double lost_bits = 0.0;
    /// n - log2 |image(f)|, the loss counted by distinguishable outputs.
    /// Never exceeds lost_bits; the two agree when every output value has
    /// the same number of preimages.
    double worst_case_lost_bits = 0.0;
    double landauer_energy = 0.0;  // J
};

/// lost_bits * k * T * ln 2. Throws NegativeBits for lost_bits < 0.
double landauer_bound(double lost_bits, const PhysicalParams& params);

ErasureAccount erasure_of(const FunctionTable& f, const PhysicalParams& params);

/// Erasure of the circuit's primary function: garbage outputs are treated as
/// discarded. A circuit without primary outputs loses every free input bit.
ErasureAccount erasure_of(const Circuit& circuit, const PhysicalParams& params);

/// Shannon entropy (bits) of the output distribution of f under uniform inputs.
double output_entropy_bits(const FunctionTable& f);

/// 1/2 C Vdd^2 lost per transition of a conventionally switched load.
double conventional_switching_energy(const PhysicalParams& params);

/// (RC / T) C Vdd^2 per transition for a ramp of duration T = ramp_time.
/// Throws NonpositiveT.
double adiabatic_energy(const PhysicalParams& params);

/// Ramp time at which the adiabatic and conventional losses are equal: 2RC.
double crossover_ramp_time(const PhysicalParams& params);

/// Operations per joule. Throws NonpositiveEnergy for consumed_energy <= 0.
double computational_efficiency(double n_ops, double consumed_energy);

/// Combined closed-form figures for one function or circuit. The *_cycle_J
/// values cover a full charge + discharge cycle (twice the per-transition value).
struct EnergyReport {
    double lost_bits = 0.0;
    double landauer_J = 0.0;
    double conventional_J = 0.0;
    double adiabatic_J = 0.0;
    double crossover_T_s = 0.0;
    double conventional_cycle_J = 0.0;
    double adiabatic_cycle_J = 0.0;
};

EnergyReport energy_report(double lost_bits, const PhysicalParams& params);

std::string to_json(const EnergyReport& report);
std::string to_table(const EnergyReport& report);

}  // namespace revlogic
