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

#include "revlogic/energy_model.hpp"

#include <span>
#include <string>
#include <vector>

namespace revlogic {

enum class WaveformKind { Step, Trapezoid };

/// Supply driving the RC stage: 0 -> amplitude over rise_time, held for
/// hold_time, back to 0 over fall_time, then 0. A step has zero rise and
/// fall times.
struct SupplyWaveform {
    WaveformKind kind = WaveformKind::Step;
    double rise_time = 0.0;
    double hold_time = 0.0;
    double fall_time = 0.0;
    double amplitude = 1.0;

    static SupplyWaveform step(double amplitude, double hold_time);
    static SupplyWaveform trapezoid(double amplitude, double rise_time, double hold_time,
                                    double fall_time);

    /// Throws InvalidWaveform if the kind/time invariants do not hold.
    void validate() const;

    /// Supply voltage at time t (seconds).
    double voltage(double t) const noexcept;

    /// End of the charging phase (rise + hold).
    double charge_span() const noexcept { return rise_time + hold_time; }
    double total_span() const noexcept { return rise_time + hold_time + fall_time; }
};

struct TransientResult {
    std::vector<double> times;
    std::vector<double> v_source;
    std::vector<double> v_cap;
    /// Instantaneous resistor power (V_s - V_c)^2 / R at each sample.
    std::vector<double> p_diss;
    double dissipated_energy = 0.0;  // J
    double source_energy = 0.0;      // J delivered by the supply
    double final_v_cap = 0.0;        // V
};

/// Settling time appended after a ramp before energies are read: 10 RC.
inline constexpr double kDefaultHoldRc = 10.0;

/// min(RC/200, rise_time/2000), the rise term only for a trapezoid.
double default_step(const PhysicalParams& params, const SupplyWaveform& waveform);

/// Integrates dVc/dt = (Vs(t) - Vc) / RC from Vc(0) = 0 over [0, duration]
/// with fixed-step classical RK4. Dissipated and source energies are
/// integrated as extra state components of the same scheme.
///
/// Requires 0 < step <= RC/100 (StepTooLarge otherwise) and
/// duration >= waveform.charge_span() (DurationTooShort). The run covers the
/// fall phase only when duration extends past the charging span.
TransientResult simulate_transient(const PhysicalParams& params, const SupplyWaveform& waveform,
                                   double duration, double step);

struct SweepRow {
    double ratio = 0.0;
    double simulated_J = 0.0;
    double closed_form_J = 0.0;
    double conventional_J = 0.0;
    double rel_err = 0.0;
};

/// One charging transient per T/RC ratio (rise = ratio * RC, hold 10 RC),
/// compared with the closed-form adiabatic and conventional losses. Ratios
/// run concurrently; rows follow the input order.
std::vector<SweepRow> ramp_sweep(const PhysicalParams& params, std::span<const double> ratios);

struct CycleReport {
    double charge_J = 0.0;
    double discharge_J = 0.0;
    double total_J = 0.0;
};

/// Charges through rise + hold, then discharges through the fall ramp plus
/// a 10 RC settle, through the same R. Trapezoid waveforms only.
CycleReport energy_recovery_cycle(const PhysicalParams& params, const SupplyWaveform& waveform);

std::string sweep_csv(std::span<const SweepRow> rows);
std::string trace_csv(const TransientResult& result);

}  // namespace revlogic
