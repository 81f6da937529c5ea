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

#include "revlogic/waveform_sim.hpp"

#include "revlogic/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <future>

namespace revlogic {
namespace {

struct State {
    double v_cap = 0.0;
    double dissipated = 0.0;
    double delivered = 0.0;
};

struct Derivative {
    double dv = 0.0;
    double dp = 0.0;
    double ds = 0.0;
};

/// Series R into C: i = (Vs - Vc) / R.
Derivative rate(double v_source, double v_cap, double r, double c) {
    const double i = (v_source - v_cap) / r;
    return {i / c, i * i * r, v_source * i};
}

/// Fixed-step RK4 over [t0, t1] with the step shrunk so the run ends exactly at t1.
TransientResult integrate(const PhysicalParams& params, const SupplyWaveform& waveform, double t0, double t1,
                          double v0, double max_step, bool record) {
    const double r = params.resistance;
    const double c = params.capacitance;
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil((t1 - t0) / max_step - 1e-9)));
    const double h = (t1 - t0) / static_cast<double>(steps);

    TransientResult out;
    auto sample = [&](double t, double v) {
        const double vs = waveform.voltage(t);
        out.times.push_back(t);
        out.v_source.push_back(vs);
        out.v_cap.push_back(v);
        out.p_diss.push_back((vs - v) * (vs - v) / r);
    };
    if (record) {
        out.times.reserve(steps + 1);
        out.v_source.reserve(steps + 1);
        out.v_cap.reserve(steps + 1);
        out.p_diss.reserve(steps + 1);
        sample(t0, v0);
    }

    State y{v0, 0.0, 0.0};
    for (std::size_t n = 0; n < steps; ++n) {
        const double t = t0 + static_cast<double>(n) * h;
        const double vs0 = waveform.voltage(t);
        const double vs_mid = waveform.voltage(t + 0.5 * h);
        const double vs1 = waveform.voltage(t + h);

        const Derivative k1 = rate(vs0, y.v_cap, r, c);
        const Derivative k2 = rate(vs_mid, y.v_cap + 0.5 * h * k1.dv, r, c);
        const Derivative k3 = rate(vs_mid, y.v_cap + 0.5 * h * k2.dv, r, c);
        const Derivative k4 = rate(vs1, y.v_cap + h * k3.dv, r, c);

        y.v_cap += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
        y.dissipated += h / 6.0 * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
        y.delivered += h / 6.0 * (k1.ds + 2.0 * k2.ds + 2.0 * k3.ds + k4.ds);
        if (record) sample(t0 + static_cast<double>(n + 1) * h, y.v_cap);
    }
    out.dissipated_energy = y.dissipated;
    out.source_energy = y.delivered;
    out.final_v_cap = y.v_cap;
    return out;
}

void check_step(const PhysicalParams& params, double step) {
    if (!(step > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "integration step must be positive");
    }
    if (step > params.rc() / 100.0) {
        throw Error(ErrorCode::StepTooLarge, "integration step exceeds RC/100");
    }
}

}  // namespace

SupplyWaveform SupplyWaveform::step(double amplitude, double hold_time) {
    return {WaveformKind::Step, 0.0, hold_time, 0.0, amplitude};
}

SupplyWaveform SupplyWaveform::trapezoid(double amplitude, double rise_time, double hold_time,
                                         double fall_time) {
    return {WaveformKind::Trapezoid, rise_time, hold_time, fall_time, amplitude};
}

void SupplyWaveform::validate() const {
    if (!(amplitude >= 0.0) || !(hold_time >= 0.0) || !(rise_time >= 0.0) || !(fall_time >= 0.0)) {
        throw Error(ErrorCode::InvalidWaveform, "waveform times and amplitude must be non-negative");
    }
    if (kind == WaveformKind::Step && (rise_time != 0.0 || fall_time != 0.0)) {
        throw Error(ErrorCode::InvalidWaveform, "a step waveform has zero rise and fall times");
    }
    if (kind == WaveformKind::Trapezoid && (rise_time <= 0.0 || fall_time <= 0.0)) {
        throw Error(ErrorCode::InvalidWaveform, "a trapezoid needs positive rise and fall times");
    }
}

double SupplyWaveform::voltage(double t) const noexcept {
    if (t < 0.0) return 0.0;
    if (t < rise_time) return amplitude * t / rise_time;
    if (t <= rise_time + hold_time) return amplitude;
    const double into_fall = t - rise_time - hold_time;
    if (into_fall < fall_time) return amplitude * (1.0 - into_fall / fall_time);
    return 0.0;
}

double default_step(const PhysicalParams& params, const SupplyWaveform& waveform) {
    double step = params.rc() / 200.0;
    if (waveform.kind == WaveformKind::Trapezoid) {
        step = std::min({step, waveform.rise_time / 2000.0, waveform.fall_time / 2000.0});
    }
    return step;
}

TransientResult simulate_transient(const PhysicalParams& params, const SupplyWaveform& waveform,
                                   double duration, double step) {
    params.validate();
    waveform.validate();
    check_step(params, step);
    if (!(duration > 0.0) || duration < waveform.charge_span()) {
        throw Error(ErrorCode::DurationTooShort, "duration must cover the rise and hold phases");
    }
    return integrate(params, waveform, 0.0, duration, 0.0, step, true);
}

std::vector<SweepRow> ramp_sweep(const PhysicalParams& params, std::span<const double> ratios) {
    params.validate();
    if (ratios.empty()) {
        throw Error(ErrorCode::InvalidArgument, "sweep needs at least one T/RC ratio");
    }
    for (double ratio : ratios) {
        if (!(ratio > 0.0) || !std::isfinite(ratio)) {
            throw Error(ErrorCode::InvalidArgument, "T/RC ratios must be positive");
        }
    }
    const double rc = params.rc();
    const double conventional = conventional_switching_energy(params);

    std::vector<std::future<SweepRow>> jobs;
    jobs.reserve(ratios.size());
    for (double ratio : ratios) {
        jobs.push_back(std::async(std::launch::async, [=, &params] {
            const double rise = ratio * rc;
            const auto waveform = SupplyWaveform::trapezoid(params.vdd, rise, kDefaultHoldRc * rc, rise);
            const TransientResult run = integrate(params, waveform, 0.0, waveform.charge_span(), 0.0,
                                                  default_step(params, waveform), false);
            PhysicalParams ramp = params;
            ramp.ramp_time = rise;
            SweepRow row;
            row.ratio = ratio;
            row.simulated_J = run.dissipated_energy;
            row.closed_form_J = adiabatic_energy(ramp);
            row.conventional_J = conventional;
            row.rel_err = row.closed_form_J > 0.0
                              ? std::abs(row.simulated_J - row.closed_form_J) / row.closed_form_J
                              : 0.0;
            return row;
        }));
    }
    std::vector<SweepRow> rows;
    rows.reserve(jobs.size());
    for (auto& job : jobs) rows.push_back(job.get());
    return rows;
}

CycleReport energy_recovery_cycle(const PhysicalParams& params, const SupplyWaveform& waveform) {
    params.validate();
    waveform.validate();
    if (waveform.kind != WaveformKind::Trapezoid) {
        throw Error(ErrorCode::InvalidWaveform, "energy recovery needs a trapezoidal supply");
    }
    const double step = default_step(params, waveform);
    const double split = waveform.charge_span();
    const double end = waveform.total_span() + kDefaultHoldRc * params.rc();
    const TransientResult charge = integrate(params, waveform, 0.0, split, 0.0, step, false);
    const TransientResult discharge = integrate(params, waveform, split, end, charge.final_v_cap, step, false);
    return {charge.dissipated_energy, discharge.dissipated_energy,
            charge.dissipated_energy + discharge.dissipated_energy};
}

std::string sweep_csv(std::span<const SweepRow> rows) {
    std::string out = "ratio,simulated_J,closed_form_J,conventional_J,rel_err\n";
    std::array<char, 160> buf{};
    for (const SweepRow& row : rows) {
        std::snprintf(buf.data(), buf.size(), "%.10g,%.10g,%.10g,%.10g,%.10g\n", row.ratio, row.simulated_J,
                      row.closed_form_J, row.conventional_J, row.rel_err);
        out += buf.data();
    }
    return out;
}

std::string trace_csv(const TransientResult& result) {
    std::string out = "t,v_s,v_c,p_diss\n";
    std::array<char, 160> buf{};
    for (std::size_t i = 0; i < result.times.size(); ++i) {
        std::snprintf(buf.data(), buf.size(), "%.10g,%.10g,%.10g,%.10g\n", result.times[i], result.v_source[i],
                      result.v_cap[i], result.p_diss[i]);
        out += buf.data();
    }
    return out;
}

}  // namespace revlogic
