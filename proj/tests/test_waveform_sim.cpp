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

#include "revlogic/error.hpp"
#include "revlogic/waveform_sim.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

using namespace revlogic;

namespace {

PhysicalParams desk() {
    PhysicalParams p;
    p.resistance = 1e3;
    p.capacitance = 1e-12;
    p.vdd = 1.0;
    return p;
}

/// Analytic dissipation of a linear ramp of length T into RC, followed by
/// full settling: (tau/T) C V^2 (1 - (tau/T)(1 - exp(-T/tau))).
double exact_ramp_dissipation(double tau, double ramp, double c, double v) {
    const double x = tau / ramp;
    return x * c * v * v * (1.0 - x * (1.0 - std::exp(-1.0 / x)));
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidArgument;
}

TransientResult step_run(const PhysicalParams& p) {
    const double rc = p.rc();
    return simulate_transient(p, SupplyWaveform::step(p.vdd, 20.0 * rc), 20.0 * rc, rc / 200.0);
}

}  // namespace

TEST(Waveform, Shape) {
    const auto w = SupplyWaveform::trapezoid(2.0, 1.0, 2.0, 4.0);
    EXPECT_EQ(w.voltage(-1.0), 0.0);
    EXPECT_DOUBLE_EQ(w.voltage(0.5), 1.0);
    EXPECT_DOUBLE_EQ(w.voltage(2.0), 2.0);
    EXPECT_DOUBLE_EQ(w.voltage(5.0), 1.0);
    EXPECT_EQ(w.voltage(7.5), 0.0);
    EXPECT_DOUBLE_EQ(SupplyWaveform::step(1.0, 1.0).voltage(0.0), 1.0);
}

TEST(Waveform, Invariants) {
    EXPECT_EQ(code_of([] { SupplyWaveform{WaveformKind::Step, 1.0, 0.0, 0.0, 1.0}.validate(); }),
              ErrorCode::InvalidWaveform);
    EXPECT_EQ(code_of([] { SupplyWaveform::trapezoid(1.0, 1.0, 0.0, 0.0).validate(); }),
              ErrorCode::InvalidWaveform);
    EXPECT_NO_THROW(SupplyWaveform::trapezoid(1.0, 1.0, 0.0, 1.0).validate());
}

TEST(Transient, StepDissipatesHalfCV2) {
    const PhysicalParams p = desk();
    const TransientResult r = step_run(p);
    EXPECT_NEAR(r.dissipated_energy, 0.5 * p.capacitance, 0.005 * 0.5 * p.capacitance);
    EXPECT_NEAR(r.final_v_cap, 1.0, 1e-6);
}

TEST(Transient, StepIsIndependentOfR) {
    PhysicalParams p = desk();
    const double base = step_run(p).dissipated_energy;
    p.resistance *= 10.0;
    EXPECT_NEAR(step_run(p).dissipated_energy, base, 0.005 * base);
}

TEST(Transient, SlowRampMatchesClosedForm) {
    const PhysicalParams p = desk();
    const double rc = p.rc();
    const auto w = SupplyWaveform::trapezoid(p.vdd, 100.0 * rc, kDefaultHoldRc * rc, 100.0 * rc);
    const TransientResult r = simulate_transient(p, w, w.charge_span(), default_step(p, w));
    PhysicalParams closed = p;
    closed.ramp_time = 100.0 * rc;
    EXPECT_NEAR(r.dissipated_energy, adiabatic_energy(closed), 0.03 * adiabatic_energy(closed));
    EXPECT_NEAR(r.dissipated_energy, exact_ramp_dissipation(rc, 100.0 * rc, p.capacitance, p.vdd), 1e-5 * 1e-14);
}

TEST(Transient, ZeroAmplitude) {
    PhysicalParams p = desk();
    p.vdd = 0.0;
    const TransientResult r = step_run(p);
    EXPECT_EQ(r.dissipated_energy, 0.0);
    for (double v : r.v_cap) EXPECT_EQ(v, 0.0);
}

TEST(Transient, TraceInvariants) {
    const PhysicalParams p = desk();
    const double rc = p.rc();
    const auto w = SupplyWaveform::trapezoid(p.vdd, 5.0 * rc, 2.0 * rc, 5.0 * rc);
    const TransientResult r = simulate_transient(p, w, w.total_span() + 5.0 * rc, default_step(p, w));
    ASSERT_EQ(r.times.size(), r.v_cap.size());
    for (std::size_t i = 1; i < r.times.size(); ++i) EXPECT_GT(r.times[i], r.times[i - 1]);
    for (double v : r.v_cap) {
        EXPECT_GE(v, -1e-9);
        EXPECT_LE(v, p.vdd + 1e-9);
    }
    EXPECT_GE(r.dissipated_energy, 0.0);
}

TEST(Transient, EnergyBalance) {
    const PhysicalParams p = desk();
    const double rc = p.rc();
    for (double ratio : {0.5, 3.0, 50.0}) {
        const auto w = SupplyWaveform::trapezoid(p.vdd, ratio * rc, 10.0 * rc, ratio * rc);
        const TransientResult r = simulate_transient(p, w, w.charge_span(), default_step(p, w));
        const double stored = 0.5 * p.capacitance * r.final_v_cap * r.final_v_cap;
        EXPECT_NEAR(r.source_energy, r.dissipated_energy + stored, 0.005 * r.source_energy) << ratio;
    }
    const TransientResult s = step_run(p);
    EXPECT_NEAR(s.source_energy, s.dissipated_energy + 0.5 * p.capacitance * s.final_v_cap * s.final_v_cap,
                0.005 * s.source_energy);
}

TEST(Transient, StepHalvingConverges) {
    const PhysicalParams p = desk();
    const double rc = p.rc();
    const auto w = SupplyWaveform::trapezoid(p.vdd, 2.0 * rc, 10.0 * rc, 2.0 * rc);
    const double h = default_step(p, w);
    const double coarse = simulate_transient(p, w, w.charge_span(), h).dissipated_energy;
    const double fine = simulate_transient(p, w, w.charge_span(), h / 2.0).dissipated_energy;
    EXPECT_LT(std::abs(coarse - fine) / fine, 1e-3);

    const double step_coarse = step_run(p).dissipated_energy;
    const double step_fine =
        simulate_transient(p, SupplyWaveform::step(p.vdd, 20.0 * rc), 20.0 * rc, rc / 400.0).dissipated_energy;
    EXPECT_LT(std::abs(step_coarse - step_fine) / step_fine, 1e-3);
}

TEST(Transient, Errors) {
    const PhysicalParams p = desk();
    const double rc = p.rc();
    const auto w = SupplyWaveform::trapezoid(p.vdd, 10.0 * rc, rc, 10.0 * rc);
    EXPECT_EQ(code_of([&] { simulate_transient(p, w, w.charge_span(), rc / 50.0); }), ErrorCode::StepTooLarge);
    EXPECT_EQ(code_of([&] { simulate_transient(p, w, 5.0 * rc, rc / 200.0); }), ErrorCode::DurationTooShort);
    EXPECT_EQ(code_of([&] { simulate_transient(p, w, w.charge_span(), 0.0); }), ErrorCode::InvalidArgument);
}

TEST(Transient, Deterministic) {
    const TransientResult a = step_run(desk());
    const TransientResult b = step_run(desk());
    EXPECT_EQ(a.dissipated_energy, b.dissipated_energy);
    EXPECT_EQ(a.v_cap, b.v_cap);
}

TEST(Sweep, DecreasingAndAccurate) {
    const PhysicalParams p = desk();
    const std::vector<double> ratios{1, 10, 100, 1000};
    const auto rows = ramp_sweep(p, ratios);
    ASSERT_EQ(rows.size(), 4u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].ratio, ratios[i]);
        EXPECT_DOUBLE_EQ(rows[i].conventional_J, 5e-13);
        EXPECT_NEAR(rows[i].simulated_J, exact_ramp_dissipation(p.rc(), ratios[i] * p.rc(), p.capacitance, p.vdd),
                    1e-5 * rows[i].simulated_J);
        if (i > 0) EXPECT_LT(rows[i].simulated_J, rows[i - 1].simulated_J);
    }
    EXPECT_DOUBLE_EQ(rows[2].closed_form_J, 1e-14);
    EXPECT_LT(rows[3].rel_err, 0.005);
    EXPECT_LT(rows[2].simulated_J, rows[2].conventional_J / 40.0);
}

TEST(Sweep, MonotoneOverFineGrid) {
    std::vector<double> ratios;
    for (double r = 0.25; r < 300.0; r *= 1.6) ratios.push_back(r);
    const auto rows = ramp_sweep(desk(), ratios);
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i].simulated_J, rows[i - 1].simulated_J);
}

TEST(Sweep, RejectsBadRatios) {
    EXPECT_EQ(code_of([] { ramp_sweep(desk(), std::vector<double>{}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { ramp_sweep(desk(), std::vector<double>{1.0, -2.0}); }), ErrorCode::InvalidArgument);
}

TEST(Sweep, CsvHeaderAndArity) {
    const auto rows = ramp_sweep(desk(), std::vector<double>{1, 10});
    std::istringstream csv(sweep_csv(rows));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "ratio,simulated_J,closed_form_J,conventional_J,rel_err");
    int count = 0;
    while (std::getline(csv, line)) {
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
        ++count;
    }
    EXPECT_EQ(count, 2);
}

TEST(Cycle, SymmetricRampsRecoverEnergy) {
    const PhysicalParams p = desk();
    const double rc = p.rc();
    const CycleReport r =
        energy_recovery_cycle(p, SupplyWaveform::trapezoid(p.vdd, 100.0 * rc, kDefaultHoldRc * rc, 100.0 * rc));
    EXPECT_NEAR(r.charge_J, r.discharge_J, 0.02 * r.charge_J);
    EXPECT_DOUBLE_EQ(r.total_J, r.charge_J + r.discharge_J);
    EXPECT_NEAR(r.total_J, 2.0 * 1e-14, 0.03 * 2e-14);

    const CycleReport slow =
        energy_recovery_cycle(p, SupplyWaveform::trapezoid(p.vdd, 1000.0 * rc, kDefaultHoldRc * rc, 1000.0 * rc));
    EXPECT_LT(slow.total_J, 0.003 * p.capacitance * p.vdd * p.vdd);
}

TEST(Cycle, RejectsStep) {
    EXPECT_EQ(code_of([] { energy_recovery_cycle(desk(), SupplyWaveform::step(1.0, 1e-9)); }),
              ErrorCode::InvalidWaveform);
}

TEST(Demonstration, StepAlwaysLosesRampLossVanishes) {
    const PhysicalParams p = desk();
    const double step = step_run(p).dissipated_energy;
    EXPECT_GT(step, 0.49 * p.capacitance);
    const auto rows = ramp_sweep(p, std::vector<double>{10, 100, 1000, 10000});
    EXPECT_LT(rows.back().simulated_J, 1e-4 * p.capacitance);
    for (const auto& row : rows) EXPECT_LT(row.simulated_J, step);
}

TEST(Trace, Csv) {
    const PhysicalParams p = desk();
    const double rc = p.rc();
    const TransientResult r = simulate_transient(p, SupplyWaveform::step(1.0, rc), rc, rc / 100.0);
    const std::string csv = trace_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,v_s,v_c,p_diss");
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), r.times.size() + 1);
}
