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

#include "revlogic/revlogic.h"

#include "revlogic/circuit.hpp"
#include "revlogic/energy_model.hpp"
#include "revlogic/error.hpp"
#include "revlogic/metrics.hpp"
#include "revlogic/text_format.hpp"
#include "revlogic/waveform_sim.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct rl_library {
    revlogic::GateLibrary gates;
    std::vector<std::shared_ptr<const revlogic::GateDef>> snapshot;
};

struct rl_circuit {
    revlogic::Circuit circuit;
};

struct rl_table {
    revlogic::FunctionTable table;
};

struct rl_embedding {
    revlogic::Embedding embedding;
};

struct rl_transient {
    revlogic::TransientResult result;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string message) { g_last_error = std::move(message); }

template <typename Fn>
rl_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return RL_OK;
    } catch (const revlogic::Error& e) {
        set_error(e.what());
        return static_cast<rl_status>(e.code());
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return RL_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return RL_ERR_INTERNAL;
    }
}

void require(const void* ptr, const char* what) {
    if (ptr == nullptr) {
        throw revlogic::Error(revlogic::ErrorCode::InvalidArgument, std::string(what) + " is null");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

revlogic::PhysicalParams to_params(const rl_physical_params* p) {
    require(p, "params");
    revlogic::PhysicalParams out;
    out.boltzmann_k = p->boltzmann_k;
    out.temperature = p->temperature;
    out.capacitance = p->capacitance;
    out.resistance = p->resistance;
    out.vdd = p->vdd;
    out.ramp_time = p->ramp_time;
    return out;
}

revlogic::SupplyWaveform to_waveform(const rl_waveform* w) {
    require(w, "waveform");
    if (w->kind != RL_WAVEFORM_STEP && w->kind != RL_WAVEFORM_TRAPEZOID) {
        throw revlogic::Error(revlogic::ErrorCode::InvalidWaveform, "unknown waveform kind");
    }
    return {w->kind == RL_WAVEFORM_STEP ? revlogic::WaveformKind::Step : revlogic::WaveformKind::Trapezoid,
            w->rise_time, w->hold_time, w->fall_time, w->amplitude};
}

void fill(const revlogic::VerificationReport& report, std::size_t width, rl_verification* out) {
    out->reversible = report.reversible ? 1 : 0;
    out->width = width;
    out->witness_a = report.collision ? report.collision->first.value() : 0;
    out->witness_b = report.collision ? report.collision->second.value() : 0;
}

void fill(const revlogic::ErasureAccount& a, rl_erasure* out) {
    out->input_bits = a.input_bits;
    out->output_entropy_bits = a.output_entropy_bits;
    out->lost_bits = a.lost_bits;
    out->worst_case_lost_bits = a.worst_case_lost_bits;
    out->landauer_energy = a.landauer_energy;
}

const revlogic::FunctionTable& expect_table(const rl_table* t) {
    require(t, "table");
    return t->table;
}

}  // namespace

extern "C" {

const char* rl_status_name(rl_status status) {
    if (status == RL_OK) return "OK";
    if (status == RL_ERR_INTERNAL) return "Internal";
    return revlogic::to_string(static_cast<revlogic::ErrorCode>(status));
}

const char* rl_last_error(void) { return g_last_error.c_str(); }

void rl_string_free(char* str) { std::free(str); }

// ---- gate library ----------------------------------------------------------

rl_status rl_library_create(rl_library** out) {
    return guarded([&] {
        require(out, "out");
        auto* lib = new rl_library{};
        lib->snapshot = lib->gates.gates();
        *out = lib;
    });
}

void rl_library_destroy(rl_library* library) { delete library; }

rl_status rl_library_load_gates(rl_library* library, const char* text) {
    return guarded([&] {
        require(library, "library");
        require(text, "text");
        auto defs = revlogic::parse_gate_file(text);
        revlogic::GateLibrary staged = library->gates;
        for (auto& def : defs) staged.add(std::move(def));
        library->gates = std::move(staged);
        library->snapshot = library->gates.gates();
    });
}

rl_status rl_library_load_gate_file(rl_library* library, const char* path) {
    return guarded([&] {
        require(library, "library");
        require(path, "path");
        const std::string text = revlogic::read_file(path);
        try {
            auto defs = revlogic::parse_gate_file(text);
            revlogic::GateLibrary staged = library->gates;
            for (auto& def : defs) staged.add(std::move(def));
            library->gates = std::move(staged);
            library->snapshot = library->gates.gates();
        } catch (const revlogic::Error& e) {
            throw revlogic::Error(e.code(), std::string(path) + ": " + e.what());
        }
    });
}

size_t rl_library_size(const rl_library* library) { return library ? library->snapshot.size() : 0; }

rl_status rl_library_gate_info(const rl_library* library, size_t index, const char** name, size_t* width,
                               uint64_t* quantum_cost, int* self_inverse) {
    return guarded([&] {
        require(library, "library");
        if (index >= library->snapshot.size()) {
            throw revlogic::Error(revlogic::ErrorCode::InvalidArgument, "gate index out of range");
        }
        const auto& gate = *library->snapshot[index];
        if (name) *name = gate.name().c_str();
        if (width) *width = gate.width();
        if (quantum_cost) *quantum_cost = gate.quantum_cost();
        if (self_inverse) *self_inverse = revlogic::is_self_inverse(gate) ? 1 : 0;
    });
}

rl_status rl_library_apply(const rl_library* library, const char* gate_name, const char* input_bits,
                           char** output_bits) {
    return guarded([&] {
        require(library, "library");
        require(gate_name, "gate_name");
        require(input_bits, "input_bits");
        require(output_bits, "output_bits");
        auto gate = library->gates.find(gate_name);
        if (!gate) {
            throw revlogic::Error(revlogic::ErrorCode::UnknownGate, std::string("unknown gate '") + gate_name + "'");
        }
        *output_bits = dup_string(revlogic::apply(*gate, revlogic::BitVec::from_string(input_bits)).to_string());
    });
}

// ---- circuits --------------------------------------------------------------

rl_status rl_circuit_parse(const rl_library* library, const char* netlist, rl_circuit** out) {
    return guarded([&] {
        require(library, "library");
        require(netlist, "netlist");
        require(out, "out");
        *out = new rl_circuit{revlogic::parse_netlist(netlist, library->gates)};
    });
}

rl_status rl_circuit_load(const rl_library* library, const char* path, rl_circuit** out) {
    return guarded([&] {
        require(library, "library");
        require(path, "path");
        require(out, "out");
        const std::string text = revlogic::read_file(path);
        try {
            *out = new rl_circuit{revlogic::parse_netlist(text, library->gates)};
        } catch (const revlogic::Error& e) {
            throw revlogic::Error(e.code(), std::string(path) + ": " + e.what());
        }
    });
}

void rl_circuit_destroy(rl_circuit* circuit) { delete circuit; }

size_t rl_circuit_width(const rl_circuit* circuit) { return circuit ? circuit->circuit.width() : 0; }

rl_status rl_circuit_render(const rl_circuit* circuit, char** netlist) {
    return guarded([&] {
        require(circuit, "circuit");
        require(netlist, "netlist");
        *netlist = dup_string(revlogic::render_netlist(circuit->circuit));
    });
}

rl_status rl_circuit_simulate(const rl_circuit* circuit, const char* input_bits, char** output_bits) {
    return guarded([&] {
        require(circuit, "circuit");
        require(input_bits, "input_bits");
        require(output_bits, "output_bits");
        const auto input = revlogic::BitVec::from_string(input_bits);
        *output_bits = dup_string(revlogic::simulate(circuit->circuit, input).to_string());
    });
}

rl_status rl_circuit_invert(const rl_circuit* circuit, rl_circuit** out) {
    return guarded([&] {
        require(circuit, "circuit");
        require(out, "out");
        *out = new rl_circuit{revlogic::invert_circuit(circuit->circuit)};
    });
}

rl_status rl_circuit_truth_table(const rl_circuit* circuit, rl_table** out) {
    return guarded([&] {
        require(circuit, "circuit");
        require(out, "out");
        *out = new rl_table{revlogic::truth_table(circuit->circuit)};
    });
}

rl_status rl_circuit_verify(const rl_circuit* circuit, rl_verification* out) {
    return guarded([&] {
        require(circuit, "circuit");
        require(out, "out");
        fill(revlogic::verify_reversible(circuit->circuit), circuit->circuit.width(), out);
    });
}

rl_status rl_circuit_metrics(const rl_circuit* circuit, rl_metrics* out) {
    return guarded([&] {
        require(circuit, "circuit");
        require(out, "out");
        const auto m = revlogic::metrics(circuit->circuit);
        *out = {m.quantum_cost, m.constant_inputs, m.garbage_outputs, m.gate_count, m.width};
    });
}

rl_status rl_metrics_render(const rl_metrics* metrics, rl_format format, char** text) {
    return guarded([&] {
        require(metrics, "metrics");
        require(text, "text");
        const revlogic::MetricsReport m{metrics->quantum_cost, metrics->constant_inputs, metrics->garbage_outputs,
                                        metrics->gate_count, metrics->width};
        *text = dup_string(format == RL_FORMAT_JSON ? revlogic::to_json(m) + "\n" : revlogic::to_table(m));
    });
}

// ---- function tables and embedding -----------------------------------------

rl_status rl_table_create(size_t inputs, size_t outputs, const uint32_t* rows, rl_table** out) {
    return guarded([&] {
        require(rows, "rows");
        require(out, "out");
        if (inputs == 0 || inputs > revlogic::kMaxWidth) {
            throw revlogic::Error(revlogic::ErrorCode::WidthTooLarge, "table input count out of range");
        }
        const std::size_t count = std::size_t{1} << inputs;
        *out = new rl_table{revlogic::FunctionTable(inputs, outputs, std::vector<std::uint32_t>(rows, rows + count))};
    });
}

rl_status rl_table_parse(const char* text, rl_table** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new rl_table{revlogic::parse_function_table(text)};
    });
}

rl_status rl_table_load(const char* path, rl_table** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        const std::string text = revlogic::read_file(path);
        try {
            *out = new rl_table{revlogic::parse_function_table(text)};
        } catch (const revlogic::Error& e) {
            throw revlogic::Error(e.code(), std::string(path) + ": " + e.what());
        }
    });
}

void rl_table_destroy(rl_table* table) { delete table; }

size_t rl_table_inputs(const rl_table* table) { return table ? table->table.inputs() : 0; }

size_t rl_table_outputs(const rl_table* table) { return table ? table->table.outputs() : 0; }

uint32_t rl_table_row(const rl_table* table, uint32_t input) {
    if (!table || input >= table->table.row_count()) return 0;
    return table->table(input);
}

rl_status rl_table_render(const rl_table* table, char** text) {
    return guarded([&] {
        require(text, "text");
        *text = dup_string(revlogic::render_function_table(expect_table(table)));
    });
}

rl_status rl_table_verify(const rl_table* table, rl_verification* out) {
    return guarded([&] {
        require(out, "out");
        const auto& t = expect_table(table);
        fill(revlogic::verify_reversible(t), t.inputs(), out);
    });
}

rl_status rl_table_embed(const rl_table* table, rl_embedding** out) {
    return guarded([&] {
        require(out, "out");
        *out = new rl_embedding{revlogic::embed_irreversible(expect_table(table))};
    });
}

void rl_embedding_destroy(rl_embedding* embedding) { delete embedding; }

rl_status rl_embedding_info_get(const rl_embedding* embedding, rl_embedding_info* out) {
    return guarded([&] {
        require(embedding, "embedding");
        require(out, "out");
        const auto& e = embedding->embedding;
        *out = {e.function_inputs, e.function_outputs, e.ancilla, e.lines, e.constant_inputs, e.garbage_outputs};
    });
}

rl_status rl_embedding_table(const rl_embedding* embedding, rl_table** out) {
    return guarded([&] {
        require(embedding, "embedding");
        require(out, "out");
        *out = new rl_table{embedding->embedding.table};
    });
}

rl_status rl_embedding_render(const rl_embedding* embedding, rl_format format, char** text) {
    return guarded([&] {
        require(embedding, "embedding");
        require(text, "text");
        const auto& e = embedding->embedding;
        if (format != RL_FORMAT_JSON) {
            *text = dup_string(revlogic::render_embedding(e));
            return;
        }
        nlohmann::ordered_json j;
        j["function_inputs"] = e.function_inputs;
        j["function_outputs"] = e.function_outputs;
        j["lines"] = e.lines;
        j["ancilla"] = e.ancilla;
        j["constant_inputs"] = e.constant_inputs;
        j["garbage_outputs"] = e.garbage_outputs;
        auto& rows = j["table"] = nlohmann::ordered_json::array();
        for (std::uint32_t x = 0; x < e.table.row_count(); ++x) {
            rows.push_back({revlogic::pattern_string(x, e.lines), revlogic::pattern_string(e.table(x), e.lines)});
        }
        *text = dup_string(j.dump(2) + "\n");
    });
}

rl_status rl_embedding_circuit(const rl_embedding* embedding, const char* name, rl_circuit** out) {
    return guarded([&] {
        require(embedding, "embedding");
        require(out, "out");
        *out = new rl_circuit{embedding->embedding.to_circuit(name ? name : "embedding")};
    });
}

// ---- energy models -----------------------------------------------------------

void rl_physical_params_default(rl_physical_params* out) {
    if (!out) return;
    const revlogic::PhysicalParams p;
    *out = {p.boltzmann_k, p.temperature, p.capacitance, p.resistance, p.vdd, p.ramp_time};
}

rl_status rl_landauer_bound(double lost_bits, const rl_physical_params* params, double* joules) {
    return guarded([&] {
        require(joules, "joules");
        *joules = revlogic::landauer_bound(lost_bits, to_params(params));
    });
}

rl_status rl_table_erasure(const rl_table* table, const rl_physical_params* params, rl_erasure* out) {
    return guarded([&] {
        require(out, "out");
        fill(revlogic::erasure_of(expect_table(table), to_params(params)), out);
    });
}

rl_status rl_circuit_erasure(const rl_circuit* circuit, const rl_physical_params* params, rl_erasure* out) {
    return guarded([&] {
        require(circuit, "circuit");
        require(out, "out");
        fill(revlogic::erasure_of(circuit->circuit, to_params(params)), out);
    });
}

rl_status rl_conventional_switching_energy(const rl_physical_params* params, double* joules) {
    return guarded([&] {
        require(joules, "joules");
        *joules = revlogic::conventional_switching_energy(to_params(params));
    });
}

rl_status rl_adiabatic_energy(const rl_physical_params* params, double* joules) {
    return guarded([&] {
        require(joules, "joules");
        *joules = revlogic::adiabatic_energy(to_params(params));
    });
}

rl_status rl_computational_efficiency(double n_ops, double consumed_energy, double* ops_per_joule) {
    return guarded([&] {
        require(ops_per_joule, "ops_per_joule");
        *ops_per_joule = revlogic::computational_efficiency(n_ops, consumed_energy);
    });
}

rl_status rl_energy_report_compute(double lost_bits, const rl_physical_params* params, rl_energy_report* out) {
    return guarded([&] {
        require(out, "out");
        const auto r = revlogic::energy_report(lost_bits, to_params(params));
        *out = {r.lost_bits, r.landauer_J, r.conventional_J, r.adiabatic_J, r.crossover_T_s, r.conventional_cycle_J,
                r.adiabatic_cycle_J};
    });
}

rl_status rl_energy_report_render(const rl_energy_report* report, rl_format format, char** text) {
    return guarded([&] {
        require(report, "report");
        require(text, "text");
        const revlogic::EnergyReport r{report->lost_bits,      report->landauer_J,
                                       report->conventional_J, report->adiabatic_J,
                                       report->crossover_T_s,  report->conventional_cycle_J,
                                       report->adiabatic_cycle_J};
        *text = dup_string(format == RL_FORMAT_JSON ? revlogic::to_json(r) + "\n" : revlogic::to_table(r));
    });
}

// ---- RC transient simulation -------------------------------------------------

rl_status rl_default_step(const rl_physical_params* params, const rl_waveform* waveform, double* step) {
    return guarded([&] {
        require(step, "step");
        *step = revlogic::default_step(to_params(params), to_waveform(waveform));
    });
}

rl_status rl_simulate_transient(const rl_physical_params* params, const rl_waveform* waveform, double duration,
                                double step, rl_transient** out) {
    return guarded([&] {
        require(out, "out");
        *out = new rl_transient{
            revlogic::simulate_transient(to_params(params), to_waveform(waveform), duration, step)};
    });
}

void rl_transient_destroy(rl_transient* transient) { delete transient; }

rl_status rl_transient_summary_get(const rl_transient* transient, rl_transient_summary* out) {
    return guarded([&] {
        require(transient, "transient");
        require(out, "out");
        const auto& r = transient->result;
        *out = {r.dissipated_energy, r.source_energy, r.final_v_cap, r.times.size()};
    });
}

rl_status rl_transient_csv(const rl_transient* transient, char** csv) {
    return guarded([&] {
        require(transient, "transient");
        require(csv, "csv");
        *csv = dup_string(revlogic::trace_csv(transient->result));
    });
}

rl_status rl_ramp_sweep(const rl_physical_params* params, const double* ratios, size_t count, rl_sweep_row* rows) {
    return guarded([&] {
        require(ratios, "ratios");
        require(rows, "rows");
        const auto result = revlogic::ramp_sweep(to_params(params), std::span<const double>(ratios, count));
        for (std::size_t i = 0; i < result.size(); ++i) {
            rows[i] = {result[i].ratio, result[i].simulated_J, result[i].closed_form_J, result[i].conventional_J,
                       result[i].rel_err};
        }
    });
}

rl_status rl_sweep_csv(const rl_sweep_row* rows, size_t count, char** csv) {
    return guarded([&] {
        require(rows, "rows");
        require(csv, "csv");
        std::vector<revlogic::SweepRow> converted;
        converted.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            converted.push_back({rows[i].ratio, rows[i].simulated_J, rows[i].closed_form_J, rows[i].conventional_J,
                                 rows[i].rel_err});
        }
        *csv = dup_string(revlogic::sweep_csv(converted));
    });
}

rl_status rl_energy_recovery_cycle(const rl_physical_params* params, const rl_waveform* waveform,
                                   rl_cycle_report* out) {
    return guarded([&] {
        require(out, "out");
        const auto r = revlogic::energy_recovery_cycle(to_params(params), to_waveform(waveform));
        *out = {r.charge_J, r.discharge_J, r.total_J};
    });
}

}  // extern "C"
