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

#ifndef REVLOGIC_REVLOGIC_H
#define REVLOGIC_REVLOGIC_H

/*
 * C interface to the revlogic toolkit: reversible gate networks, circuit
 * metrics (quantum cost, constant inputs, garbage outputs) and switching
 * energy models.
 *
 * Every object is an opaque handle created by a rl_*_create / parse / load
 * call and released by the matching rl_*_destroy. Functions that can fail
 * return rl_status; on failure rl_last_error() describes the problem for the
 * calling thread. Strings returned through char** are heap allocated and
 * must be released with rl_string_free. Bit strings are written top line
 * first ("10" means line 0 = 1, line 1 = 0).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(REVLOGIC_BUILDING)
#    define RL_API __declspec(dllexport)
#  else
#    define RL_API __declspec(dllimport)
#  endif
#else
#  define RL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rl_status {
    RL_OK = 0,
    RL_ERR_INVALID_ARGUMENT = 1,
    RL_ERR_WIDTH_MISMATCH = 2,
    RL_ERR_DUPLICATE_OUTPUT = 3,
    RL_ERR_INCOMPLETE_MAPPING = 4,
    RL_ERR_CONSTANT_VIOLATION = 5,
    RL_ERR_WIDTH_TOO_LARGE = 6,
    RL_ERR_TOO_WIDE = 7,
    RL_ERR_NEGATIVE_BITS = 8,
    RL_ERR_NONPOSITIVE_T = 9,
    RL_ERR_NONPOSITIVE_ENERGY = 10,
    RL_ERR_STEP_TOO_LARGE = 11,
    RL_ERR_DURATION_TOO_SHORT = 12,
    RL_ERR_INVALID_WAVEFORM = 13,
    RL_ERR_SYNTAX = 14,
    RL_ERR_UNKNOWN_GATE = 15,
    RL_ERR_BAD_LINE_INDEX = 16,
    RL_ERR_DUPLICATE_LINE_IN_GATE = 17,
    RL_ERR_IO = 18,
    RL_ERR_INTERNAL = 99
} rl_status;

typedef enum rl_format { RL_FORMAT_TABLE = 0, RL_FORMAT_JSON = 1 } rl_format;

typedef struct rl_library rl_library;
typedef struct rl_circuit rl_circuit;
typedef struct rl_table rl_table;
typedef struct rl_embedding rl_embedding;
typedef struct rl_transient rl_transient;

RL_API const char* rl_status_name(rl_status status);
/* Message of the most recent failure on this thread; "" if none. */
RL_API const char* rl_last_error(void);
RL_API void rl_string_free(char* str);

/* ---- gate library ------------------------------------------------------ */

/* A new library holds the built-ins: not, feynman, toffoli, fredkin, peres. */
RL_API rl_status rl_library_create(rl_library** out);
RL_API void rl_library_destroy(rl_library* library);
/* Registers every gate block in gate-file text / in a gate file. */
RL_API rl_status rl_library_load_gates(rl_library* library, const char* text);
RL_API rl_status rl_library_load_gate_file(rl_library* library, const char* path);
RL_API size_t rl_library_size(const rl_library* library);
/* *name stays valid until the library is modified or destroyed. */
RL_API rl_status rl_library_gate_info(const rl_library* library, size_t index, const char** name,
                                      size_t* width, uint64_t* quantum_cost, int* self_inverse);
RL_API rl_status rl_library_apply(const rl_library* library, const char* gate_name, const char* input_bits,
                                  char** output_bits);

/* ---- circuits ---------------------------------------------------------- */

typedef struct rl_verification {
    int reversible;
    size_t width;
    /* Two inputs with the same output when reversible == 0. */
    uint32_t witness_a;
    uint32_t witness_b;
} rl_verification;

typedef struct rl_metrics {
    uint64_t quantum_cost;
    size_t constant_inputs;
    size_t garbage_outputs;
    size_t gate_count;
    size_t width;
} rl_metrics;

RL_API rl_status rl_circuit_parse(const rl_library* library, const char* netlist, rl_circuit** out);
RL_API rl_status rl_circuit_load(const rl_library* library, const char* path, rl_circuit** out);
RL_API void rl_circuit_destroy(rl_circuit* circuit);
RL_API size_t rl_circuit_width(const rl_circuit* circuit);
RL_API rl_status rl_circuit_render(const rl_circuit* circuit, char** netlist);
RL_API rl_status rl_circuit_simulate(const rl_circuit* circuit, const char* input_bits, char** output_bits);
RL_API rl_status rl_circuit_invert(const rl_circuit* circuit, rl_circuit** out);
/* Free input lines -> full-width output. */
RL_API rl_status rl_circuit_truth_table(const rl_circuit* circuit, rl_table** out);
RL_API rl_status rl_circuit_verify(const rl_circuit* circuit, rl_verification* out);
RL_API rl_status rl_circuit_metrics(const rl_circuit* circuit, rl_metrics* out);
RL_API rl_status rl_metrics_render(const rl_metrics* metrics, rl_format format, char** text);

/* ---- function tables and embedding ------------------------------------- */

typedef struct rl_embedding_info {
    size_t function_inputs;
    size_t function_outputs;
    size_t ancilla;
    size_t lines;
    size_t constant_inputs;
    size_t garbage_outputs;
} rl_embedding_info;

RL_API rl_status rl_table_create(size_t inputs, size_t outputs, const uint32_t* rows, rl_table** out);
RL_API rl_status rl_table_parse(const char* text, rl_table** out);
RL_API rl_status rl_table_load(const char* path, rl_table** out);
RL_API void rl_table_destroy(rl_table* table);
RL_API size_t rl_table_inputs(const rl_table* table);
RL_API size_t rl_table_outputs(const rl_table* table);
/* Output pattern for input pattern `input` (MSB = first line). */
RL_API uint32_t rl_table_row(const rl_table* table, uint32_t input);
RL_API rl_status rl_table_render(const rl_table* table, char** text);
RL_API rl_status rl_table_verify(const rl_table* table, rl_verification* out);

RL_API rl_status rl_table_embed(const rl_table* table, rl_embedding** out);
RL_API void rl_embedding_destroy(rl_embedding* embedding);
RL_API rl_status rl_embedding_info_get(const rl_embedding* embedding, rl_embedding_info* out);
/* Copy of the reversible lines -> lines table. */
RL_API rl_status rl_embedding_table(const rl_embedding* embedding, rl_table** out);
RL_API rl_status rl_embedding_render(const rl_embedding* embedding, rl_format format, char** text);
RL_API rl_status rl_embedding_circuit(const rl_embedding* embedding, const char* name, rl_circuit** out);

/* ---- energy models ----------------------------------------------------- */

typedef struct rl_physical_params {
    double boltzmann_k; /* J/K */
    double temperature; /* K */
    double capacitance; /* F */
    double resistance;  /* ohm */
    double vdd;         /* V */
    double ramp_time;   /* s */
} rl_physical_params;

typedef struct rl_erasure {
    size_t input_bits;
    double output_entropy_bits;
    double lost_bits;
    double worst_case_lost_bits;
    double landauer_energy;
} rl_erasure;

typedef struct rl_energy_report {
    double lost_bits;
    double landauer_J;
    double conventional_J;
    double adiabatic_J;
    double crossover_T_s;
    double conventional_cycle_J;
    double adiabatic_cycle_J;
} rl_energy_report;

/* k = 1.3807e-23 J/K, 300 K, 1 pF, 1 kOhm, 1 V, 100 ns ramp. */
RL_API void rl_physical_params_default(rl_physical_params* out);
RL_API rl_status rl_landauer_bound(double lost_bits, const rl_physical_params* params, double* joules);
RL_API rl_status rl_table_erasure(const rl_table* table, const rl_physical_params* params, rl_erasure* out);
/* Garbage outputs count as discarded information. */
RL_API rl_status rl_circuit_erasure(const rl_circuit* circuit, const rl_physical_params* params, rl_erasure* out);
RL_API rl_status rl_conventional_switching_energy(const rl_physical_params* params, double* joules);
RL_API rl_status rl_adiabatic_energy(const rl_physical_params* params, double* joules);
RL_API rl_status rl_computational_efficiency(double n_ops, double consumed_energy, double* ops_per_joule);
RL_API rl_status rl_energy_report_compute(double lost_bits, const rl_physical_params* params,
                                          rl_energy_report* out);
RL_API rl_status rl_energy_report_render(const rl_energy_report* report, rl_format format, char** text);

/* ---- RC transient simulation ------------------------------------------- */

typedef enum rl_waveform_kind { RL_WAVEFORM_STEP = 0, RL_WAVEFORM_TRAPEZOID = 1 } rl_waveform_kind;

typedef struct rl_waveform {
    rl_waveform_kind kind;
    double rise_time;
    double hold_time;
    double fall_time;
    double amplitude;
} rl_waveform;

typedef struct rl_transient_summary {
    double dissipated_energy;
    double source_energy;
    double final_v_cap;
    size_t samples;
} rl_transient_summary;

typedef struct rl_sweep_row {
    double ratio;
    double simulated_J;
    double closed_form_J;
    double conventional_J;
    double rel_err;
} rl_sweep_row;

typedef struct rl_cycle_report {
    double charge_J;
    double discharge_J;
    double total_J;
} rl_cycle_report;

RL_API rl_status rl_default_step(const rl_physical_params* params, const rl_waveform* waveform, double* step);
RL_API rl_status rl_simulate_transient(const rl_physical_params* params, const rl_waveform* waveform,
                                       double duration, double step, rl_transient** out);
RL_API void rl_transient_destroy(rl_transient* transient);
RL_API rl_status rl_transient_summary_get(const rl_transient* transient, rl_transient_summary* out);
/* CSV with header t,v_s,v_c,p_diss. */
RL_API rl_status rl_transient_csv(const rl_transient* transient, char** csv);
/* `rows` must have room for `count` entries. */
RL_API rl_status rl_ramp_sweep(const rl_physical_params* params, const double* ratios, size_t count,
                               rl_sweep_row* rows);
/* CSV with header ratio,simulated_J,closed_form_J,conventional_J,rel_err. */
RL_API rl_status rl_sweep_csv(const rl_sweep_row* rows, size_t count, char** csv);
RL_API rl_status rl_energy_recovery_cycle(const rl_physical_params* params, const rl_waveform* waveform,
                                          rl_cycle_report* out);

#ifdef __cplusplus
}
#endif

#endif /* REVLOGIC_REVLOGIC_H */
