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

// Command-line front end. Talks to the toolkit exclusively through the C API.

#include "revlogic/revlogic.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotReversible = 2;

struct Failure {
    std::string message;
};

void check(rl_status status, const std::string& context = {}) {
    if (status != RL_OK) {
        std::string msg = rl_last_error();
        if (!context.empty()) msg = context + ": " + msg;
        throw Failure{msg};
    }
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
    void operator()(T* p) const { Destroy(p); }
};

using Library = std::unique_ptr<rl_library, Deleter<rl_library, rl_library_destroy>>;
using Circuit = std::unique_ptr<rl_circuit, Deleter<rl_circuit, rl_circuit_destroy>>;
using Table = std::unique_ptr<rl_table, Deleter<rl_table, rl_table_destroy>>;
using Embedding = std::unique_ptr<rl_embedding, Deleter<rl_embedding, rl_embedding_destroy>>;
using Transient = std::unique_ptr<rl_transient, Deleter<rl_transient, rl_transient_destroy>>;

std::string take(char* s) {
    std::string out = s ? s : "";
    rl_string_free(s);
    return out;
}

enum class Format { Table, Json, Csv };

struct Options {
    std::string input_path;
    std::vector<std::string> gate_paths;
    Format format = Format::Table;
    std::string input_pattern;
    std::string output_path;
    std::string trace_prefix;
    std::vector<double> ratios;
    rl_physical_params params{};
};

Library load_library(const Options& opt) {
    rl_library* raw = nullptr;
    check(rl_library_create(&raw));
    Library lib(raw);
    for (const auto& path : opt.gate_paths) {
        check(rl_library_load_gate_file(lib.get(), path.c_str()));
    }
    return lib;
}

Circuit load_circuit(const rl_library* lib, const std::string& path) {
    rl_circuit* raw = nullptr;
    check(rl_circuit_load(lib, path.c_str(), &raw));
    return Circuit(raw);
}

Table load_table(const std::string& path) {
    rl_table* raw = nullptr;
    check(rl_table_load(path.c_str(), &raw));
    return Table(raw);
}

/// First keyword of a netlist or function-table file.
std::string sniff(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{"cannot open '" + path + "'"};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string word;
        if (tokens >> word) return word;
    }
    return {};
}

std::string bits(std::uint32_t pattern, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if ((pattern >> (width - 1 - i)) & 1U) out[i] = '1';
    }
    return out;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output_path);
    if (!(out << text)) throw Failure{"cannot write '" + opt.output_path + "'"};
}

rl_format report_format(const Options& opt) { return opt.format == Format::Json ? RL_FORMAT_JSON : RL_FORMAT_TABLE; }

int cmd_gates(const Options& opt) {
    auto lib = load_library(opt);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    std::ostringstream text;
    if (opt.format == Format::Csv) text << "name,width,quantum_cost,self_inverse\n";
    for (std::size_t i = 0; i < rl_library_size(lib.get()); ++i) {
        const char* name = nullptr;
        std::size_t width = 0;
        std::uint64_t cost = 0;
        int self_inverse = 0;
        check(rl_library_gate_info(lib.get(), i, &name, &width, &cost, &self_inverse));
        list.push_back({{"name", name}, {"width", width}, {"quantum_cost", cost}, {"self_inverse", self_inverse != 0}});
        if (opt.format == Format::Csv) {
            text << name << ',' << width << ',' << cost << ',' << (self_inverse ? "true" : "false") << '\n';
        } else {
            char row[128];
            std::snprintf(row, sizeof row, "%-12s width %-2zu  QC %-4llu%s\n", name, width,
                          static_cast<unsigned long long>(cost), self_inverse ? "  self-inverse" : "");
            text << row;
        }
    }
    emit(opt, opt.format == Format::Json ? list.dump(2) + "\n" : text.str());
    return kExitOk;
}

int cmd_simulate(const Options& opt) {
    auto lib = load_library(opt);
    auto circuit = load_circuit(lib.get(), opt.input_path);
    char* raw = nullptr;
    check(rl_circuit_simulate(circuit.get(), opt.input_pattern.c_str(), &raw), opt.input_path);
    const std::string output = take(raw);
    if (opt.format == Format::Json) {
        emit(opt, nlohmann::ordered_json{{"input", opt.input_pattern}, {"output", output}}.dump(2) + "\n");
    } else {
        emit(opt, output + "\n");
    }
    return kExitOk;
}

int cmd_table(const Options& opt) {
    auto lib = load_library(opt);
    auto circuit = load_circuit(lib.get(), opt.input_path);
    rl_table* raw = nullptr;
    check(rl_circuit_truth_table(circuit.get(), &raw), opt.input_path);
    Table table(raw);
    const std::size_t n = rl_table_inputs(table.get());
    const std::size_t m = rl_table_outputs(table.get());
    switch (opt.format) {
        case Format::Table: {
            char* text = nullptr;
            check(rl_table_render(table.get(), &text));
            emit(opt, take(text));
            break;
        }
        case Format::Csv: {
            std::string out = "input,output\n";
            for (std::uint32_t x = 0; x < (1U << n); ++x) {
                out += bits(x, n) + "," + bits(rl_table_row(table.get(), x), m) + "\n";
            }
            emit(opt, out);
            break;
        }
        case Format::Json: {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (std::uint32_t x = 0; x < (1U << n); ++x) {
                rows.push_back({bits(x, n), bits(rl_table_row(table.get(), x), m)});
            }
            emit(opt, nlohmann::ordered_json{{"inputs", n}, {"outputs", m}, {"rows", rows}}.dump(2) + "\n");
            break;
        }
    }
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    rl_verification report{};
    if (sniff(opt.input_path) == "table") {
        auto table = load_table(opt.input_path);
        check(rl_table_verify(table.get(), &report), opt.input_path);
    } else {
        auto lib = load_library(opt);
        auto circuit = load_circuit(lib.get(), opt.input_path);
        check(rl_circuit_verify(circuit.get(), &report), opt.input_path);
    }
    const std::string a = bits(report.witness_a, report.width);
    const std::string b = bits(report.witness_b, report.width);
    if (opt.format == Format::Json) {
        nlohmann::ordered_json j{{"reversible", report.reversible != 0}};
        j["witness"] = report.reversible ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json{a, b};
        emit(opt, j.dump(2) + "\n");
    } else if (report.reversible) {
        emit(opt, "reversible\n");
    } else {
        emit(opt, "not reversible: inputs " + a + " and " + b + " produce the same output\n");
    }
    return report.reversible ? kExitOk : kExitNotReversible;
}

int cmd_invert(const Options& opt) {
    auto lib = load_library(opt);
    auto circuit = load_circuit(lib.get(), opt.input_path);
    rl_circuit* raw = nullptr;
    check(rl_circuit_invert(circuit.get(), &raw), opt.input_path);
    Circuit inverted(raw);
    char* text = nullptr;
    check(rl_circuit_render(inverted.get(), &text));
    emit(opt, take(text));
    return kExitOk;
}

int cmd_metrics(const Options& opt) {
    auto lib = load_library(opt);
    auto circuit = load_circuit(lib.get(), opt.input_path);
    rl_metrics m{};
    check(rl_circuit_metrics(circuit.get(), &m), opt.input_path);
    char* text = nullptr;
    check(rl_metrics_render(&m, report_format(opt), &text));
    emit(opt, take(text));
    return kExitOk;
}

int cmd_energy(const Options& opt) {
    rl_erasure erasure{};
    if (opt.input_path.empty()) {
        erasure.lost_bits = 0.0;
    } else if (sniff(opt.input_path) == "table") {
        auto table = load_table(opt.input_path);
        check(rl_table_erasure(table.get(), &opt.params, &erasure), opt.input_path);
    } else {
        auto lib = load_library(opt);
        auto circuit = load_circuit(lib.get(), opt.input_path);
        check(rl_circuit_erasure(circuit.get(), &opt.params, &erasure), opt.input_path);
    }
    rl_energy_report report{};
    check(rl_energy_report_compute(erasure.lost_bits, &opt.params, &report));
    char* text = nullptr;
    check(rl_energy_report_render(&report, report_format(opt), &text));
    emit(opt, take(text));
    return kExitOk;
}

int cmd_sweep(const Options& opt) {
    std::vector<rl_sweep_row> rows(opt.ratios.size());
    check(rl_ramp_sweep(&opt.params, opt.ratios.data(), opt.ratios.size(), rows.data()));
    if (opt.format == Format::Json) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            list.push_back({{"ratio", r.ratio},
                            {"simulated_J", r.simulated_J},
                            {"closed_form_J", r.closed_form_J},
                            {"conventional_J", r.conventional_J},
                            {"rel_err", r.rel_err}});
        }
        emit(opt, list.dump(2) + "\n");
    } else {
        char* csv = nullptr;
        check(rl_sweep_csv(rows.data(), rows.size(), &csv));
        emit(opt, take(csv));
    }
    if (!opt.trace_prefix.empty()) {
        const double rc = opt.params.resistance * opt.params.capacitance;
        for (double ratio : opt.ratios) {
            const rl_waveform w{RL_WAVEFORM_TRAPEZOID, ratio * rc, 10.0 * rc, ratio * rc, opt.params.vdd};
            double step = 0.0;
            check(rl_default_step(&opt.params, &w, &step));
            rl_transient* raw = nullptr;
            check(rl_simulate_transient(&opt.params, &w, w.rise_time + w.hold_time, step, &raw));
            Transient run(raw);
            char* csv = nullptr;
            check(rl_transient_csv(run.get(), &csv));
            std::ostringstream name;
            name << opt.trace_prefix << "_" << ratio << ".csv";
            std::ofstream out(name.str());
            if (!(out << take(csv))) throw Failure{"cannot write '" + name.str() + "'"};
        }
    }
    return kExitOk;
}

int cmd_embed(const Options& opt) {
    auto table = load_table(opt.input_path);
    rl_embedding* raw = nullptr;
    check(rl_table_embed(table.get(), &raw), opt.input_path);
    Embedding embedding(raw);
    char* text = nullptr;
    check(rl_embedding_render(embedding.get(), report_format(opt), &text));
    emit(opt, take(text));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"revlogic: reversible circuits, circuit metrics and switching-energy models"};
    app.require_subcommand(1);

    Options opt;
    rl_physical_params_default(&opt.params);

    const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format: table, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };
    auto add_gates = [&](CLI::App* cmd) {
        cmd->add_option("--gate", opt.gate_paths, "User gate definition file (repeatable)")->check(CLI::ExistingFile);
    };
    auto add_physics = [&](CLI::App* cmd) {
        cmd->add_option("--R", opt.params.resistance, "Series resistance in ohms")->capture_default_str();
        cmd->add_option("--C", opt.params.capacitance, "Load capacitance in farads")->capture_default_str();
        cmd->add_option("--vdd", opt.params.vdd, "Supply voltage in volts")->capture_default_str();
        cmd->add_option("--temperature", opt.params.temperature, "Temperature in kelvin")->capture_default_str();
        cmd->add_option("--ramp-time", opt.params.ramp_time, "Adiabatic ramp time in seconds")
            ->capture_default_str();
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", opt.output_path, "Write the result to this file instead of stdout");
    };
    auto add_input_file = [&](CLI::App* cmd, const char* what) {
        cmd->add_option("file", opt.input_path, what)->required();
    };

    auto* gates = app.add_subcommand("gates", "List available gates with widths and quantum costs");
    add_gates(gates);
    add_format(gates);

    auto* simulate = app.add_subcommand("simulate", "Run one input pattern through a netlist");
    add_input_file(simulate, "Netlist file");
    simulate->add_option("--input", opt.input_pattern, "Input bits, top line first")->required();
    add_gates(simulate);
    add_format(simulate);

    auto* table = app.add_subcommand("table", "Print the truth table of a netlist");
    add_input_file(table, "Netlist file");
    add_gates(table);
    add_format(table);
    add_output(table);

    auto* verify = app.add_subcommand("verify", "Check that a netlist or function table is reversible");
    add_input_file(verify, "Netlist or function-table file");
    add_gates(verify);
    add_format(verify);

    auto* invert = app.add_subcommand("invert", "Write the inverse netlist");
    add_input_file(invert, "Netlist file");
    add_gates(invert);
    add_output(invert);

    auto* metrics = app.add_subcommand("metrics", "Quantum cost, constant inputs and garbage outputs");
    add_input_file(metrics, "Netlist file");
    add_gates(metrics);
    add_format(metrics);

    auto* energy = app.add_subcommand("energy", "Landauer, conventional and adiabatic energy report");
    energy->add_option("file", opt.input_path, "Netlist or function-table file");
    add_gates(energy);
    add_physics(energy);
    add_format(energy);

    auto* sweep = app.add_subcommand("sweep", "Simulate ramp charging over T/RC ratios (CSV)");
    sweep->add_option("--ratios", opt.ratios, "Comma-separated T/RC ratios")->delimiter(',')->required();
    sweep->add_option("--trace", opt.trace_prefix, "Also dump t,v_s,v_c,p_diss traces to <prefix>_<ratio>.csv");
    add_physics(sweep);
    add_format(sweep);
    add_output(sweep);

    auto* embed = app.add_subcommand("embed", "Embed a function table into a reversible one");
    add_input_file(embed, "Function-table file");
    add_format(embed);
    add_output(embed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    try {
        if (gates->parsed()) return cmd_gates(opt);
        if (simulate->parsed()) return cmd_simulate(opt);
        if (table->parsed()) return cmd_table(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (invert->parsed()) return cmd_invert(opt);
        if (metrics->parsed()) return cmd_metrics(opt);
        if (energy->parsed()) return cmd_energy(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (embed->parsed()) return cmd_embed(opt);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
