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

#include "revlogic/text_format.hpp"

#include "revlogic/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace revlogic {
namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

/// Splits into non-empty, comment-stripped, whitespace-tokenized lines.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const std::size_t eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

        Line line{number, {}};
        std::size_t pos = 0;
        while (pos < raw.size()) {
            while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            std::size_t end = pos;
            while (end < raw.size() && !std::isspace(static_cast<unsigned char>(raw[end]))) ++end;
            if (end > pos) line.tokens.push_back(raw.substr(pos, end - pos));
            pos = end;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

std::uint64_t parse_count(const Line& line, std::string_view token, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(ErrorCode::SyntaxError, line.number,
                         "expected " + std::string(what) + ", got '" + std::string(token) + "'");
    }
    return value;
}

std::uint32_t parse_bits(const Line& line, std::string_view token, std::size_t width) {
    if (token.find_first_not_of("01") != std::string_view::npos) {
        throw ParseError(ErrorCode::SyntaxError, line.number, "'" + std::string(token) + "' is not a bit string");
    }
    if (token.size() != width) {
        throw ParseError(ErrorCode::WidthMismatch, line.number,
                         "bit string '" + std::string(token) + "' should have " + std::to_string(width) + " bits");
    }
    return BitVec::from_string(token).value();
}

void expect_tokens(const Line& line, std::size_t count, const char* form) {
    if (line.tokens.size() != count) {
        throw ParseError(ErrorCode::SyntaxError, line.number, std::string("expected '") + form + "'");
    }
}

/// Reads 2^inputs "<in> <out>" rows starting at lines[pos].
std::vector<std::uint32_t> read_rows(const std::vector<Line>& lines, std::size_t& pos, const Line& header,
                                     std::size_t inputs, std::size_t outputs) {
    const std::size_t count = std::size_t{1} << inputs;
    std::vector<std::uint32_t> rows(count, 0);
    std::vector<bool> defined(count, false);
    for (std::size_t k = 0; k < count; ++k, ++pos) {
        if (pos >= lines.size()) {
            throw ParseError(ErrorCode::IncompleteMapping, header.number,
                             "expected " + std::to_string(count) + " rows, found " + std::to_string(k));
        }
        const Line& row = lines[pos];
        expect_tokens(row, 2, "<input-bits> <output-bits>");
        const std::uint32_t in = parse_bits(row, row.tokens[0], inputs);
        const std::uint32_t out = parse_bits(row, row.tokens[1], outputs);
        if (defined[in]) {
            throw ParseError(ErrorCode::IncompleteMapping, row.number,
                             "input " + std::string(row.tokens[0]) + " listed more than once");
        }
        defined[in] = true;
        rows[in] = out;
    }
    return rows;
}

std::string_view input_role_name(InputRole role) {
    switch (role) {
        case InputRole::Primary: return "primary";
        case InputRole::Constant0: return "const0";
        case InputRole::Constant1: return "const1";
    }
    return "primary";
}

std::string output_role_name(const LineRole& role) {
    if (role.expected_output) return *role.expected_output ? "check1" : "check0";
    return role.output == OutputRole::Garbage ? "garbage" : "primary";
}

std::string token_name(const std::string& name) {
    if (name.empty()) return "unnamed";
    std::string out = name;
    for (char& c : out) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#') c = '_';
    }
    return out;
}

}  // namespace

std::vector<GateDef> parse_gate_file(std::string_view text) {
    const auto lines = tokenize(text);
    std::vector<GateDef> gates;
    std::size_t pos = 0;
    while (pos < lines.size()) {
        const Line& header = lines[pos++];
        if (header.tokens[0] != "gate") {
            throw ParseError(ErrorCode::SyntaxError, header.number, "expected 'gate <name> <width> <quantum_cost>'");
        }
        expect_tokens(header, 4, "gate <name> <width> <quantum_cost>");
        const std::string name(header.tokens[1]);
        const std::uint64_t width = parse_count(header, header.tokens[2], "gate width");
        const std::uint64_t cost = parse_count(header, header.tokens[3], "quantum cost");
        if (width == 0 || width > kMaxUserGateWidth) {
            throw ParseError(ErrorCode::InvalidArgument, header.number,
                             "gate width must be 1.." + std::to_string(kMaxUserGateWidth));
        }
        auto rows = read_rows(lines, pos, header, width, width);
        try {
            gates.push_back(GateDef::from_permutation(name, width, std::move(rows), cost));
        } catch (const Error& e) {
            throw ParseError(e.code(), header.number, e.what());
        }
    }
    if (gates.empty()) {
        throw ParseError(ErrorCode::SyntaxError, 1, "no gate definition found");
    }
    return gates;
}

std::string render_gate(const GateDef& gate) {
    std::ostringstream out;
    out << "gate " << token_name(gate.name()) << ' ' << gate.width() << ' ' << gate.quantum_cost() << '\n';
    const auto perm = gate.permutation();
    for (std::uint32_t x = 0; x < perm.size(); ++x) {
        out << pattern_string(x, gate.width()) << ' ' << pattern_string(perm[x], gate.width()) << '\n';
    }
    return out.str();
}

Circuit parse_netlist(std::string_view text, const GateLibrary& library) {
    const auto lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(ErrorCode::SyntaxError, 1, "empty netlist");
    }
    const Line& header = lines.front();
    if (header.tokens[0] != "circuit") {
        throw ParseError(ErrorCode::SyntaxError, header.number, "expected 'circuit <name> <width>'");
    }
    expect_tokens(header, 3, "circuit <name> <width>");
    const std::uint64_t width = parse_count(header, header.tokens[2], "circuit width");
    if (width == 0 || width > kMaxWidth) {
        throw ParseError(ErrorCode::InvalidArgument, header.number,
                         "circuit width must be 1.." + std::to_string(kMaxWidth));
    }

    std::vector<LineRole> roles(width);
    std::vector<bool> declared(width, false);
    std::vector<GateInstance> cascade;
    for (std::size_t pos = 1; pos < lines.size(); ++pos) {
        const Line& line = lines[pos];
        const std::string_view keyword = line.tokens[0];
        if (keyword == "line") {
            expect_tokens(line, 4, "line <idx> <primary|const0|const1> <primary|garbage>");
            const std::uint64_t idx = parse_count(line, line.tokens[1], "line index");
            if (idx >= width) {
                throw ParseError(ErrorCode::BadLineIndex, line.number,
                                 "line " + std::to_string(idx) + " outside a " + std::to_string(width) +
                                     "-line circuit");
            }
            if (declared[idx]) {
                throw ParseError(ErrorCode::SyntaxError, line.number,
                                 "line " + std::to_string(idx) + " declared twice");
            }
            declared[idx] = true;
            LineRole& role = roles[idx];
            const std::string_view in = line.tokens[2];
            const std::string_view out = line.tokens[3];
            if (in == "primary") role.input = InputRole::Primary;
            else if (in == "const0") role.input = InputRole::Constant0;
            else if (in == "const1") role.input = InputRole::Constant1;
            else throw ParseError(ErrorCode::SyntaxError, line.number, "unknown input role '" + std::string(in) + "'");
            if (out == "primary") role.output = OutputRole::Primary;
            else if (out == "garbage") role.output = OutputRole::Garbage;
            else if (out == "check0" || out == "check1") {
                role.output = OutputRole::Garbage;
                role.expected_output = out == "check1";
            } else {
                throw ParseError(ErrorCode::SyntaxError, line.number, "unknown output role '" + std::string(out) + "'");
            }
        } else if (keyword == "apply") {
            if (line.tokens.size() < 2) {
                throw ParseError(ErrorCode::SyntaxError, line.number, "expected 'apply <gate> <idx> ...'");
            }
            auto gate = library.find(line.tokens[1]);
            if (!gate) {
                throw ParseError(ErrorCode::UnknownGate, line.number,
                                 "unknown gate '" + std::string(line.tokens[1]) + "' (load its gate file first)");
            }
            std::vector<std::size_t> line_map;
            for (std::size_t k = 2; k < line.tokens.size(); ++k) {
                const std::uint64_t idx = parse_count(line, line.tokens[k], "line index");
                if (idx >= width) {
                    throw ParseError(ErrorCode::BadLineIndex, line.number,
                                     "line " + std::to_string(idx) + " outside a " + std::to_string(width) +
                                         "-line circuit");
                }
                for (std::size_t seen : line_map) {
                    if (seen == idx) {
                        throw ParseError(ErrorCode::DuplicateLineInGate, line.number,
                                         "line " + std::to_string(idx) +
                                             " used twice in one gate; fan-out is not allowed in reversible logic");
                    }
                }
                line_map.push_back(idx);
            }
            if (line_map.size() != gate->width()) {
                throw ParseError(ErrorCode::WidthMismatch, line.number,
                                 "gate '" + gate->name() + "' takes " + std::to_string(gate->width()) +
                                     " lines, got " + std::to_string(line_map.size()));
            }
            cascade.push_back({std::move(gate), std::move(line_map)});
        } else {
            throw ParseError(ErrorCode::SyntaxError, line.number, "unknown statement '" + std::string(keyword) + "'");
        }
    }
    return Circuit(std::string(header.tokens[1]), width, std::move(roles), std::move(cascade));
}

std::string render_netlist(const Circuit& circuit) {
    std::ostringstream out;
    out << "circuit " << token_name(circuit.name()) << ' ' << circuit.width() << '\n';
    for (std::size_t i = 0; i < circuit.width(); ++i) {
        const LineRole& role = circuit.lines()[i];
        out << "line " << i << ' ' << input_role_name(role.input) << ' ' << output_role_name(role) << '\n';
    }
    for (const GateInstance& inst : circuit.cascade()) {
        out << "apply " << token_name(inst.gate->name());
        for (std::size_t idx : inst.line_map) out << ' ' << idx;
        out << '\n';
    }
    return out.str();
}

FunctionTable parse_function_table(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(ErrorCode::SyntaxError, 1, "empty function table");
    }
    const Line& header = lines.front();
    if (header.tokens[0] != "table") {
        throw ParseError(ErrorCode::SyntaxError, header.number, "expected 'table <n> <m>'");
    }
    expect_tokens(header, 3, "table <n> <m>");
    const std::uint64_t n = parse_count(header, header.tokens[1], "input count");
    const std::uint64_t m = parse_count(header, header.tokens[2], "output count");
    if (n == 0 || m == 0 || n > kMaxWidth || m > kMaxWidth) {
        throw ParseError(ErrorCode::WidthTooLarge, header.number,
                         "table widths must be 1.." + std::to_string(kMaxWidth));
    }
    std::size_t pos = 1;
    auto rows = read_rows(lines, pos, header, n, m);
    if (pos != lines.size()) {
        throw ParseError(ErrorCode::SyntaxError, lines[pos].number, "unexpected content after the last row");
    }
    return FunctionTable(n, m, std::move(rows));
}

std::string render_function_table(const FunctionTable& table) {
    std::ostringstream out;
    out << "table " << table.inputs() << ' ' << table.outputs() << '\n';
    for (std::uint32_t x = 0; x < table.row_count(); ++x) {
        out << pattern_string(x, table.inputs()) << ' ' << pattern_string(table(x), table.outputs()) << '\n';
    }
    return out.str();
}

std::string render_embedding(const Embedding& e) {
    std::ostringstream out;
    out << "embedding " << e.function_inputs << ' ' << e.function_outputs << '\n'
        << "lines " << e.lines << '\n'
        << "ancilla " << e.ancilla << '\n'
        << "constant_inputs " << e.constant_inputs << '\n'
        << "garbage_outputs " << e.garbage_outputs << '\n';
    const auto roles = e.roles();
    for (std::size_t i = 0; i < roles.size(); ++i) {
        out << "line " << i << ' ' << input_role_name(roles[i].input) << ' ' << output_role_name(roles[i]) << '\n';
    }
    out << render_function_table(e.table);
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw Error(ErrorCode::IoError, "error reading '" + path + "'");
    }
    return buf.str();
}

}  // namespace revlogic
