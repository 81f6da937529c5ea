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
#include "revlogic/gates.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace revlogic {

// Line-oriented text formats. '#' starts a comment; blank lines are
// ignored; bit strings are written top line first. Parse failures throw
// ParseError carrying the 1-based line number.
//
//   gate <name> <width> <quantum_cost>      circuit <name> <width>
//   <in-bits> <out-bits>   x 2^width        line <idx> <primary|const0|const1> <primary|garbage|check0|check1>
//                                           apply <gate> <idx> ...
//   table <n> <m>
//   <in-bits> <out-bits>   x 2^n
//
// "check0"/"check1" mark a garbage output that must equal a reconstructed
// constant (written for inverted circuits).

/// One or more gate blocks.
std::vector<GateDef> parse_gate_file(std::string_view text);
std::string render_gate(const GateDef& gate);

/// Undeclared lines default to primary in and out.
Circuit parse_netlist(std::string_view text, const GateLibrary& library);
std::string render_netlist(const Circuit& circuit);

FunctionTable parse_function_table(std::string_view text);
std::string render_function_table(const FunctionTable& table);

std::string render_embedding(const Embedding& embedding);

/// Whole-file read; throws IoError naming the path.
std::string read_file(const std::string& path);

}  // namespace revlogic
