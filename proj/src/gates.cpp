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

#include "revlogic/gates.hpp"

#include "revlogic/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace revlogic {
namespace {

constexpr std::string_view kInverseSuffix = "_inv";

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void check_width(std::size_t width, std::size_t limit) {
    if (width == 0 || width > limit) {
        throw Error(ErrorCode::InvalidArgument,
                    "gate width " + std::to_string(width) + " outside 1.." + std::to_string(limit));
    }
}

/// Builds a 3-line permutation from per-output Boolean equations.
std::vector<std::uint32_t> table3(const std::function<std::uint32_t(bool, bool, bool)>& f) {
    std::vector<std::uint32_t> perm(8);
    for (std::uint32_t x = 0; x < 8; ++x) {
        perm[x] = f(bit_at(x, 3, 0), bit_at(x, 3, 1), bit_at(x, 3, 2));
    }
    return perm;
}

constexpr std::uint32_t pack3(bool p, bool q, bool r) {
    return (static_cast<std::uint32_t>(p) << 2) | (static_cast<std::uint32_t>(q) << 1) |
           static_cast<std::uint32_t>(r);
}

}  // namespace

GateDef GateDef::from_permutation(std::string name, std::size_t width, std::vector<std::uint32_t> perm,
                                  std::uint64_t quantum_cost) {
    check_width(width, kMaxWidth);
    const std::size_t size = std::size_t{1} << width;
    if (perm.size() != size) {
        throw Error(ErrorCode::IncompleteMapping, "gate '" + name + "' needs " + std::to_string(size) +
                                                      " entries, got " + std::to_string(perm.size()));
    }
    std::vector<bool> seen(size, false);
    for (std::size_t x = 0; x < size; ++x) {
        const std::uint32_t y = perm[x];
        if (y >= size) {
            throw Error(ErrorCode::WidthMismatch, "gate '" + name + "' output out of range");
        }
        if (seen[y]) {
            throw Error(ErrorCode::DuplicateOutput, "gate '" + name + "' maps two inputs to " +
                                                        pattern_string(y, width) + "; mapping is not reversible");
        }
        seen[y] = true;
    }
    return GateDef(std::move(name), width, std::move(perm), quantum_cost);
}

GateDef GateDef::with_quantum_cost(std::uint64_t quantum_cost) const {
    return GateDef(name_, width_, perm_, quantum_cost);
}

std::string_view gate_kind_name(GateKind kind) noexcept {
    switch (kind) {
        case GateKind::Not: return "not";
        case GateKind::Feynman: return "feynman";
        case GateKind::Toffoli: return "toffoli";
        case GateKind::Fredkin: return "fredkin";
        case GateKind::Peres: return "peres";
    }
    return "";
}

GateDef builtin_gate(GateKind kind) {
    const std::string name(gate_kind_name(kind));
    switch (kind) {
        case GateKind::Not:
            return GateDef::from_permutation(name, 1, {1, 0}, 1);
        case GateKind::Feynman: {
            // P = A, Q = A xor B
            std::vector<std::uint32_t> perm(4);
            for (std::uint32_t x = 0; x < 4; ++x) {
                const bool a = bit_at(x, 2, 0), b = bit_at(x, 2, 1);
                perm[x] = (static_cast<std::uint32_t>(a) << 1) | static_cast<std::uint32_t>(a != b);
            }
            return GateDef::from_permutation(name, 2, std::move(perm), 1);
        }
        case GateKind::Toffoli:
            return GateDef::from_permutation(
                name, 3, table3([](bool a, bool b, bool c) { return pack3(a, b, (a && b) != c); }), 5);
        case GateKind::Fredkin:
            // Q = A'B xor AC, R = A'C xor AB
            return GateDef::from_permutation(name, 3, table3([](bool a, bool b, bool c) {
                                                 return pack3(a, (!a && b) != (a && c), (!a && c) != (a && b));
                                             }),
                                             5);
        case GateKind::Peres:
            return GateDef::from_permutation(
                name, 3, table3([](bool a, bool b, bool c) { return pack3(a, a != b, (a && b) != c); }), 4);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown gate kind");
}

GateDef user_gate(std::string name, std::size_t width, std::span<const std::pair<BitVec, BitVec>> mapping,
                  std::uint64_t quantum_cost) {
    check_width(width, kMaxUserGateWidth);
    const std::size_t size = std::size_t{1} << width;
    std::vector<std::uint32_t> perm(size, 0);
    std::vector<bool> defined(size, false);
    for (const auto& [in, out] : mapping) {
        if (in.width() != width || out.width() != width) {
            throw Error(ErrorCode::WidthMismatch, "gate '" + name + "' entry " + in.to_string() + " -> " +
                                                      out.to_string() + " does not have width " +
                                                      std::to_string(width));
        }
        if (defined[in.value()]) {
            throw Error(ErrorCode::IncompleteMapping,
                        "gate '" + name + "' lists input " + in.to_string() + " more than once");
        }
        defined[in.value()] = true;
        perm[in.value()] = out.value();
    }
    for (std::size_t x = 0; x < size; ++x) {
        if (!defined[x]) {
            throw Error(ErrorCode::IncompleteMapping, "gate '" + name + "' has no entry for input " +
                                                          pattern_string(static_cast<std::uint32_t>(x), width));
        }
    }
    return GateDef::from_permutation(std::move(name), width, std::move(perm), quantum_cost);
}

BitVec apply(const GateDef& gate, const BitVec& input) {
    if (input.width() != gate.width()) {
        throw Error(ErrorCode::WidthMismatch, "gate '" + gate.name() + "' has width " +
                                                  std::to_string(gate.width()) + ", input has " +
                                                  std::to_string(input.width()));
    }
    return BitVec(gate.width(), gate.apply(input.value()));
}

bool is_self_inverse(const GateDef& gate) {
    const auto perm = gate.permutation();
    for (std::size_t x = 0; x < perm.size(); ++x) {
        if (perm[perm[x]] != x) return false;
    }
    return true;
}

GateDef inverse(const GateDef& gate) {
    const auto perm = gate.permutation();
    std::vector<std::uint32_t> inv(perm.size());
    for (std::size_t x = 0; x < perm.size(); ++x) {
        inv[perm[x]] = static_cast<std::uint32_t>(x);
    }
    std::string name = gate.name();
    if (inv != std::vector<std::uint32_t>(perm.begin(), perm.end())) {
        if (name.ends_with(kInverseSuffix)) {
            name.resize(name.size() - kInverseSuffix.size());
        } else {
            name += kInverseSuffix;
        }
    }
    return GateDef::from_permutation(std::move(name), gate.width(), std::move(inv), gate.quantum_cost());
}

GateLibrary::GateLibrary() {
    for (GateKind kind : kBuiltinGates) {
        auto gate = std::make_shared<const GateDef>(builtin_gate(kind));
        gates_.emplace(gate->name(), std::move(gate));
    }
}

void GateLibrary::add(GateDef gate) {
    const std::string key = lower(gate.name());
    if (key.empty()) {
        throw Error(ErrorCode::InvalidArgument, "gate name is empty");
    }
    if (gates_.contains(key)) {
        throw Error(ErrorCode::InvalidArgument, "gate '" + gate.name() + "' is already defined");
    }
    gates_.emplace(key, std::make_shared<const GateDef>(std::move(gate)));
}

std::shared_ptr<const GateDef> GateLibrary::find(std::string_view name) const {
    const std::string key = lower(name);
    if (auto it = gates_.find(key); it != gates_.end()) {
        return it->second;
    }
    if (key.ends_with(kInverseSuffix)) {
        const std::string base = key.substr(0, key.size() - kInverseSuffix.size());
        if (auto it = gates_.find(base); it != gates_.end()) {
            return std::make_shared<const GateDef>(inverse(*it->second));
        }
    }
    return nullptr;
}

std::vector<std::shared_ptr<const GateDef>> GateLibrary::gates() const {
    std::vector<std::shared_ptr<const GateDef>> out;
    out.reserve(gates_.size());
    for (const auto& [_, gate] : gates_) out.push_back(gate);
    return out;
}

}  // namespace revlogic
