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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace revlogic {

/// Largest line count handled by exhaustive operations (2^20 table rows).
inline constexpr std::size_t kMaxWidth = 20;

/// Fixed-width bit pattern: the values on a circuit's lines at one instant.
///
/// Index 0 is the top line (A in a gate drawing). When a pattern is viewed
/// as an integer, index 0 is the most significant bit, so the pattern
/// (A,B) = (1,0) is the integer 2 and prints as "10".
class BitVec {
public:
    /// Zero pattern of the given width. Throws InvalidArgument unless
    /// 1 <= width <= kMaxWidth.
    explicit BitVec(std::size_t width);
    BitVec(std::size_t width, std::uint32_t value);

    /// Parses a top-line-first string of '0'/'1' characters.
    static BitVec from_string(std::string_view bits);

    std::size_t width() const noexcept { return width_; }
    std::uint32_t value() const noexcept { return value_; }

    bool operator[](std::size_t index) const;
    void set(std::size_t index, bool bit);

    std::size_t popcount() const noexcept;
    std::string to_string() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t width_;
    std::uint32_t value_;
};

/// Bit of `pattern` at line `index` for a `width`-line integer encoding.
constexpr bool bit_at(std::uint32_t pattern, std::size_t width, std::size_t index) noexcept {
    return (pattern >> (width - 1 - index)) & 1U;
}

/// Renders an integer pattern as a top-line-first bit string.
std::string pattern_string(std::uint32_t pattern, std::size_t width);

}  // namespace revlogic
