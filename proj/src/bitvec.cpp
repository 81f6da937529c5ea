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

#include "revlogic/bitvec.hpp"

#include "revlogic/error.hpp"

#include <bit>

namespace revlogic {

BitVec::BitVec(std::size_t width) : BitVec(width, 0) {}

BitVec::BitVec(std::size_t width, std::uint32_t value) : width_(width), value_(value) {
    if (width == 0 || width > kMaxWidth) {
        throw Error(ErrorCode::InvalidArgument,
                    "bit width " + std::to_string(width) + " outside 1.." + std::to_string(kMaxWidth));
    }
    if (value >> width) {
        throw Error(ErrorCode::InvalidArgument,
                    "value " + std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
    }
}

BitVec BitVec::from_string(std::string_view bits) {
    if (bits.empty() || bits.size() > kMaxWidth) {
        throw Error(ErrorCode::InvalidArgument, "bit string '" + std::string(bits) + "' has invalid length");
    }
    std::uint32_t value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::InvalidArgument, "bad character in bit string '" + std::string(bits) + "'");
        }
        value = (value << 1) | static_cast<std::uint32_t>(c == '1');
    }
    return BitVec(bits.size(), value);
}

bool BitVec::operator[](std::size_t index) const {
    if (index >= width_) {
        throw Error(ErrorCode::InvalidArgument, "bit index out of range");
    }
    return bit_at(value_, width_, index);
}

void BitVec::set(std::size_t index, bool bit) {
    if (index >= width_) {
        throw Error(ErrorCode::InvalidArgument, "bit index out of range");
    }
    const std::uint32_t mask = 1U << (width_ - 1 - index);
    value_ = bit ? (value_ | mask) : (value_ & ~mask);
}

std::size_t BitVec::popcount() const noexcept { return static_cast<std::size_t>(std::popcount(value_)); }

std::string BitVec::to_string() const { return pattern_string(value_, width_); }

std::string pattern_string(std::uint32_t pattern, std::size_t width) {
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if (bit_at(pattern, width, i)) out[i] = '1';
    }
    return out;
}

}  // namespace revlogic
