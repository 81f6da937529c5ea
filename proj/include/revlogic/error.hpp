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

#include <stdexcept>
#include <string>

namespace revlogic {

/// Failure categories shared by every module. The numeric values are part of
/// the C API (see revlogic.h) and must not be reordered.
enum class ErrorCode : int {
    InvalidArgument = 1,
    WidthMismatch = 2,
    DuplicateOutput = 3,
    IncompleteMapping = 4,
    ConstantViolation = 5,
    WidthTooLarge = 6,
    TooWide = 7,
    NegativeBits = 8,
    NonpositiveT = 9,
    NonpositiveEnergy = 10,
    StepTooLarge = 11,
    DurationTooShort = 12,
    InvalidWaveform = 13,
    SyntaxError = 14,
    UnknownGate = 15,
    BadLineIndex = 16,
    DuplicateLineInGate = 17,
    IoError = 18,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Error raised by the text readers; carries the 1-based source line.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, const std::string& message)
        : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace revlogic
