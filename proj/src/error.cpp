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

namespace revlogic {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::WidthMismatch: return "WidthMismatch";
        case ErrorCode::DuplicateOutput: return "DuplicateOutput";
        case ErrorCode::IncompleteMapping: return "IncompleteMapping";
        case ErrorCode::ConstantViolation: return "ConstantViolation";
        case ErrorCode::WidthTooLarge: return "WidthTooLarge";
        case ErrorCode::TooWide: return "TooWide";
        case ErrorCode::NegativeBits: return "NegativeBits";
        case ErrorCode::NonpositiveT: return "NonpositiveT";
        case ErrorCode::NonpositiveEnergy: return "NonpositiveEnergy";
        case ErrorCode::StepTooLarge: return "StepTooLarge";
        case ErrorCode::DurationTooShort: return "DurationTooShort";
        case ErrorCode::InvalidWaveform: return "InvalidWaveform";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownGate: return "UnknownGate";
        case ErrorCode::BadLineIndex: return "BadLineIndex";
        case ErrorCode::DuplicateLineInGate: return "DuplicateLineInGate";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace revlogic
