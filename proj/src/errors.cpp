// Copyright 2026 The spinnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "spinnet/errors.hpp"

namespace spinnet {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidRegister:
            return "invalid-register";
        case ErrorCode::InvalidArgument:
            return "invalid-argument";
        case ErrorCode::DuplicateTargets:
            return "duplicate-targets";
        case ErrorCode::TargetOutOfRange:
            return "target-out-of-range";
        case ErrorCode::NonUnitary:
            return "non-unitary";
        case ErrorCode::DimensionMismatch:
            return "dimension-mismatch";
        case ErrorCode::NotAUnitaryElement:
            return "must-use-simulate";
        case ErrorCode::UnsupportedGate:
            return "unsupported-gate";
        case ErrorCode::NonTerminatingRules:
            return "non-terminating-rules";
        case ErrorCode::UnnormalizedState:
            return "unnormalized-state";
        case ErrorCode::DegenerateSamples:
            return "degenerate-samples";
        case ErrorCode::MissingHeader:
            return "missing-header";
        case ErrorCode::UnknownKeyword:
            return "unknown-keyword";
        case ErrorCode::MalformedFloat:
            return "malformed-float";
        case ErrorCode::ElectronOutOfRange:
            return "electron-out-of-range";
        case ErrorCode::DistinctElectronsRequired:
            return "distinct-electrons-required";
        case ErrorCode::MalformedLine:
            return "malformed-line";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string &message, std::size_t line)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      code_(code),
      line_(line) {
}

bool Error::is_parse_error() const noexcept {
    switch (code_) {
        case ErrorCode::MissingHeader:
        case ErrorCode::UnknownKeyword:
        case ErrorCode::MalformedFloat:
        case ErrorCode::ElectronOutOfRange:
        case ErrorCode::DistinctElectronsRequired:
        case ErrorCode::MalformedLine:
            return true;
        default:
            return false;
    }
}

}  // namespace spinnet
