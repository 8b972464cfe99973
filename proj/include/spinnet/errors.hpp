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


#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spinnet {

enum class ErrorCode {
    InvalidRegister,
    InvalidArgument,
    DuplicateTargets,
    TargetOutOfRange,
    NonUnitary,
    DimensionMismatch,
    NotAUnitaryElement,
    UnsupportedGate,
    NonTerminatingRules,
    UnnormalizedState,
    DegenerateSamples,
    // Text-format errors. These always carry a line number.
    MissingHeader,
    UnknownKeyword,
    MalformedFloat,
    ElectronOutOfRange,
    DistinctElectronsRequired,
    MalformedLine,
};

const char *error_code_name(ErrorCode code);

/// Base error for the whole library. `line()` is nonzero only for text-format errors.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message, std::size_t line = 0);

    ErrorCode code() const noexcept {
        return code_;
    }
    std::size_t line() const noexcept {
        return line_;
    }
    bool is_parse_error() const noexcept;

   private:
    ErrorCode code_;
    std::size_t line_;
};

}  // namespace spinnet
