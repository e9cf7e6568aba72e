/*
   Copyright 2026 The skein Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SKEIN_ERROR_HPP
#define SKEIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace skein {

/// Every recoverable failure in the library is reported as an Error with a
/// stable code name, so callers (and the C API) can dispatch without parsing
/// message strings.
enum class ErrorCode {
    NotDivisible,
    DivisionByZero,
    EvalAtZero,
    NotSymmetric,
    NoSymmetrization,
    WrongDegree,
    UnknownKnot,
    SyntaxError,
    TypeMismatch,
    LeadingCoefficientVanishes,
    SeedRequired,
    DegenerateElement,
    InvalidArgument,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message, long detail = -1)
        : std::runtime_error(message), code_(code), detail_(detail) {}

    ErrorCode code() const noexcept { return code_; }

    /// Code-specific payload: byte offset for SyntaxError, the parameter n for
    /// LeadingCoefficientVanishes, the missing index for SeedRequired; -1 when
    /// unused.
    long detail() const noexcept { return detail_; }

    const char* name() const noexcept {
        switch (code_) {
            case ErrorCode::NotDivisible: return "NotDivisible";
            case ErrorCode::DivisionByZero: return "DivisionByZero";
            case ErrorCode::EvalAtZero: return "EvalAtZero";
            case ErrorCode::NotSymmetric: return "NotSymmetric";
            case ErrorCode::NoSymmetrization: return "NoSymmetrization";
            case ErrorCode::WrongDegree: return "WrongDegree";
            case ErrorCode::UnknownKnot: return "UnknownKnot";
            case ErrorCode::SyntaxError: return "SyntaxError";
            case ErrorCode::TypeMismatch: return "TypeMismatch";
            case ErrorCode::LeadingCoefficientVanishes: return "LeadingCoefficientVanishes";
            case ErrorCode::SeedRequired: return "SeedRequired";
            case ErrorCode::DegenerateElement: return "DegenerateElement";
            case ErrorCode::InvalidArgument: return "InvalidArgument";
        }
        return "Unknown";
    }

  private:
    ErrorCode code_;
    long detail_;
};

} // namespace skein

#endif
