/*
   Copyright 2026 The fqt Authors

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

#ifndef FQT_ERRORS_HPP
#define FQT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fqt {

enum class ErrorKind {
    NonPrimeModulus,
    WrongCharacteristic,
    FieldMismatch,
    ZeroPolynomial,
    ZeroElement,
    NegativeValuation,
    InconsistentConstraints,
    SearchExhausted,
    DegenerateSlot,
    ZeroShiftUnit,
    CharTwoUnsupported,
    ReciprocityViolation,
    OddCardinality,
    ZeroFunctional,
    ParseError,
    InvalidArgument,
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
        case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::NegativeValuation: return "NegativeValuation";
        case ErrorKind::InconsistentConstraints: return "InconsistentConstraints";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::DegenerateSlot: return "DegenerateSlot";
        case ErrorKind::ZeroShiftUnit: return "ZeroShiftUnit";
        case ErrorKind::CharTwoUnsupported: return "CharTwoUnsupported";
        case ErrorKind::ReciprocityViolation: return "ReciprocityViolation";
        case ErrorKind::OddCardinality: return "OddCardinality";
        case ErrorKind::ZeroFunctional: return "ZeroFunctional";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace fqt

#endif
