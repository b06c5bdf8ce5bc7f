/*
   Copyright 2026 The rbops Authors

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

#include "rbops/error.hpp"

namespace rbops {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NonInvertibleModP: return "NonInvertibleModP";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFieldSpecs: return "MixedFieldSpecs";
    case ErrorKind::MixedAlgebras: return "MixedAlgebras";
    case ErrorKind::InvalidMonomial: return "InvalidMonomial";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::NonzeroWeight: return "NonzeroWeight";
    case ErrorKind::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::CharacteristicObstruction: return "CharacteristicObstruction";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NonUnitalAlgebra: return "NonUnitalAlgebra";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::NonSplitSpectrum: return "NonSplitSpectrum";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<int> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message)
    , kind_(kind)
    , witness_(std::move(witness))
{
}

} // namespace rbops
