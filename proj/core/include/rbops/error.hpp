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

#ifndef RBOPS_ERROR_HPP
#define RBOPS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rbops {

enum class ErrorKind {
    ZeroDenominator,
    NonInvertibleModP,
    DivisionByZero,
    MixedFieldSpecs,
    MixedAlgebras,
    InvalidMonomial,
    DegreeBoundExceeded,
    ZeroWeight,
    NonzeroWeight,
    InvalidAutomorphism,
    InvalidParams,
    CharacteristicObstruction,
    DenominatorVanishes,
    NotASubalgebra,
    SearchBudgetExceeded,
    NonUnitalAlgebra,
    ZeroArgument,
    NonSplitSpectrum,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `witness()` carries the integer data
/// that pins the failure down: an exponent, an exponent tuple, or a part index
/// followed by the exponents of the offending product.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<int> witness = {});

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::vector<int> witness_;
};

} // namespace rbops

#endif // RBOPS_ERROR_HPP
