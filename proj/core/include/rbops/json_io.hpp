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


#ifndef RBOPS_JSON_IO_HPP
#define RBOPS_JSON_IO_HPP

#include <optional>

#include <nlohmann/json.hpp>

#include "rbops/aybe.hpp"
#include "rbops/classify.hpp"
#include "rbops/field.hpp"
#include "rbops/grading.hpp"
#include "rbops/operator.hpp"
#include "rbops/polynomial.hpp"
#include "rbops/rota_baxter.hpp"

/// JSON encoding of every structured value. Objects use sorted keys, so a
/// dump is a deterministic byte stream. Decoders throw ParseError.
namespace rbops::json_io {

using nlohmann::json;

json encode(const FieldElement& c);
json encode(const Monomial& m);
json encode(const AlgebraSpec& algebra);
/// List of {exponents, coeff} in canonical term order.
json encode(const Polynomial& f);
json encode(const Operator& r);
json encode(const TensorElement& t);
json encode(const RBCheckResult& result);
/// Residues are labelled by b: 1..m on a non-unital algebra, 0..m-1 on a unital one.
json encode(const FamilyMatch& match, bool unital);
json encode(const ClassificationReport& report);
json encode(const GradingDecomposition& grading);
json encode(const KernelImage& ki);

FieldElement decode_field_element(const json& j, FieldSpec field);
Monomial decode_monomial(const json& j);
AlgebraSpec decode_algebra(const json& j);
Polynomial decode_polynomial(const json& j, const AlgebraSpec& algebra);
/// The "algebra" member wins over `fallback`; one of them must be present.
Operator decode_operator(const json& j, const std::optional<AlgebraSpec>& fallback = std::nullopt);
TensorElement decode_tensor(const json& j, const std::optional<AlgebraSpec>& fallback = std::nullopt);

} // namespace rbops::json_io

#endif // RBOPS_JSON_IO_HPP
