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

#include "rbops/json_io.hpp"

#include <string>

#include "rbops/error.hpp"

namespace rbops::json_io {

namespace {

[[noreturn]] void fail(const std::string& what)
{
    throw Error(ErrorKind::ParseError, what);
}

const json& member(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        fail(std::string("missing member '") + key + "'");
    }
    return j.at(key);
}

template <typename T>
T get(const json& j, const char* what)
{
    try {
        return j.get<T>();
    } catch (const json::exception& e) {
        fail(std::string(what) + ": " + e.what());
    }
}

std::string_view status_name(ProductStatus s)
{
    switch (s) {
    case ProductStatus::Zero:
        return "Zero";
    case ProductStatus::ContainedIn:
        return "ContainedIn";
    case ProductStatus::Violation:
        return "Violation";
    }
    return "Violation";
}

} // namespace

json encode(const FieldElement& c)
{
    return c.coefficient_string();
}

json encode(const Monomial& m)
{
    return m.exponents();
}

json encode(const AlgebraSpec& algebra)
{
    json j;
    j["field"] = algebra.field.to_string();
    j["nvars"] = algebra.nvars;
    j["unital"] = algebra.unital;
    j["truncation"] = algebra.truncation ? json(*algebra.truncation) : json(nullptr);
    return j;
}

json encode(const Polynomial& f)
{
    json out = json::array();
    for (const auto& [m, c] : f.terms()) {
        out.push_back({{"exponents", encode(m)}, {"coeff", encode(c)}});
    }
    return out;
}

json encode(const Operator& r)
{
    json j;
    j["algebra"] = encode(r.algebra());
    j["weight"] = encode(r.weight());
    j["degree_bound"] = r.degree_bound();
    json entries = json::array();
    if (const auto* table = r.as_table()) {
        j["kind"] = "monomial";
        for (const auto& [src, img] : table->entries()) {
            entries.push_back({{"src", encode(src)}, {"coeff", encode(img.coeff)}, {"dst", encode(img.target)}});
        }
    } else {
        j["kind"] = "dense";
        for (const auto& [src, image] : r.as_dense()->images()) {
            if (!image.is_zero()) {
                entries.push_back({{"src", encode(src)}, {"image", encode(image)}});
            }
        }
    }
    j["entries"] = std::move(entries);
    return j;
}

json encode(const TensorElement& t)
{
    json terms = json::array();
    for (const auto& [key, c] : t.terms()) {
        json factors = json::array();
        for (const auto& m : key) {
            factors.push_back(encode(m));
        }
        terms.push_back({{"factors", std::move(factors)}, {"coeff", encode(c)}});
    }
    return {{"algebra", encode(t.algebra())}, {"arity", t.arity()}, {"terms", std::move(terms)}};
}

json encode(const RBCheckResult& result)
{
    json j;
    j["status"] = result.passed ? "pass" : "fail";
    j["checked_pairs"] = result.checked_pairs;
    j["skipped_pairs"] = result.skipped_pairs;
    if (result.violation) {
        j["violation"] = {{"u", encode(result.violation->u)}, {"v", encode(result.violation->v)},
            {"residual", encode(result.violation->residual)}};
    }
    return j;
}

json encode(const FamilyMatch& match, bool unital)
{
    json j;
    j["kind"] = std::string(to_string(match.kind));
    if (match.weight_zero) {
        j["m"] = match.weight_zero->m;
        json residues = json::array();
        for (std::size_t i = 0; i < match.weight_zero->residues.size(); ++i) {
            const auto& res = match.weight_zero->residues[i];
            residues.push_back({{"b", i + (unital ? 0 : 1)}, {"p", res.p}, {"q", encode(res.q)}});
        }
        j["residues"] = std::move(residues);
    }
    if (match.alpha) {
        j["alpha"] = encode(*match.alpha);
    }
    if (match.multivariate_kind) {
        j["multivariate_kind"] = *match.multivariate_kind == MultivariateKind::WeightOne ? "weight-one" : "weight-zero";
        json alphas = json::array();
        for (const auto& a : match.alphas) {
            alphas.push_back(encode(a));
        }
        j["alphas"] = std::move(alphas);
    }
    if (!match.note.empty()) {
        j["note"] = match.note;
    }
    return j;
}

json encode(const ClassificationReport& report)
{
    json solutions = json::array();
    std::size_t determined = 0;
    json by_match = json::object();
    for (const auto& sol : report.solutions) {
        json s;
        s["operator"] = encode(Operator(sol.table));
        s["match"] = encode(sol.match, sol.table.algebra().unital);
        s["under_constrained"] = sol.under_constrained;
        json grid = json::array();
        for (const auto& m : sol.grid_sources) {
            grid.push_back(encode(m));
        }
        json free = json::array();
        for (const auto& m : sol.unconstrained_sources) {
            free.push_back(encode(m));
        }
        s["grid_sources"] = std::move(grid);
        s["unconstrained_sources"] = std::move(free);
        s["cut_pair"] = sol.cut_pair ? json::array({encode(sol.cut_pair->first), encode(sol.cut_pair->second)})
                                     : json(nullptr);
        solutions.push_back(std::move(s));
        if (!sol.under_constrained) {
            ++determined;
            const std::string key(to_string(sol.match.kind));
            by_match[key] = by_match.value(key, 0) + 1;
        }
    }
    json j;
    j["algebra"] = encode(report.algebra);
    j["weight"] = encode(report.weight);
    j["degree"] = report.degree;
    j["stats"] = {{"shapes_enumerated", report.stats.shapes_enumerated},
        {"shapes_pruned", report.stats.shapes_pruned}, {"complete_shapes", report.stats.complete_shapes},
        {"systems_solved", report.stats.systems_solved}, {"rejected_by_recheck", report.stats.rejected_by_recheck}};
    j["summary"] = {{"solutions", report.solutions.size()}, {"fully_determined", determined},
        {"fully_determined_by_match", std::move(by_match)}};
    j["solutions"] = std::move(solutions);
    return j;
}

json encode(const GradingDecomposition& grading)
{
    json spectrum = json::array();
    for (const auto& l : grading.spectrum) {
        spectrum.push_back(encode(l));
    }
    json spaces = json::array();
    for (const auto& [l, basis] : grading.spaces) {
        json b = json::array();
        for (const auto& f : basis) {
            b.push_back(encode(f));
        }
        spaces.push_back({{"eigenvalue", encode(l)}, {"basis", std::move(b)}});
    }
    json products = json::array();
    for (const auto& p : grading.products) {
        json e;
        e["l"] = encode(p.l);
        e["m"] = encode(p.m);
        e["partial"] = p.partial ? encode(*p.partial) : json(nullptr);
        e["outside_spectrum"] = p.outside_spectrum;
        e["status"] = std::string(status_name(p.status));
        if (p.witness) {
            e["witness"] = {{"u", encode((*p.witness)[0])}, {"v", encode((*p.witness)[1])},
                {"uv", encode((*p.witness)[2])}};
        }
        products.push_back(std::move(e));
    }
    return {{"algebra", encode(grading.algebra)}, {"weight", encode(grading.weight)},
        {"spectrum", std::move(spectrum)}, {"spaces", std::move(spaces)}, {"direct_sum", grading.direct_sum},
        {"products", std::move(products)}, {"violations", grading.violations()}};
}

json encode(const KernelImage& ki)
{
    json kernel = json::array();
    for (const auto& f : ki.kernel) {
        kernel.push_back(encode(f));
    }
    json image = json::array();
    for (const auto& [m, c] : ki.image) {
        image.push_back({{"monomial", encode(m)}, {"coeff", encode(c)}});
    }
    return {{"kernel", std::move(kernel)}, {"image", std::move(image)}};
}

FieldElement decode_field_element(const json& j, FieldSpec field)
{
    if (j.is_number_integer()) {
        return FieldElement(field, j.get<long>());
    }
    if (!j.is_string()) {
        fail("coefficient must be a string or an integer");
    }
    return FieldElement::parse(field, j.get<std::string>());
}

Monomial decode_monomial(const json& j)
{
    if (!j.is_array()) {
        fail("exponent vector must be an array");
    }
    return Monomial(get<std::vector<int>>(j, "exponents"));
}

AlgebraSpec decode_algebra(const json& j)
{
    AlgebraSpec a;
    a.field = FieldSpec::parse(get<std::string>(member(j, "field"), "field"));
    a.nvars = j.contains("nvars") ? get<int>(j.at("nvars"), "nvars") : 1;
    a.unital = j.contains("unital") && get<bool>(j.at("unital"), "unital");
    if (j.contains("truncation") && !j.at("truncation").is_null()) {
        a.truncation = get<int>(j.at("truncation"), "truncation");
    }
    a.validate();
    return a;
}

Polynomial decode_polynomial(const json& j, const AlgebraSpec& algebra)
{
    if (!j.is_array()) {
        fail("polynomial must be a list of terms");
    }
    Polynomial f(algebra);
    for (const auto& t : j) {
        f.add_term(decode_monomial(member(t, "exponents")), decode_field_element(member(t, "coeff"), algebra.field));
    }
    return f;
}

Operator decode_operator(const json& j, const std::optional<AlgebraSpec>& fallback)
{
    if (!j.is_object()) {
        fail("operator must be an object");
    }
    std::optional<AlgebraSpec> algebra = fallback;
    if (j.contains("algebra")) {
        algebra = decode_algebra(j.at("algebra"));
    }
    if (!algebra) {
        fail("operator has no algebra and none was given");
    }
    const FieldElement weight = j.contains("weight") ? decode_field_element(j.at("weight"), algebra->field)
                                                     : FieldElement::zero(algebra->field);
    int bound = 0;
    if (j.contains("degree_bound")) {
        bound = get<int>(j.at("degree_bound"), "degree_bound");
    } else if (algebra->truncation) {
        bound = *algebra->truncation;
    } else {
        fail("missing member 'degree_bound'");
    }
    const std::string kind = j.contains("kind") ? get<std::string>(j.at("kind"), "kind") : "monomial";
    const json& entries = member(j, "entries");
    if (!entries.is_array()) {
        fail("entries must be a list");
    }
    if (kind == "monomial") {
        MonomialOperatorTable table(*algebra, weight, bound);
        for (const auto& e : entries) {
            table.set(decode_monomial(member(e, "src")), decode_field_element(member(e, "coeff"), algebra->field),
                decode_monomial(member(e, "dst")));
        }
        return Operator(std::move(table));
    }
    if (kind == "dense") {
        DenseOperator dense(*algebra, weight, bound);
        for (const auto& e : entries) {
            dense.set(decode_monomial(member(e, "src")), decode_polynomial(member(e, "image"), *algebra));
        }
        return Operator(std::move(dense));
    }
    fail("unknown operator kind '" + kind + "'");
}

TensorElement decode_tensor(const json& j, const std::optional<AlgebraSpec>& fallback)
{
    if (!j.is_object()) {
        fail("tensor must be an object");
    }
    std::optional<AlgebraSpec> algebra = fallback;
    if (j.contains("algebra")) {
        algebra = decode_algebra(j.at("algebra"));
    }
    if (!algebra) {
        fail("tensor has no algebra and none was given");
    }
    const int arity = j.contains("arity") ? get<int>(j.at("arity"), "arity") : 2;
    TensorElement t(*algebra, arity);
    const json& terms = member(j, "terms");
    if (!terms.is_array()) {
        fail("terms must be a list");
    }
    for (const auto& term : terms) {
        std::vector<Monomial> factors;
        for (const auto& f : member(term, "factors")) {
            factors.push_back(decode_monomial(f));
        }
        t.add_term(factors, decode_field_element(member(term, "coeff"), algebra->field));
    }
    return t;
}

} // namespace rbops::json_io
