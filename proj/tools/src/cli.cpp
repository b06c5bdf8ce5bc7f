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


#include "rbops_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "rbops/aybe.hpp"
#include "rbops/classify.hpp"
#include "rbops/error.hpp"
#include "rbops/grading.hpp"
#include "rbops/json_io.hpp"
#include "rbops/operator.hpp"
#include "rbops/rota_baxter.hpp"

namespace rbops::cli {
namespace {

using json_io::json;

// Thrown for usage problems the parser cannot see (missing family parameters
// and the like).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_config_error(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidParams:
    case ErrorKind::MixedFieldSpecs:
    case ErrorKind::MixedAlgebras:
    case ErrorKind::InvalidMonomial:
    case ErrorKind::InvalidAutomorphism:
        return true;
    default:
        return false;
    }
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<FieldElement> parse_elements(FieldSpec field, const std::vector<std::string>& items)
{
    std::vector<FieldElement> out;
    for (const auto& s : items) {
        for (const auto& piece : split_list(s)) {
            out.push_back(FieldElement::parse(field, piece));
        }
    }
    return out;
}

json read_json(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) {
            throw UsageError("cannot open " + path);
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

std::string render_operator(const Operator& r)
{
    std::ostringstream os;
    os << "algebra " << r.algebra().to_string() << ", weight " << r.weight().to_string() << ", degree <= "
       << r.degree_bound() << '\n';
    for (const auto& m : r.algebra().basis(r.degree_bound())) {
        os << "  R(" << m.to_string() << ") = " << r.image(m).to_string() << '\n';
    }
    return os.str();
}

std::string render_check(const RBCheckResult& res)
{
    std::ostringstream os;
    os << (res.passed ? "pass" : "fail") << ": " << res.checked_pairs << " pairs checked, " << res.skipped_pairs
       << " skipped\n";
    if (res.violation) {
        os << "  violation at (" << res.violation->u.to_string() << ", " << res.violation->v.to_string()
           << "): " << res.violation->residual.to_string() << '\n';
    }
    return os.str();
}

std::string render_grading(const GradingDecomposition& g)
{
    std::ostringstream os;
    os << "field " << g.algebra.field.to_string() << ", spectrum:";
    for (const auto& l : g.spectrum) {
        os << ' ' << l.coefficient_string();
    }
    os << "\ndirect sum: " << (g.direct_sum ? "yes" : "no") << '\n';
    for (const auto& [l, basis] : g.spaces) {
        os << "  A_" << l.coefficient_string() << " = span{";
        for (std::size_t i = 0; i < basis.size(); ++i) {
            os << (i ? ", " : "") << basis[i].to_string();
        }
        os << "}\n";
    }
    const char* op = g.weight.is_zero() ? " * " : " o ";
    for (const auto& p : g.products) {
        os << "  A_" << p.l.coefficient_string() << " A_" << p.m.coefficient_string() << ' ';
        switch (p.status) {
        case ProductStatus::ContainedIn:
            os << "in A_" << p.partial->coefficient_string();
            break;
        case ProductStatus::Zero:
            os << "= 0";
            break;
        case ProductStatus::Violation:
            os << "VIOLATION";
            break;
        }
        if (!p.partial) {
            os << "  (" << p.l.coefficient_string() << op << p.m.coefficient_string() << " undefined)";
        } else if (p.outside_spectrum) {
            os << "  (" << p.l.coefficient_string() << op << p.m.coefficient_string() << " = " << p.partial->coefficient_string()
               << " not in spectrum)";
        }
        if (p.witness) {
            os << "  witness " << (*p.witness)[0].to_string() << " * " << (*p.witness)[1].to_string() << " = "
               << (*p.witness)[2].to_string();
        }
        os << '\n';
    }
    return os.str();
}

struct Globals {
    bool pretty = false;
};

struct ConstructArgs {
    std::string family;
    std::string field = "Q";
    bool unital = false;
    int nvars = 1;
    std::optional<int> truncation;
    int degree = 8;
    int m = 1;
    std::vector<int> p;
    std::vector<std::string> q;
    std::string alpha;
    std::vector<std::string> alphas;
    std::string a = "0";
    std::string split = "x-k";
    std::string weight = "1";
    std::string source = "weight-one";
};

Operator do_construct(const ConstructArgs& c, bool unital_given)
{
    const FieldSpec field = FieldSpec::parse(c.field);
    AlgebraSpec algebra{field, c.nvars, c.unital, c.truncation};
    const auto& f = c.family;
    if (f == "weight-zero") {
        if (c.p.size() != static_cast<std::size_t>(c.m) || c.q.size() != static_cast<std::size_t>(c.m)) {
            throw UsageError("weight-zero needs --p and --q with exactly m entries each");
        }
        WeightZeroFamilyParams params{c.m, {}};
        for (int i = 0; i < c.m; ++i) {
            params.residues.push_back({c.p[static_cast<std::size_t>(i)],
                FieldElement::parse(field, c.q[static_cast<std::size_t>(i)])});
        }
        return construct_weight_zero(params, algebra, c.degree);
    }
    if (f == "weight-one") {
        if (c.alpha.empty()) {
            throw UsageError("weight-one needs --alpha");
        }
        return construct_weight_one_univariate(FieldElement::parse(field, c.alpha), algebra, c.degree);
    }
    if (f == "multivariate-one" || f == "multivariate-zero") {
        auto alphas = parse_elements(field, c.alphas);
        if (alphas.empty()) {
            throw UsageError(f + " needs --alphas");
        }
        algebra.nvars = static_cast<int>(alphas.size());
        auto kind = f == "multivariate-one" ? MultivariateKind::WeightOne : MultivariateKind::WeightZero;
        return construct_multivariate(kind, alphas, algebra, c.degree);
    }
    if (f == "integral") {
        if (!unital_given) {
            algebra.unital = true;
        }
        return construct_integral(FieldElement::parse(field, c.a), algebra, c.degree);
    }
    if (f == "splitting") {
        if (!unital_given) {
            algebra.unital = true;
        }
        if (c.split != "x-k" && c.split != "k-x") {
            throw UsageError("--split must be x-k or k-x");
        }
        // "x-k": A1 = <x>, A2 = k; "k-x" swaps the parts.
        const bool constants_in_a2 = c.split == "x-k";
        SplittingSpec spec{algebra, [constants_in_a2](const Monomial& u) {
                               return u.is_constant() == constants_in_a2 ? 2 : 1;
                           }};
        return construct_splitting(spec, FieldElement::parse(field, c.weight), c.degree);
    }
    if (f == "quotient") {
        if (!c.truncation) {
            throw UsageError("quotient needs --truncation");
        }
        if (field.is_rational()) {
            throw UsageError("quotient needs --field Fp:<p>");
        }
        QuotientSource src;
        if (c.source == "weight-one") {
            src = QuotientSource::WeightOneAlphaOne;
        } else if (c.source == "weight-zero") {
            src = QuotientSource::WeightZeroReciprocal;
        } else {
            throw UsageError("--source must be weight-one or weight-zero");
        }
        return quotient_rb_from_family(src, *c.truncation, field.modulus());
    }
    throw UsageError("unknown family '" + f + "'");
}

struct SelftestCase {
    std::string name;
    std::function<std::string()> run; // empty string on success
};

std::string expect(bool ok, const std::string& what)
{
    return ok ? std::string() : what;
}

std::vector<SelftestCase> selftest_cases()
{
    std::vector<SelftestCase> cases;
    cases.push_back({"weight-zero x^n -> x^n/n", [] {
        const FieldSpec q = FieldSpec::rationals();
        auto alg = AlgebraSpec::univariate(q, false);
        auto r = construct_weight_zero({1, {{1, FieldElement::one(q)}}}, alg, 10);
        for (int n = 1; n <= 10; ++n) {
            auto img = r.image(Monomial::power(n));
            if (!img || img->target != Monomial::power(n) || img->coeff != FieldElement::make(q, 1, n)) {
                return "wrong image at x^" + std::to_string(n);
            }
        }
        if (!rb_check(r, FieldElement::zero(q), 10).passed) {
            return std::string("rb_check failed");
        }
        return expect(match_family(r).kind == FamilyKind::WeightZeroFamily, "not matched to the weight-zero family");
    }});
    cases.push_back({"weight-one quotient N=3 over GF(5)", [] {
        auto r = quotient_rb_from_family(QuotientSource::WeightOneAlphaOne, 3, 5);
        const FieldSpec f = r.algebra().field;
        for (int n = 1; n <= 3; ++n) {
            auto img = r.image(Monomial::power(n));
            if (!img || img->target != Monomial::power(n) || img->coeff != FieldElement(f, n)) {
                return "wrong image at x^" + std::to_string(n);
            }
        }
        if (!rb_check(r, FieldElement::one(f), 3).passed) {
            return std::string("rb_check failed");
        }
        auto g = grading_decompose(r, FieldElement::one(f));
        const auto* p12 = g.find(FieldElement(f, 1), FieldElement(f, 2));
        const auto* p13 = g.find(FieldElement(f, 1), FieldElement(f, 3));
        const auto* p23 = g.find(FieldElement(f, 2), FieldElement(f, 3));
        if (!p12 || !p13 || !p23) {
            return std::string("missing product reports");
        }
        if (p12->status != ProductStatus::ContainedIn || p12->partial != FieldElement(f, 3)) {
            return std::string("x*x^2 not in A_3");
        }
        if (p13->status != ProductStatus::Zero || p13->partial) {
            return std::string("x*x^3 should vanish with 1 o 3 undefined");
        }
        // x^2 x^3 vanishes by truncation, so it sits in A_1 trivially.
        if (p23->status == ProductStatus::Violation || p23->partial != FieldElement(f, 1)) {
            return std::string("x^2*x^3 should vanish with 2 o 3 = 1");
        }
        return expect(g.violations() == 0, "grading violations");
    }});
    cases.push_back({"weight-zero quotient N=3 over GF(5)", [] {
        auto r = quotient_rb_from_family(QuotientSource::WeightZeroReciprocal, 3, 5);
        const FieldSpec f = r.algebra().field;
        const long expected[] = {1, 3, 2};
        for (int n = 1; n <= 3; ++n) {
            auto img = r.image(Monomial::power(n));
            if (!img || img->target != Monomial::power(n) || img->coeff != FieldElement(f, expected[n - 1])) {
                return "wrong image at x^" + std::to_string(n);
            }
        }
        if (!rb_check(r, FieldElement::zero(f), 3).passed) {
            return std::string("rb_check failed");
        }
        auto g = grading_decompose(r, FieldElement::zero(f));
        const auto* q12 = g.find(FieldElement(f, 1), FieldElement(f, 2));
        const auto* q23 = g.find(FieldElement(f, 2), FieldElement(f, 3));
        const auto* q13 = g.find(FieldElement(f, 1), FieldElement(f, 3));
        if (!q12 || !q23 || !q13) {
            return std::string("missing product reports");
        }
        // Eigenvalues 1, 3, 2 belong to x, x^2, x^3.
        if (q13->partial != FieldElement(f, 2) || q13->status != ProductStatus::ContainedIn) {
            return std::string("1*3 should be 2 with x*x^2 in A_2");
        }
        if (q23->partial) {
            return std::string("3*2 should be undefined");
        }
        if (q12->partial != FieldElement(f, 4) || !q12->outside_spectrum) {
            return std::string("1*2 should be 4 outside the spectrum");
        }
        return expect(g.violations() == 0, "grading violations");
    }});
    cases.push_back({"conjugation chain to the splitting operator", [] {
        const FieldSpec q = FieldSpec::rationals();
        const int d = 6;
        auto alg = AlgebraSpec::univariate(q, true);
        const FieldElement lambda(q, -1);
        MonomialOperatorTable ones(alg, lambda, d);
        for (int n = 0; n <= d; ++n) {
            ones.set(Monomial::power(n), FieldElement::one(q), Monomial::power(0));
        }
        if (!rb_check(ones, lambda, d).passed) {
            return std::string("R'(x^n) = 1 is not an RB operator of weight -1");
        }
        Operator conj = op_conjugate(ones, AutomorphismSpec::shift());
        SplittingSpec spec{alg, [](const Monomial& u) { return u.is_constant() ? 2 : 1; }};
        auto split = construct_splitting(spec, lambda, d);
        return expect(conj.agrees_with(split, d), "conjugate differs from the splitting operator");
    }});
    return cases;
}

int emit(std::ostream& out, const json& j, const std::string& pretty_text, const Globals& g)
{
    if (g.pretty) {
        out << pretty_text;
    } else {
        out << j.dump(2) << '\n';
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rota-Baxter operators on polynomial algebras", "rbops"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    app.add_flag("--pretty", globals.pretty, "Plain-text output instead of JSON");

    ConstructArgs cons;
    auto* construct = app.add_subcommand("construct", "Build an operator from a known family");
    construct->add_option("--family", cons.family,
                  "weight-zero | weight-one | multivariate-one | multivariate-zero | integral | splitting | quotient")
        ->required();
    construct->add_option("--field", cons.field, "Q or Fp:<p>");
    construct->add_option("--unital", cons.unital, "true or false");
    construct->add_option("--nvars", cons.nvars);
    construct->add_option("--truncation", cons.truncation);
    construct->add_option("--degree", cons.degree, "Degree bound D");
    construct->add_option("--m", cons.m);
    construct->add_option("--p", cons.p, "p_b per residue class")->delimiter(',');
    construct->add_option("--q", cons.q, "q_b per residue class")->delimiter(',');
    construct->add_option("--alpha", cons.alpha);
    construct->add_option("--alphas", cons.alphas)->delimiter(',');
    construct->add_option("--a", cons.a, "Base point of the integral");
    construct->add_option("--split", cons.split, "x-k (A1 = <x>, A2 = k) or k-x");
    construct->add_option("--weight", cons.weight, "Weight of the splitting operator");
    construct->add_option("--source", cons.source, "weight-one or weight-zero (quotient)");

    std::string op_path;
    std::optional<std::string> check_weight;
    std::optional<int> check_degree;
    auto* check = app.add_subcommand("check", "Verify the Rota-Baxter identity");
    check->add_option("--operator", op_path, "Operator JSON file, - for stdin")->required();
    check->add_option("--weight", check_weight);
    check->add_option("--degree", check_degree);

    std::string cls_weight = "1";
    bool cls_unital = false;
    int cls_degree = 8;
    std::string cls_field = "Q";
    int cls_nvars = 1;
    bool cls_diag = false;
    bool cls_inj = false;
    bool cls_match = false;
    std::size_t cls_budget = ClassifyOptions{}.shape_budget;
    std::string cls_grid;
    std::string cls_operator;
    auto* classify = app.add_subcommand("classify", "Enumerate monomial operators, or match one to a family");
    classify->add_option("--weight", cls_weight);
    classify->add_option("--unital", cls_unital, "true or false");
    classify->add_option("--degree", cls_degree);
    classify->add_option("--field", cls_field);
    classify->add_option("--nvars", cls_nvars);
    classify->add_flag("--diagonal", cls_diag);
    classify->add_flag("--injective", cls_inj);
    classify->add_option("--budget", cls_budget);
    classify->add_option("--grid", cls_grid, "Comma-separated values for free coefficients");
    classify->add_flag("--match-only", cls_match, "Match --operator against the known families");
    classify->add_option("--operator", cls_operator);

    std::string grade_op;
    std::optional<std::string> grade_weight;
    auto* grade = app.add_subcommand("grade", "Eigenspace grading of an operator on a truncated algebra");
    grade->add_option("--operator", grade_op)->required();
    grade->add_option("--weight", grade_weight);

    auto* aybe = app.add_subcommand("aybe", "Associative Yang-Baxter equation");
    aybe->require_subcommand(1);
    aybe->fallthrough();
    std::string aybe_r;
    std::string aybe_weight = "1";
    std::optional<int> aybe_degree;
    auto* aybe_check = aybe->add_subcommand("check", "Residual of a tensor");
    aybe_check->add_option("--r", aybe_r, "Tensor JSON file, - for stdin")->required();
    aybe_check->add_option("--weight", aybe_weight);
    aybe_check->add_option("--degree", aybe_degree);
    int as_degree = 2;
    std::string as_weight = "1";
    std::string as_grid;
    std::string as_field = "Q";
    int as_nvars = 1;
    auto* aybe_search = aybe->add_subcommand("search", "Grid search for solutions");
    aybe_search->add_option("--degree", as_degree);
    aybe_search->add_option("--weight", as_weight);
    aybe_search->add_option("--grid", as_grid);
    aybe_search->add_option("--field", as_field);
    aybe_search->add_option("--nvars", as_nvars);

    auto* selftest = app.add_subcommand("selftest", "Run built-in worked examples");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << "run with --help for usage\n";
        return kUsage;
    }

    try {
        if (*construct) {
            Operator r = do_construct(cons, construct->count("--unital") > 0);
            return emit(out, json_io::encode(r), render_operator(r), globals);
        }
        if (*check) {
            Operator r = json_io::decode_operator(read_json(op_path));
            const FieldElement lambda =
                check_weight ? FieldElement::parse(r.algebra().field, *check_weight) : r.weight();
            const int d = check_degree.value_or(r.degree_bound());
            auto res = rb_check(r, lambda, d);
            emit(out, json_io::encode(res), render_check(res), globals);
            return res.passed ? kOk : kMathFailure;
        }
        if (*classify) {
            if (cls_match) {
                if (cls_operator.empty()) {
                    throw UsageError("--match-only needs --operator");
                }
                Operator r = json_io::decode_operator(read_json(cls_operator));
                const auto* table = r.as_table();
                if (!table) {
                    throw UsageError("--match-only needs a monomial operator");
                }
                auto match = match_family(*table);
                std::string text = std::string(to_string(match.kind)) + (match.note.empty() ? "" : ": " + match.note) + '\n';
                emit(out, json_io::encode(match, table->algebra().unital), text, globals);
                return match.kind == FamilyKind::Unmatched ? kMathFailure : kOk;
            }
            const FieldSpec field = FieldSpec::parse(cls_field);
            AlgebraSpec algebra{field, cls_nvars, cls_unital, std::nullopt};
            ClassifyOptions opts;
            opts.grid = parse_elements(field, {cls_grid});
            opts.shape_budget = cls_budget;
            opts.diagonal_only = cls_diag;
            opts.injective_only = cls_inj;
            auto report = enumerate_monomial_rb(algebra, FieldElement::parse(field, cls_weight), cls_degree, opts);
            std::ostringstream text;
            text << report.solutions.size() << " solutions on " << report.algebra.to_string() << '\n';
            for (const auto& s : report.solutions) {
                text << "  " << to_string(s.match.kind) << (s.under_constrained ? " (under-constrained)" : "");
                if (!s.match.note.empty()) {
                    text << ": " << s.match.note;
                }
                text << '\n';
            }
            return emit(out, json_io::encode(report), text.str(), globals);
        }
        if (*grade) {
            Operator r = json_io::decode_operator(read_json(grade_op));
            const FieldElement lambda =
                grade_weight ? FieldElement::parse(r.algebra().field, *grade_weight) : r.weight();
            auto g = grading_decompose(r, lambda);
            emit(out, json_io::encode(g), render_grading(g), globals);
            return g.violations() == 0 ? kOk : kMathFailure;
        }
        if (*aybe_check) {
            TensorElement t = json_io::decode_tensor(read_json(aybe_r));
            const FieldElement lambda = FieldElement::parse(t.algebra().field, aybe_weight);
            int d = aybe_degree.value_or(std::max(0, t.max_component_degree()));
            auto residual = aybe_residual(t, lambda, d);
            json j{{"status", residual.is_zero() ? "pass" : "fail"}, {"residual", json_io::encode(residual)}};
            std::string text = std::string(residual.is_zero() ? "pass" : "fail") + ": residual "
                + residual.to_string() + '\n';
            if (residual.is_zero()) {
                // The induced operator must satisfy the identity of weight -lambda.
                const int bound = std::max(d, 6);
                Operator a = aguiar_operator(t, bound, lambda);
                auto res = rb_check(a, -lambda, bound);
                j["aguiar"] = json_io::encode(res);
                text += "aguiar operator: " + render_check(res);
                emit(out, j, text, globals);
                return res.passed ? kOk : kMathFailure;
            }
            emit(out, j, text, globals);
            return kMathFailure;
        }
        if (*aybe_search) {
            const FieldSpec field = FieldSpec::parse(as_field);
            AlgebraSpec algebra{field, as_nvars, true, std::nullopt};
            AybeSearchOptions opts;
            opts.grid = parse_elements(field, {as_grid});
            auto sols = aybe_grid_search(algebra, as_degree, FieldElement::parse(field, as_weight), opts);
            json list = json::array();
            std::string text = std::to_string(sols.size()) + " solutions\n";
            for (const auto& t : sols) {
                list.push_back(json_io::encode(t));
                text += "  " + t.to_string() + '\n';
            }
            return emit(out, json{{"count", sols.size()}, {"solutions", std::move(list)}}, text, globals);
        }
        if (*selftest) {
            json cases = json::array();
            std::string text;
            bool all = true;
            for (const auto& c : selftest_cases()) {
                std::string failure;
                try {
                    failure = c.run();
                } catch (const std::exception& e) {
                    failure = e.what();
                }
                all = all && failure.empty();
                json entry{{"name", c.name}, {"status", failure.empty() ? "pass" : "fail"}};
                if (!failure.empty()) {
                    entry["detail"] = failure;
                }
                cases.push_back(std::move(entry));
                text += (failure.empty() ? "PASS " : "FAIL ") + c.name + (failure.empty() ? "" : ": " + failure) + '\n';
            }
            emit(out, json{{"status", all ? "pass" : "fail"}, {"cases", std::move(cases)}}, text, globals);
            return all ? kOk : kMathFailure;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_config_error(e.kind()) ? kUsage : kMathFailure;
    } catch (const json::exception& e) {
        err << "error: ParseError: " << e.what() << '\n';
        return kUsage;
    }
    err << "error: no subcommand\n";
    return kUsage;
}

} // namespace rbops::cli
