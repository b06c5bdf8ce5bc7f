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


#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "rbops_cli/cli.hpp"

using nlohmann::json;

namespace {

const std::string kGolden = RBOPS_GOLDEN_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = rbops::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::string golden_path(const std::string& name) { return kGolden + "/" + name; }

// Set RBOPS_UPDATE_GOLDEN=1 to rewrite the files instead of comparing.
void expect_golden(const std::string& name, const std::string& actual)
{
    const std::string path = golden_path(name);
    if (std::getenv("RBOPS_UPDATE_GOLDEN")) {
        std::ofstream(path) << actual;
        return;
    }
    std::ifstream probe(path);
    ASSERT_TRUE(probe.good()) << "missing golden file " << path;
    EXPECT_EQ(actual, slurp(path)) << "golden mismatch: " << name;
}

std::string write_temp(const std::string& name, const std::string& text)
{
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST(CliGolden, ConstructWeightOne)
{
    auto r = run({"construct", "--family", "weight-one", "--alpha", "1", "--degree", "6", "--field", "Q"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    bool found = false;
    for (const auto& e : j["entries"]) {
        if (e["src"] == json::array({3})) {
            EXPECT_EQ(e["coeff"], "1/7");
            found = true;
        }
    }
    EXPECT_TRUE(found);
    expect_golden("construct_weight_one.json", r.out);
}

TEST(CliGolden, CheckQuotientPasses)
{
    auto r = run({"check", "--operator", golden_path("quotient_n3_p5.json"), "--weight", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["status"], "pass");
    expect_golden("check_quotient.json", r.out);
}

TEST(CliGolden, CheckIdentityFails)
{
    auto r = run({"check", "--operator", golden_path("identity.json"), "--weight", "0"});
    EXPECT_EQ(r.code, 1);
    json j = json::parse(r.out);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["violation"]["u"], json::array({1}));
    EXPECT_EQ(j["violation"]["v"], json::array({1}));
    expect_golden("check_identity.json", r.out);
}

TEST(CliGolden, GradePrettyTable)
{
    auto r = run({"grade", "--operator", golden_path("quotient_n3_p5.json"), "--weight", "1", "--pretty"});
    EXPECT_EQ(r.code, 0) << r.err;
    expect_golden("grade_quotient.txt", r.out);
    auto j = run({"grade", "--operator", golden_path("quotient_n3_p5.json")});
    EXPECT_EQ(j.code, 0);
    expect_golden("grade_quotient.json", j.out);
}

TEST(CliGolden, ClassifySmall)
{
    auto r = run({"classify", "--weight", "1", "--unital", "false", "--degree", "4", "--field", "Q"});
    EXPECT_EQ(r.code, 0) << r.err;
    expect_golden("classify_w1_d4.json", r.out);
}

TEST(CliGolden, AybeSearch)
{
    auto r = run({"aybe", "search", "--degree", "1", "--weight", "1", "--grid", "0,1,-1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["count"], 2);
    expect_golden("aybe_search_d1.json", r.out);
}

TEST(CliGolden, Selftest)
{
    auto r = run({"selftest"});
    EXPECT_EQ(r.code, 0) << r.out;
    expect_golden("selftest.json", r.out);
}

TEST(Cli, ConstructFeedsCheckAndMatch)
{
    const std::vector<std::vector<std::string>> constructions{
        {"--family", "weight-zero", "--m", "3", "--p", "1,2,3", "--q", "1/2,-3,5", "--degree", "10"},
        {"--family", "weight-zero", "--m", "2", "--p", "2,1", "--q", "1,4", "--unital", "true", "--degree", "9"},
        {"--family", "weight-one", "--alpha", "3/5", "--degree", "8"},
        {"--family", "multivariate-one", "--alphas", "1,2", "--degree", "5"},
        {"--family", "multivariate-zero", "--alphas", "1/2,3,-7", "--degree", "4"},
        {"--family", "splitting", "--weight", "1", "--degree", "5"},
    };
    for (const auto& c : constructions) {
        std::vector<std::string> args{"construct"};
        args.insert(args.end(), c.begin(), c.end());
        auto built = run(args);
        ASSERT_EQ(built.code, 0) << built.err;
        const std::string path = write_temp("op.json", built.out);
        auto checked = run({"check", "--operator", path});
        EXPECT_EQ(checked.code, 0) << c[1] << ": " << checked.out;
        auto matched = run({"classify", "--match-only", "--operator", path});
        EXPECT_EQ(matched.code, 0) << c[1];
        json m = json::parse(matched.out);
        if (c[1] == "weight-zero") {
            EXPECT_EQ(m["kind"], "WeightZeroFamily");
            EXPECT_EQ(m["m"], std::stoi(c[3]));
        } else if (c[1] == "weight-one") {
            EXPECT_EQ(m["alpha"], "3/5");
        } else if (c[1] == "splitting") {
            EXPECT_EQ(m["kind"], "SplittingConjugate");
        } else {
            EXPECT_EQ(m["kind"], "MultivariateFamily");
            EXPECT_EQ(m["alphas"].size(), c[1] == "multivariate-one" ? 2u : 3u);
        }
    }
}

TEST(Cli, QuotientAndIntegral)
{
    auto q = run({"construct", "--family", "quotient", "--source", "weight-zero", "--field", "Fp:5", "--truncation", "3"});
    ASSERT_EQ(q.code, 0) << q.err;
    EXPECT_EQ(json::parse(q.out)["entries"][1]["coeff"], "3");
    auto bad = run({"construct", "--family", "quotient", "--field", "Fp:7", "--truncation", "3"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("CharacteristicObstruction"), std::string::npos);
    auto j = run({"construct", "--family", "integral", "--a", "2", "--degree", "3"});
    ASSERT_EQ(j.code, 0);
    EXPECT_EQ(json::parse(j.out)["kind"], "dense");
    const std::string path = write_temp("int.json", j.out);
    EXPECT_EQ(run({"check", "--operator", path}).code, 0);
}

TEST(Cli, AybeCheck)
{
    const std::string path = write_temp("r.json",
        R"({"algebra":{"field":"Q","nvars":1,"unital":true,"truncation":null},"arity":2,)"
        R"("terms":[{"factors":[[0],[0]],"coeff":"2"}]})");
    auto ok = run({"aybe", "check", "--r", path, "--weight", "2"});
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_EQ(json::parse(ok.out)["aguiar"]["status"], "pass");
    auto fail = run({"aybe", "check", "--r", path, "--weight", "1"});
    EXPECT_EQ(fail.code, 1);
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args{"classify", "--weight", "0", "--degree", "4"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"construct"}).code, 2);
    EXPECT_EQ(run({"construct", "--family", "nope"}).code, 2);
    EXPECT_EQ(run({"construct", "--family", "weight-one", "--alpha", "1", "--field", "Fp:9"}).code, 2);
    EXPECT_EQ(run({"construct", "--family", "weight-one", "--alpha", "x"}).code, 2);
    EXPECT_EQ(run({"construct", "--family", "weight-zero", "--m", "2", "--p", "1", "--q", "1"}).code, 2);
    EXPECT_EQ(run({"check", "--operator", "/nonexistent.json"}).code, 2);
    EXPECT_EQ(run({"check", "--operator", write_temp("bad.json", "{not json")}).code, 2);
    EXPECT_EQ(run({"classify", "--degree", "12"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("construct"), std::string::npos);
}

TEST(Cli, MathFailures)
{
    EXPECT_EQ(run({"construct", "--family", "weight-one", "--alpha", "1", "--unital", "true"}).code, 1);
    EXPECT_EQ(run({"classify", "--degree", "8", "--budget", "5"}).code, 1);
    auto r = run({"classify", "--match-only", "--operator", golden_path("identity.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(json::parse(r.out)["kind"], "Unmatched");
}
