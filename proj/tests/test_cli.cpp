#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "lpcount/counting.hpp"
#include "lpcount/path_model.hpp"

namespace lpcount::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "lpcount");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string last_line(const std::string& text) { return lines(text).back(); }

TEST(Cli, CountSingleEngine) {
  auto r = invoke({"count", "h:1,2,3", "--engine", "recurrence"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "14\n");
  EXPECT_EQ(invoke({"count", "d:", "--engine", "theorem"}).out, "1\n");
}

TEST(Cli, CountAllEnginesAgree) {
  auto r = invoke({"count", "h:1,2,3"});
  EXPECT_EQ(r.code, kOk);
  auto out = lines(r.out);
  ASSERT_EQ(out.size(), 6u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NE(out[i].find("\t14"), std::string::npos) << out[i];
  EXPECT_EQ(out.back(), "14");

  EXPECT_EQ(last_line(invoke({"count", "d:"}).out), "1");
  EXPECT_EQ(last_line(invoke({"count", "w:EENENNEENENNEN"}).out), "188");
}

TEST(Cli, CountAllSkipsTheoremOverCap) {
  auto r = invoke({"count", "h:1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("theorem\tskipped"), std::string::npos);
  EXPECT_EQ(last_line(r.out), "17");
}

TEST(Cli, CountErrors) {
  auto bad = invoke({"count", "h:1,x"});
  EXPECT_EQ(bad.code, kUsage);
  EXPECT_NE(bad.err.find("'x'"), std::string::npos);
  EXPECT_EQ(invoke({"count", "h:3,1"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "q:1"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "h:1", "--engine", "magic"}).code, kUsage);
  auto capped = invoke({"count", "h:1,1,1,1,1,1,1,1,1,1,1,1,1,1,1", "--engine", "theorem"});
  EXPECT_EQ(capped.code, kCapacity);
  EXPECT_NE(capped.err.find("14"), std::string::npos);
  EXPECT_EQ(invoke({"count", "h:1,1,1,1,1,1,1,1,1,1,1,1,1,1,1", "--engine", "theorem",
                    "--theorem-cap", "15"})
                .out,
            "16\n");
}

TEST(Cli, CountJsonRoundTrips) {
  for (const char* spec : {"h:0,0,1,3,3,4,6", "d:2,0,1", "w:ENEN"}) {
    auto r = invoke({"count", spec, "--format", "json"});
    ASSERT_EQ(r.code, kOk);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["agree"].get<bool>());
    std::vector<Coord> heights = doc["path"]["heights"];
    const BigCount again = dp_oracle(HeightPath(heights));
    EXPECT_EQ(doc["count"].get<std::string>(), again.get_str());
    EXPECT_EQ(doc["engines"].size(), 5u);
  }
  auto single = nlohmann::json::parse(
      invoke({"count", "h:2,2,2", "--engine", "determinant", "--format", "json"}).out);
  EXPECT_EQ(single["engine"], "determinant");
  EXPECT_EQ(single["count"], "10");
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(invoke({"enumerate", "h:1,1"}).out, "0,0\n0,1\n1,1\n");
  EXPECT_EQ(invoke({"enumerate", "h:"}).out, "h:\n");
  EXPECT_EQ(lines(invoke({"enumerate", "h:0,1"}).out).size(), 2u);
  EXPECT_EQ(lines(invoke({"enumerate", "w:EENENNEENENNEN"}).out).size(), 188u);
}

TEST(Cli, EnumerateLinesAreRestrictedAndSorted) {
  const HeightPath p{0, 2, 2, 5};
  auto out = lines(invoke({"enumerate", "h:0,2,2,5"}).out);
  ASSERT_EQ(out.size(), 28u);
  std::vector<HeightPath> paths;
  for (const auto& line : out) paths.push_back(parse_path("h:" + line));
  for (const auto& q : paths) EXPECT_TRUE(is_restricted_by(q, p));
  EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end()));
  EXPECT_EQ(std::adjacent_find(paths.begin(), paths.end()), paths.end());
}

TEST(Cli, EnumerateCap) {
  auto r = invoke({"enumerate", "h:5,5,5,5", "--max-lines", "100"});
  EXPECT_EQ(r.code, kCapacity);
  EXPECT_EQ(invoke({"enumerate", "h:5,5,5,5", "--max-lines", "100", "--count-only"}).out, "126\n");
  auto doc = nlohmann::json::parse(invoke({"enumerate", "h:1,1", "--format", "json"}).out);
  EXPECT_EQ(doc["count"], "3");
  EXPECT_EQ(doc["paths"].size(), 3u);
}

TEST(Cli, Symbolic) {
  EXPECT_EQ(invoke({"symbolic", "1"}).out, "1/1  0\n1/1  1\n");
  EXPECT_EQ(invoke({"symbolic", "3", "--count-terms"}).out, "14\n");
  EXPECT_EQ(invoke({"symbolic", "2", "--expand", "--count-terms"}).out, "5\n");
  auto expanded = lines(invoke({"symbolic", "2", "--expand"}).out);
  std::multiset<std::string> coeffs;
  for (const auto& line : expanded) coeffs.insert(line.substr(0, line.find(' ')));
  EXPECT_EQ(coeffs, (std::multiset<std::string>{"1/1", "3/2", "1/2", "1/1", "1/1"}));
  EXPECT_EQ(invoke({"symbolic", "15"}).code, kCapacity);

  auto doc = nlohmann::json::parse(invoke({"symbolic", "2", "--format", "json"}).out);
  EXPECT_EQ(doc["basis"], "rising-factorial");
  EXPECT_EQ(doc["terms"].size(), 5u);
  EXPECT_EQ(doc["terms"][2]["coeff"], "1/2");
}

TEST(Cli, Verify) {
  auto lemma = invoke({"verify", "lemma"});
  EXPECT_EQ(lemma.code, kOk);
  EXPECT_EQ(lemma.out, "PASS  lemma  (9261 cases)\n");
  EXPECT_EQ(invoke({"verify", "macmahon"}).code, kOk);
  EXPECT_EQ(invoke({"verify", "bogus"}).code, kUsage);

  auto all = invoke({"verify", "all", "--seed", "7"});
  EXPECT_EQ(all.code, kOk);
  EXPECT_EQ(invoke({"verify", "all", "--seed", "7"}).out, all.out);
  auto doc = nlohmann::json::parse(invoke({"verify", "reduced-step", "--format", "json"}).out);
  EXPECT_TRUE(doc["passed"].get<bool>());
}

TEST(Cli, Probability) {
  EXPECT_EQ(invoke({"probability", "h:0,0", "2", "1"}).out, "1/3\n");
  for (int n = 1; n <= 6; ++n) {
    std::string spec = "h:";
    for (int i = 0; i < n; ++i) spec += (i ? "," : "") + std::to_string(i);
    EXPECT_EQ(invoke({"probability", spec, std::to_string(n), std::to_string(n)}).out,
              "1/" + std::to_string(n + 1) + "\n");
  }
  EXPECT_EQ(invoke({"probability", "h:3,3,3", "3", "3"}).out, "1\n");
  EXPECT_EQ(invoke({"probability", "h:0,2", "2", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"probability", "h:0,1", "3", "1"}).code, kUsage);
  auto doc = nlohmann::json::parse(invoke({"probability", "h:0,0", "2", "1", "--format", "json"}).out);
  EXPECT_EQ(doc["probability"], "1/3");
  EXPECT_EQ(doc["tallies"], "3");
}

TEST(Cli, Bench) {
  auto r = invoke({"bench", "--format", "json"});
  EXPECT_EQ(r.code, kOk);
  auto doc = nlohmann::json::parse(r.out);
  std::map<std::size_t, std::map<std::string, std::size_t>> bits;
  for (const auto& row : doc["results"]) {
    if (row["engine"] == "theorem") {
      EXPECT_TRUE(row.contains("refused"));
      continue;
    }
    bits[row["n"]][row["engine"]] = row["bits"];
  }
  EXPECT_EQ(bits.size(), 4u);
  for (const auto& [n, per_engine] : bits) {
    EXPECT_EQ(per_engine.size(), 3u);
    EXPECT_EQ(per_engine.at("determinant"), per_engine.at("recurrence")) << n;
    EXPECT_EQ(per_engine.at("triangular"), per_engine.at("recurrence")) << n;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"count"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "h:1", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

}  // namespace
}  // namespace lpcount::cli
