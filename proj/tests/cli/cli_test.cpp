#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "hlindex/catalog.hpp"
#include "hlindex/generators.hpp"
#include "hlindex/io.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = hl::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) out.push_back(json::parse(line));
  return out;
}

fs::path temp_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("hlindex_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(Cli, MedianHeawood) {
  auto r = run({"median", "builtin:heawood"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["h"], 7);
  EXPECT_EQ(j["ell"], 8);
  EXPECT_NEAR(j["hl_index"].get<double>(), std::sqrt(2.0), 1e-9);
  EXPECT_FALSE(j["exact_at_most_one"].get<bool>());
}

TEST(Cli, TextModeCarriesTheSameValues) {
  auto j = json::parse(run({"median", "builtin:heawood"}).out);
  auto t = run({"median", "builtin:heawood", "--output", "text"});
  ASSERT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("h: 7\n"), std::string::npos);
  EXPECT_NE(t.out.find("ell: 8\n"), std::string::npos);
  EXPECT_NE(t.out.find("hl_index: " + j["hl_index"].dump() + "\n"), std::string::npos);
  EXPECT_NE(t.out.find("exact_at_most_one: false"), std::string::npos);
}

TEST(Cli, ReadsStdinInBothFormats) {
  auto g6 = run({"median"}, "EhEG\n");  // C6
  ASSERT_EQ(g6.code, 0) << g6.err;
  auto el = run({"median", "--format", "edgelist"}, "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  ASSERT_EQ(el.code, 0) << el.err;
  EXPECT_EQ(json::parse(g6.out)["exact_at_most_one"], true);
  EXPECT_EQ(json::parse(g6.out), json::parse(el.out));
}

TEST(Cli, MalformedInputExitsTwoWithLocation) {
  auto r = run({"median"}, "Gxx\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("offset"), std::string::npos);
  auto e = run({"median", "--format", "edgelist"}, "3 1\n0 7\n");
  EXPECT_EQ(e.code, 2);
  EXPECT_NE(e.err.find("out of range"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"median", "builtin:nothing"}).code, 2);
  EXPECT_EQ(run({"median", "/no/such/file"}).code, 2);
  EXPECT_EQ(run({"inertia", "builtin:c6", "--threshold", "one"}).code, 2);
  EXPECT_EQ(run({"inertia", "builtin:c6", "--threshold", "1/0"}).code, 2);
  EXPECT_EQ(run({"median", "builtin:c6", "--output", "xml"}).code, 2);
  EXPECT_EQ(run({"find-set", "builtin:c6", "--vertex", "6"}).code, 2);
  EXPECT_EQ(run({"find-set", "builtin:c5"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, InertiaAtRationalThreshold) {
  auto r = run({"inertia", "builtin:c6", "--threshold", "2/4", "--cross-check"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["threshold"], "1/2");
  EXPECT_EQ(j["greater"], 3);
  EXPECT_EQ(j["less"], 3);
  EXPECT_EQ(j["sturm_agrees"], true);
  auto one = json::parse(run({"inertia", "builtin:c6"}).out);
  EXPECT_EQ(one["equal"], 2);
}

TEST(Cli, CharPolyOfC6) {
  auto j = json::parse(run({"charpoly", "builtin:c6"}).out);
  EXPECT_EQ(j["coefficients"], json({"-4", "0", "9", "0", "-6", "0", "1"}));
  EXPECT_EQ(run({"charpoly", "builtin:c6", "--bound", "4"}).code, 2);
}

TEST(Cli, EigsDescending) {
  auto j = json::parse(run({"eigs", "builtin:p3"}).out);
  auto v = j["values"].get<std::vector<double>>();
  ASSERT_EQ(v.size(), 3u);
  EXPECT_NEAR(v[0], std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(v[2], -std::sqrt(2.0), 1e-12);
}

TEST(Cli, FindSetCertificateReplays) {
  auto r = run({"find-set", "builtin:c12", "--vertex", "3"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j["outcome"], "found");
  auto dir = temp_dir("replay");
  std::ofstream(dir / "cert.json") << j["certificate"].dump();
  auto ok = run({"imbalance", "builtin:c12", "--replay", (dir / "cert.json").string()});
  EXPECT_EQ(ok.code, 0) << ok.out;

  auto bad = j["certificate"];
  bad["imb_after"] = bad["imb_after"].get<long>() + 1;
  std::ofstream(dir / "bad.json") << bad.dump();
  auto fail = run({"imbalance", "builtin:c12", "--replay", (dir / "bad.json").string()});
  EXPECT_EQ(fail.code, 1);
  EXPECT_EQ(json::parse(fail.out)["replay_ok"], false);

  std::ofstream(dir / "broken.json") << "{\"side\": \"A\"";
  EXPECT_EQ(run({"imbalance", "builtin:c12", "--replay", (dir / "broken.json").string()}).code, 2);
}

TEST(Cli, FindSetRefusesHeawood) {
  auto r = run({"find-set", "builtin:heawood"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["outcome"], "refused");
}

TEST(Cli, ImbalanceMove) {
  auto j = json::parse(run({"imbalance", "builtin:c6", "--move", "0,2"}).out);
  EXPECT_EQ(j["ab"]["imb"], 0);
  EXPECT_EQ(j["increase"]["imb_after"], 1);
  EXPECT_EQ(j["median_bound"]["certified"], true);
  auto none = json::parse(run({"imbalance", "builtin:c6", "--move", "0"}).out);
  EXPECT_TRUE(none["increase"].is_null());
  EXPECT_EQ(run({"imbalance", "builtin:c6", "--move", "1"}).code, 2);
}

TEST(Cli, GenIsDeterministicAndFeedsVerifyTheorem) {
  auto a = run({"gen", "--n", "30", "--seed", "9", "--count", "5", "--output", "text"});
  auto b = run({"gen", "--n", "30", "--seed", "9", "--count", "5", "--output", "text"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto v = run({"verify-theorem", "--jobs", "3"}, a.out);
  ASSERT_EQ(v.code, 0) << v.err;
  auto verdicts = lines(v.out);
  ASSERT_EQ(verdicts.size(), 5u);
  std::istringstream codes(a.out);
  for (const auto& verdict : verdicts) {
    std::string code;
    std::getline(codes, code);
    EXPECT_EQ(verdict["graph6"], code);
    EXPECT_EQ(verdict["n"], 30);
    EXPECT_EQ(verdict["exact_at_most_one"], true);
    EXPECT_EQ(verdict["is_heawood"], false);
  }
}

TEST(Cli, VerifyTheoremExhaustiveTen) {
  auto r = run({"verify-theorem", "--nmax", "10", "--exhaustive", "--jobs", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto verdicts = lines(r.out);
  EXPECT_EQ(verdicts.size(), 488u);
  for (const auto& v : verdicts) EXPECT_EQ(v["exact_at_most_one"], true);
  auto serial = run({"verify-theorem", "--nmax", "10", "--exhaustive", "--jobs", "1"});
  EXPECT_EQ(serial.out, r.out);
}

TEST(Cli, VerifyTheoremResumes) {
  auto full = lines(run({"verify-theorem", "--nmax", "8", "--exhaustive"}).out);
  const auto& mid = full[40];
  const std::string point = mid["n"].dump() + ":" + mid["graph6"].get<std::string>();
  auto rest = lines(run({"verify-theorem", "--nmax", "8", "--exhaustive", "--resume", point}).out);
  ASSERT_EQ(rest.size(), full.size() - 41);
  EXPECT_EQ(rest.front(), full[41]);
}

TEST(Cli, HeawoodIsNotAViolation) {
  auto r = run({"verify-theorem"}, hl::graph6_encode(hl::heawood()) + "\n");
  EXPECT_EQ(r.code, 0);
  auto v = json::parse(r.out);
  EXPECT_EQ(v["is_heawood"], true);
  EXPECT_EQ(v["exact_at_most_one"], false);
}

TEST(Cli, VerifyTheoremRejectsOutOfScopeLines) {
  auto r = run({"verify-theorem"}, "EhEG\nBw\n");  // C6, then the triangle
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("<stdin>:2"), std::string::npos);
}

TEST(Cli, VerifyCatalogAll) {
  auto r = run({"verify-catalog", "--jobs", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto reports = lines(r.out);
  EXPECT_EQ(reports.size(), hl::catalog().size());
  for (const auto& rep : reports) EXPECT_EQ(rep["ok"], true) << rep["name"];
  EXPECT_EQ(run({"verify-catalog", "--entry", "p_hat_12"}).code, 0);
  EXPECT_EQ(run({"verify-catalog", "--entry", "nope"}).code, 2);
}

TEST(Cli, CatalogExportRoundTripAndTamper) {
  auto dir = temp_dir("catalog");
  ASSERT_EQ(run({"verify-catalog", "--export", dir.string()}).code, 0);
  EXPECT_TRUE(fs::exists(dir / "catalog.g6"));
  auto reread = run({"verify-catalog", "--from", dir.string()});
  ASSERT_EQ(reread.code, 0) << reread.err;
  EXPECT_EQ(lines(reread.out).size(), hl::catalog().size());

  std::ifstream in(dir / "c6_hat.json");
  auto rec = json::parse(in);
  rec["claims"][0]["bound"] = "90/100";
  std::ofstream(dir / "c6_hat.json") << rec.dump();
  auto tampered = run({"verify-catalog", "--from", (dir / "c6_hat.json").string()});
  EXPECT_EQ(tampered.code, 1);
  EXPECT_EQ(json::parse(tampered.out)["ok"], false);
}

TEST(Cli, PipelineOnCycles) {
  auto r = run({"pipeline", "builtin:c6", "--separation", "38", "--jobs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["conforming"], true);
  EXPECT_EQ(j["a"].get<long>() + j["b"].get<long>() + j["failures"].get<long>(),
            static_cast<long>(j["v0_set"].size()));
}

TEST(Cli, OutputIsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"pipeline", "builtin:c12", "--separation", "3"},
           {"find-set", "builtin:b3"},
           {"eigs", "builtin:heawood"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

}  // namespace

namespace {

TEST(Cli, DecimalThresholdIsExact) {
  auto dec = json::parse(run({"inertia", "builtin:c6", "--threshold", "0.5"}).out);
  EXPECT_EQ(dec["threshold"], "1/2");
}

}  // namespace
