#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "common.hpp"

using namespace fliess;
using testing_util::S;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string text(std::vector<std::string> args) {
  const Outcome o = run(std::move(args));
  EXPECT_EQ(o.code, 0) << o.err;
  return o.out;
}

Json json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const Outcome o = run(std::move(args));
  EXPECT_EQ(o.code, 0) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j.at("schema"), "1");
  return j;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, SeriesProducts) {
  EXPECT_EQ(text({"shuffle", "x0", "x1"}), "x0 x1 + x1 x0\n");
  EXPECT_EQ(text({"concat", "x0", "x1 + 1"}), "x0 + x0 x1\n");
  EXPECT_EQ(text({"compose", "x0^2 - x1 x0", "1"}), "0\n");
  EXPECT_EQ(text({"--order", "3", "shinv", "2 - 2 x0"}), "1/2 + 1/2 x0 + x0^2 + 3 x0^3 + O(4)\n");
  EXPECT_EQ(text({"lshift", "x0", "x0 + x0 x1 x0"}), "1 + x1 x0\n");
  EXPECT_EQ(series_from_json(json({"shuffle", "x0 - x1", "x0 - x1"})), S("2 x0^2 - 2 x0 x1 - 2 x1 x0 + 2 x1^2"));
}

TEST(Cli, Nullability) {
  EXPECT_EQ(text({"reldeg", "x0 + x0 x1"}), "r = 2, K = 1\n");
  const Json r = json({"reldeg", "x0^2 - x1 x0"});
  EXPECT_TRUE(r.at("relative_degree").is_null());
  EXPECT_EQ(json({"classify", "1 + x1"}).at("verdict"), "NotProper");
  EXPECT_EQ(json({"classify", "x0 + x0 x1"}).at("verdict"), "NotNullable");
  EXPECT_EQ(text({"--order", "4", "nullseries", "x0 + x1 + x0 x1 x0"}), "-1 + x0^2 - 3 x0^4 + O(5)\n");
  EXPECT_TRUE(series_from_json(json({"verifynull", "x0^2 - x1", "x0"})).is_zero());
}

TEST(Cli, Lyndon) {
  EXPECT_EQ(text({"cfl", "x0x1x0"}), "(x0x1)(x0)\n");
  const Json words = json({"lyndon", "--max-len", "4"}).at("words");
  ASSERT_EQ(words.size(), 8u);
  EXPECT_EQ(words[3].at("word"), "x0x0x1");
  EXPECT_EQ(text({"tolyndon", "x0 x1 x0"}), "l0 l2 - 2 l3\n");
  EXPECT_EQ(text({"fromlyndon", "l0 l2"}), "2 x0^2 x1 + x0 x1 x0\n");
}

TEST(Cli, Factoring) {
  EXPECT_EQ(text({"factor", "l0^2 - l1^2"}), "unit: 1\n(l0 - l1)\n(l0 + l1)\n");
  const Json f = json({"factor", "2 l0^2"});
  EXPECT_EQ(f.at("unit"), "2");
  EXPECT_EQ(f.at("factors")[0].at("multiplicity"), 2);
  const Json s = json({"shufflefactor", testing_util::kProduct});
  EXPECT_EQ(s.at("factors").size(), 2u);
  const Json a = json({"--order", "8", "analyze", testing_util::kProduct});
  ASSERT_EQ(a.at("factors").size(), 2u);
  for (const auto& fa : a.at("factors")) EXPECT_EQ(fa.at("report").at("verdict"), "LinearlyNullable");
}

TEST(Cli, Realization) {
  const auto path = write_temp("fliess_cli_test_system.json",
                               R"({"n":3,"z0":["0","0","0"],"g0":[["1"],["z3"],["1"]],)"
                               R"("g1":[["-1"],["-1"],["0"]],"h":"z1 z2"})");
  const Series c = series_from_json(json({"realize", "--file", path.string(), "--order", "4"}));
  EXPECT_EQ(c.as_polynomial(), shuffle(S("x0 - x1"), S("x0^2 - x1")));
  EXPECT_EQ(text({"evalfliess", "x0^2 - x1", "--input", "t", "--order", "4"}), "0\n");
  EXPECT_EQ(text({"evalfliess", "x0 x1", "--input", "1", "--order", "2"}), "t^2/2\n");
  std::filesystem::remove(path);
}

TEST(Cli, ArgumentsFromFiles) {
  const auto path = write_temp("fliess_cli_test_series.json", to_json(S("x0 + x1")).dump());
  EXPECT_EQ(text({"classify", "@" + path.string()}).substr(0, 25), "verdict: LinearlyNullable");
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"shuffle", "x0 +", "x1"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"--format", "yaml", "cfl", "x0"}).code, 2);
  EXPECT_EQ(run({"cfl", "1"}).code, 3);
  EXPECT_EQ(run({"nullseries", "x0 + x0 x1"}).code, 3);
  EXPECT_EQ(run({"shinv", "x0"}).code, 3);
  EXPECT_EQ(run({"realize", "--file", "/nonexistent/system.json"}).code, 3);
  EXPECT_EQ(run({"factor", "l0^9 + l1"}).code, 4);
  const Outcome o = run({"shuffle", "x0 +", "x1"});
  EXPECT_NE(o.err.find("line 1, column 5"), std::string::npos);
}
