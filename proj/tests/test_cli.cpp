#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using namespace dyckperm;

namespace {

const char* kExample = "UUDUDUUUDDUDDD;0,0,1,1,1,1,1,2,2,2,0,2,1,0";
const char* kExampleImage = "8,13,6,12,11,14,7,10,2,9,4,5,1,3";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(DYCKPERM_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Enumerate, Permutations) {
  const auto r = run({"enumerate", "--family", "perm", "--n", "3", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 42u);
  EXPECT_EQ(l.front(), "1,4,3,6,2,5");
  EXPECT_EQ(l.back(), "5,6,3,4,1,2");
}

TEST(Enumerate, WeightedPaths) {
  EXPECT_EQ(run({"enumerate", "--family", "wd", "--n", "1"}).out, "UD;0,0\n");
  EXPECT_EQ(lines(run({"enumerate", "--family", "wd", "--n", "3"}).out).size(), 42u);
  EXPECT_EQ(run({"enumerate", "--n", "0"}).out, ";\n");
  EXPECT_EQ(lines(run({"enumerate", "--n", "4", "--limit", "10"}).out).size(), 10u);
  EXPECT_EQ(run({"enumerate", "--n", "4", "--limit", "0"}).out, "");
}

TEST(Enumerate, Records) {
  const auto wd = lines(run({"enumerate", "--family", "wd", "--n", "2", "--format", "records"}).out);
  ASSERT_EQ(wd.size(), 5u);
  EXPECT_EQ(wd[0], R"({"steps":"UUDD","weights":[0,0,0,0]})");
  const auto j = nlohmann::json::parse(wd[4]);
  EXPECT_EQ(j["steps"], "UDUD");
  const auto perm = lines(run({"enumerate", "--family", "perm", "--n", "1", "--format", "records"}).out);
  EXPECT_EQ(perm, (std::vector<std::string>{R"({"perm":[1,2]})"}));
}

TEST(Enumerate, UsageErrors) {
  EXPECT_EQ(run({"enumerate", "--family", "trees", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--n", "-1"}).code, 2);
  EXPECT_EQ(run({"enumerate"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--n", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  const auto r = run({"enumerate", "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Map, Examples) {
  EXPECT_EQ(run({"map", kExample}).out, std::string(kExampleImage) + "\n");
  EXPECT_EQ(run({"map", "UD;0,0"}).out, "1,2\n");
  const auto bad = run({"map", "UUDD;0,1,2,0"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("C1 violated at step 3"), std::string::npos);
  EXPECT_EQ(run({"map", "UDD;0,0,0"}).code, 1);
  EXPECT_EQ(run({"map", "-"}, std::string(kExample) + "\n").out, std::string(kExampleImage) + "\n");
  EXPECT_EQ(run({"map", "-"}).code, 1);
  EXPECT_EQ(run({"map", "UUUDDD", "--split-rule", "floor"}).code, 0);
  EXPECT_EQ(run({"map", "UD", "--split-rule", "middle"}).code, 2);
}

TEST(Map, TraceMirrorsInsertionSteps) {
  const auto r = run({"map", "--trace", kExample});
  ASSERT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 1u + 14);
  EXPECT_EQ(l[0], kExampleImage);
  std::vector<int> jumps;
  for (std::size_t i = 1; i <= 7; ++i) {
    const auto j = nlohmann::json::parse(l[i]);
    EXPECT_EQ(j["side"], "bot");
    if (j["jumped"]) {
      jumps.push_back(j["position"]);
      EXPECT_TRUE(j["distance"].is_null());
    }
  }
  EXPECT_EQ(jumps, (std::vector<int>{1, 2, 6, 8}));
  EXPECT_EQ(nlohmann::json::parse(l[7])["word"], nlohmann::json::array({8, 6, 11, 7, 2, 4, 1}));
  EXPECT_EQ(nlohmann::json::parse(l[8])["side"], "top");
}

TEST(Invert, Examples) {
  EXPECT_EQ(run({"invert", kExampleImage}).out, std::string(kExample) + "\n");
  EXPECT_EQ(run({"invert", "1,2"}).out, "UD;0,0\n");
  const auto r = run({"invert", "2,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not in image: not up-down"), std::string::npos);
  EXPECT_NE(run({"invert", "1,3,2,5,4,7,6,8"}).err.find("contains 1234"), std::string::npos);
  EXPECT_EQ(run({"invert", "1,1"}).code, 1);
  EXPECT_EQ(run({"invert", "x"}).code, 1);
}

TEST(Pipe, MapThenInvertIsIdentity) {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& path : lines(run({"enumerate", "--n", std::to_string(n)}).out)) {
      const auto mapped = run({"map", path});
      ASSERT_EQ(mapped.code, 0) << path;
      const auto back = run({"invert", "-"}, mapped.out);
      ASSERT_EQ(back.code, 0) << path;
      ASSERT_EQ(back.out, path + "\n");
    }
  }
}

TEST(Count, Rows) {
  EXPECT_EQ(run({"count", "--max-n", "0"}).out, "0: 1 (ref 1)\n");
  const auto r = run({"count", "--max-n", "6"});
  EXPECT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 7u);
  EXPECT_EQ(l[3], "3: 42 (ref 42)");
  EXPECT_EQ(l.back(), "6: 87516 (ref 87516)");
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
  EXPECT_EQ(lines(run({"count", "--max-n", "9"}).out)[8].find("(ref"), std::string::npos);
}

TEST(Verify, Records) {
  const auto r = run({"verify", "--suite", "bijectivity", "--max-n", "3"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["checkedBySize"]["3"], 42);

  const auto floor = run({"verify", "--suite", "bijectivity", "--max-n", "4", "--split-rule", "floor"});
  EXPECT_EQ(floor.code, 1);
  EXPECT_EQ(nlohmann::json::parse(floor.out)["verdict"], "fail");

  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "criteria", "--max-n", "1"}).code, 1);
}

TEST(Verify, AllSuitesOneRecordEach) {
  const auto r = run({"verify", "--suite", "all", "--max-n", "2", "--threads", "2"});
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 11u);
  int failing = 0;
  for (const auto& line : l) {
    const auto j = nlohmann::json::parse(line);
    if (j["verdict"] != "pass") {
      ++failing;
      EXPECT_EQ(j["suite"], "criteria");
    }
  }
  EXPECT_EQ(failing, 1);
  EXPECT_EQ(r.code, 1);
}

TEST(Render, Golden) {
  EXPECT_EQ(run({"render", kExample}).out, golden("render_example.txt"));
  EXPECT_EQ(run({"render", "UD;0,0", "--style", "ascii"}).out, golden("render_ud.txt"));
  EXPECT_EQ(run({"render", "UUDX"}).code, 1);
  EXPECT_EQ(run({"render", "UD", "--style", "svg"}).code, 2);
  // Two-digit weights widen every column.
  const WeightedDyckPath wide(DyckPath::parse("UD"), {10, 0});
  EXPECT_EQ(cli::render_ascii(wide), " / \\\n10 0\n");
}

TEST(Output, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"enumerate", "--n", "4"}, {"map", "--trace", kExample}, {"count", "--max-n", "5"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}
