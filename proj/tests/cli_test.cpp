// Copyright 2026 The dupcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "dupcode/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "dupcode/correct.hpp"
#include "dupcode/transform.hpp"

namespace dupcode::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "dupcode");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

TEST(CliTest, TransformExample) {
  const Result r = call({"transform", "--q", "3", "--k", "3", "1012121"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "101,1112\n");
}

TEST(CliTest, RootExample) {
  const Result r = call({"root", "--q", "3", "--k", "3", "1012012121"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1012121\n");
}

TEST(CliTest, SimulateIsSeedDeterministic) {
  const std::vector<std::string> args{"simulate", "--q", "3", "--k", "3",
                                      "--dups", "2", "--noise", "none",
                                      "--seed", "7", "1012121"};
  const Result a = call(args), b = call(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  // The output word has the input as its root.
  const auto out = lines(a.out);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(root(Word::parse(out[0], 3), 3).str(), "1012121");
}

TEST(CliTest, SimulateTraceReplays) {
  const Result r = call({"simulate", "--q", "2", "--k", "3", "--dups", "3",
                         "--noise", "unrestricted", "--seed", "11",
                         "--format", "json", "110100111"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EventTrace t{Word::parse(j["trace"]["origin"].get<std::string>(), 2), {}};
  for (const auto& e : j["trace"]["events"]) {
    t.events.push_back(parse_event(e.get<std::string>()));
  }
  EXPECT_EQ(t.events.size(), 4u);
  EXPECT_EQ(t.replay(3).str(), j["output"].get<std::string>());
}

TEST(CliTest, StdinInput) {
  const Result r =
      call({"root", "--q", "3", "--k", "3", "--in", "-"}, "1012012121\n1012121\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1012121\n1012121\n");
}

TEST(CliTest, OutFile) {
  const std::string path = ::testing::TempDir() + "dupcode_cli_out.txt";
  const Result r = call({"root", "--q", "3", "--k", "3", "--out", path,
                         "1012012121"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "1012121");
  std::remove(path.c_str());
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  // Positional words and --in conflict.
  EXPECT_EQ(call({"root", "--in", "-", "1010"}, "1010\n").code, kExitUsage);
  // csv is only for bounds tables.
  EXPECT_EQ(call({"transform", "--format", "csv", "1010"}).code, kExitUsage);
  EXPECT_EQ(call({"bounds", "--n", "5", "--format", "csv"}).code, kExitUsage);
  // Out-of-alphabet symbol.
  const Result bad = call({"root", "--q", "2", "--k", "2", "1020"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_FALSE(bad.err.empty());
  // Encoders exist only for ecc, w and c3.
  EXPECT_EQ(call({"encode", "--construction", "cij", "--n", "5", "10"}).code,
            kExitUsage);
  EXPECT_EQ(call({"verify", "--property", "2s", "--n", "4"}).code, kExitUsage);
}

TEST(CliTest, CapExceeded) {
  const Result r = call({"enumerate", "--construction", "irr", "--k", "2",
                         "--n", "12", "--cap", "10"});
  EXPECT_EQ(r.code, kExitCap);
}

TEST(CliTest, EnumerateMatchesLibrary) {
  const Result r = call({"enumerate", "--construction", "cij", "--q", "2",
                         "--k", "2", "--n", "7", "--i", "1", "--j", "2"});
  ASSERT_EQ(r.code, kExitOk);
  const auto code = enumerate_code({DetectKind::kCij, {2, 2, 7, 1, 2}});
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), code.size());
  for (std::size_t i = 0; i < code.size(); ++i) EXPECT_EQ(out[i], code[i].str());

  const Result j = call({"enumerate", "--construction", "cij", "--q", "2",
                         "--k", "2", "--n", "7", "--i", "1", "--j", "2",
                         "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["count"].get<std::size_t>(), code.size());
}

TEST(CliTest, MemberQuery) {
  const Result in = call({"member", "--construction", "cij", "--k", "2",
                          "--format", "json", "11001110111011"});
  EXPECT_EQ(in.code, kExitOk);
  const auto j = nlohmann::json::parse(in.out);
  EXPECT_TRUE(j["member"].get<bool>());
  EXPECT_EQ(j["i"].get<int>(), 0);
  const Result out = call({"member", "--construction", "irr", "--k", "2",
                           "110000"});
  EXPECT_EQ(out.code, kExitCounterexample);
  EXPECT_EQ(out.out, "not a member\n");
}

// Encode then decode with no channel recovers the payload, for every
// construction with an encoder.
TEST(CliTest, EncodeDecodeRoundTrip) {
  struct Case {
    std::vector<std::string> flags;
    std::vector<std::string> payloads;
  };
  const std::vector<Case> cases{
      {{"--construction", "ecc", "--k", "3", "--r", "3"},
       {"0000", "1011", "1111"}},
      {{"--construction", "ecc", "--q", "3", "--k", "3", "--r", "2"},
       {"00", "21"}},
      {{"--construction", "w", "--k", "3"}, {"101", "0110", "1111100"}},
      {{"--construction", "c3", "--k", "2"}, {"110101", "011", "10"}},
      {{"--construction", "c3", "--q", "3", "--k", "3"}, {"2101212"}},
  };
  for (const auto& c : cases) {
    for (const auto& p : c.payloads) {
      std::vector<std::string> enc{"encode"};
      enc.insert(enc.end(), c.flags.begin(), c.flags.end());
      const std::string q = c.flags.size() > 3 && c.flags[2] == "--q"
                                ? c.flags[3]
                                : "2";
      enc.push_back(p);
      const Result e = call(enc);
      ASSERT_EQ(e.code, kExitOk) << e.err;
      std::vector<std::string> dec{"decode"};
      dec.insert(dec.end(), c.flags.begin(), c.flags.end());
      dec.push_back(lines(e.out).at(0));
      const Result d = call(dec);
      ASSERT_EQ(d.code, kExitOk) << d.err;
      EXPECT_EQ(d.out, p + "\n");
    }
  }
}

TEST(CliTest, EccDecodeThroughChannel) {
  const EccCode code = EccCode::build(2, 3, 3);
  const Word c = code.encode(Word::parse("1011", 2));
  Word y = apply_event(c, Duplication{4}, 3);
  y = apply_event(y, Substitution{9, 1}, 3);
  const Result r = call({"decode", "--construction", "ecc", "--k", "3", "--r",
                         "3", "--format", "json", y.str()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["payload"], "1011");
  EXPECT_EQ(j["dedup_steps"].get<int>(), 1);
}

TEST(CliTest, DecodeReportsDetectedError) {
  // Root has the wrong length: detected, exit 2.
  const Result r = call({"decode", "--construction", "cij", "--k", "2", "--n",
                         "7", "--format", "json", "11011"});
  EXPECT_EQ(r.code, kExitCounterexample);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "error");
  EXPECT_FALSE(j.contains("payload"));
}

TEST(CliTest, VerifyExitCodes) {
  EXPECT_EQ(call({"verify", "--property", "1nd", "--k", "3", "--n", "8"}).code,
            kExitOk);
  const Result bad = call({"verify", "--property", "1nd", "--construction",
                           "irr", "--k", "2", "--n", "6", "--format", "json"});
  EXPECT_EQ(bad.code, kExitCounterexample);
  const auto j = nlohmann::json::parse(bad.out);
  EXPECT_EQ(j["status"], "counterexample");
  EXPECT_TRUE(j["witness"]["replays"].get<bool>());
  // A horizon cap below what the roots need leaves the run inconclusive.
  const Result inc = call({"verify", "--property", "1nd", "--k", "2", "--n",
                           "8", "--tmax", "0", "--tcap", "0"});
  EXPECT_EQ(inc.code, kExitInconclusive) << inc.out;
}

TEST(CliTest, BoundsTable) {
  const Result r = call({"bounds", "--q", "2", "--k", "3", "--n", "8",
                         "--table"});
  ASSERT_EQ(r.code, kExitOk);
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 7u);
  EXPECT_EQ(out[0], "n,rll,irr,M,gv_lower,psquared_lower");
  EXPECT_EQ(out[6], "8,149,192,224,11.200000,7.000000");
}

TEST(CliTest, BoundsJson) {
  const Result r = call({"bounds", "--q", "2", "--k", "3", "--n", "12",
                         "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["irr_count"], "2192");
  EXPECT_EQ(j["M"], "2608");
  EXPECT_EQ(j["rll_counts"].size(), 13u);
}

TEST(CliTest, HelpDocumentsExitCodes) {
  const Result r = call({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Exit codes"), std::string::npos);
}

}  // namespace
}  // namespace dupcode::cli
