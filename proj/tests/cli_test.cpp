/*
 * Copyright (c) 2026, The rpi-workbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace rpi::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = CliMain(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("rpi_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, Parse) {
  Result r = Invoke({"parse", Write("p.pi", "b<a>.0 | b(x).x<c>\n")});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["type"], "par");
  EXPECT_EQ(j["right"]["binder"], "x");
}

TEST_F(CliTest, ParseErrorExitsNonZero) {
  Result r = Invoke({"parse", Write("bad.pi", "b<a.")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("column 4"), std::string::npos) << r.err;
}

TEST_F(CliTest, StepsOnTheCommunicationExample) {
  std::string state = Write("s.pi", "b<a>.0 | b(x).x<c>");
  Result r = Invoke({"steps", "--semantics", "rpi", "--state", state, "--dir", "fwd"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["action"]["type"], "out");
  EXPECT_EQ(j[1]["action"]["type"], "in");
  EXPECT_EQ(j[2]["action"]["type"], "tau");
  EXPECT_EQ(j[2]["target"]["text"], "b<a>[1,*] | b(x)[1,*].a^1<c>");
  EXPECT_EQ(j[2]["index"], 2);
}

TEST_F(CliTest, StepPrintsStateThatStepsAccepts) {
  std::string state = Write("s.pi", "b<a>.0 | b(x).x<c>");
  Result r = Invoke({"step", "--state", state, "--id", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "b<a>[1,*] | b(x)[1,*].a^1<c>\n");
  std::string next = Write("n.pi", r.out);
  Result back = Invoke({"steps", "--state", next, "--dir", "bwd"});
  ASSERT_EQ(back.code, 0) << back.err;
  json j = json::parse(back.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["target"]["text"], "b<a> | b(x).x<c>");
}

TEST_F(CliTest, StepOutOfRange) {
  std::string state = Write("s.pi", "b<a>");
  Result r = Invoke({"step", "--state", state, "--id", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("out of range"), std::string::npos);
}

TEST_F(CliTest, ExplicitKeyMustBeFresh) {
  std::string state = Write("s.pi", "b<a>[1,*] | c<d>");
  EXPECT_EQ(Invoke({"steps", "--state", state, "--key", "1"}).code, 2);
  Result r = Invoke({"steps", "--state", state, "--key", "9"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)[0]["key"], 9);
}

TEST_F(CliTest, TraceScript) {
  std::string script = Write("t.txt",
                             "# extrude twice, then undo\n"
                             "semantics bs\n"
                             "load new a.(b<a> | c<a> | a(z))\n"
                             "fwd 0 @4\n"
                             "fwd 0\n"
                             "expect new a{1,4}_4.(b<a>[4,*] | c<a>[1,{*,4}] | a(z))\n"
                             "bwd 0\n"
                             "bwd 0\n"
                             "expect new a.(b<a> | c<a> | a(z))\n"
                             "---\n"
                             "load a<b>\n"
                             "fwd 0\n");
  Result r = Invoke({"trace", "--script", script, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json runs = json::parse(r.out);
  ASSERT_EQ(runs.size(), 2u);
  EXPECT_EQ(runs[0]["steps"].size(), 4u);
  EXPECT_EQ(runs[0]["steps"][1]["cause"], json::parse(R"(["*",4])"));
  EXPECT_EQ(runs[1]["final"]["text"], "a<b>[1,*]");
}

TEST_F(CliTest, TraceScriptErrors) {
  EXPECT_EQ(Invoke({"trace", "--script", Write("a.txt", "load a<b>\nfwd 3\n")}).code, 2);
  EXPECT_EQ(Invoke({"trace", "--script", Write("b.txt", "load a<b>\nexpect 0\n")}).code, 1);
  EXPECT_EQ(Invoke({"trace", "--script", Write("c.txt", "jump 1\n")}).code, 1);
  EXPECT_EQ(Invoke({"trace", "--script", Write("d.txt", "fwd 0\n")}).code, 1);
}

TEST_F(CliTest, CheckLoopOnCorpusDirectory) {
  Result r = Invoke({"check", "loop", "--corpus", RPI_CORPUS_DIR, "--depth", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  json reports = json::parse(r.out);
  ASSERT_EQ(reports.size(), 3u);
  for (const auto& rep : reports) {
    EXPECT_EQ(rep["ok"], true);
    EXPECT_EQ(rep["property"], "loop");
    EXPECT_EQ(rep["entries"], 24);
  }
  EXPECT_NE(r.err.find("loop [bs]: ok"), std::string::npos) << r.err;
}

TEST_F(CliTest, CheckWitnessReplaysThroughTrace) {
  Result r = Invoke({"check", "loop", "--semantics", "bs", "--depth", "2", "--fault", "drop-output-undo"});
  ASSERT_EQ(r.code, 1);
  json rep = json::parse(r.out)[0];
  ASSERT_EQ(rep["ok"], false);
  Result replay = Invoke({"trace", "--script", Write("w.txt", rep["witness"].get<std::string>())});
  EXPECT_EQ(replay.code, 0) << replay.err;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_NE(Invoke({}).code, 0);
  EXPECT_NE(Invoke({"check", "nonsense"}).code, 0);
  EXPECT_NE(Invoke({"steps", "--state", Write("s.pi", "0"), "--semantics", "xyz"}).code, 0);
  EXPECT_EQ(Invoke({"--help"}).code, 0);
}

}  // namespace
}  // namespace rpi::cli
