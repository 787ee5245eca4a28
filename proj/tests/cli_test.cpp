// Copyright 2026 The Scoreplay Authors
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

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "scoreplay/cli.hpp"

namespace {

const std::string kData = SCOREPLAY_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = scoreplay::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Eval) {
  Result r = run({"eval", "{1|0|-1}"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "left_final=1 right_final=-1 class=N\n"
            "last mover: Left when Left starts, Right when Right starts\n");
  EXPECT_NE(run({"eval", "0"}).out.find("class=Ti"), std::string::npos);
  EXPECT_NE(run({"eval", "{3|4|2}"}).out.find("left_final=3 right_final=2 class=L"),
            std::string::npos);
}

TEST(Cli, MachineModeMatchesHumanValues) {
  Result m = run({"--machine", "eval", "{1|0|-1}"});
  EXPECT_EQ(m.out,
            "notation={1|0|-1} left_final=1 left_last=Left right_final=-1 "
            "right_last=Right class=N\n");
  EXPECT_EQ(run({"--machine", "tame", "{1|0|-1}"}).out, "tame=true\n");
  EXPECT_EQ(run({"--machine", "tame", "{-1|0|.}"}).out, "tame=false\n");
  EXPECT_EQ(run({"--machine", "cmp", "{1|0|.}", "0"}).out,
            "geq=true leq=false relation=>\n");
  EXPECT_EQ(run({"--machine", "number", "{1|0|.}"}).out,
            "number=true value=1\n");
}

TEST(Cli, Algebra) {
  EXPECT_EQ(run({"sum", "{1|0|.}", "{.|0|-1}"}).out, "{{.|1|0}|0|{0|-1|.}}\n");
  EXPECT_EQ(run({"neg", "{2|1|{0|-1|.}}"}).out, "{{.|1|0}|-1|-2}\n");
  EXPECT_EQ(run({"tame", "{-1|0|.}"}).out, "not tame: path L ends at -1\n");
  EXPECT_EQ(run({"tame", "{1|0|-1}"}).out, "tame\n");
  EXPECT_EQ(run({"cmp", "{1|0|.}", "0"}).out, "G > H in Tame_1\n");
  EXPECT_EQ(run({"canon", "--x", "1", "{{.|1|.},{{.|2|.}|1|.}|0|.}"}).out,
            "{{2|1|.}|0|.}\n");
  EXPECT_EQ(run({"number", "{1|0|.}"}).out, "number 1\n");
  EXPECT_EQ(run({"number", "{1|0|-1}"}).out, "not a number\n");
  EXPECT_EQ(run({"--x", "1/2", "cmp", "{1/2|0|.}", "0"}).out,
            "G > H in Tame_1/2\n");
}

TEST(Cli, Surreal) {
  EXPECT_EQ(run({"surreal", "1"}).out,
            "day 1 in Tame_1: 3 numbers\n-1 {.|0|-1}\n0 0\n1 {1|0|.}\n");
  EXPECT_NE(run({"surreal", "3"}).out.find("15 numbers"), std::string::npos);
  EXPECT_EQ(run({"surreal", "9"}).code, 2);
}

TEST(Cli, Distinguish) {
  Result r = run({"distinguish", "{1|0|.}", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("budget: depth<=3"), std::string::npos);
  EXPECT_NE(r.out.find("distinguished by X = 0: G+X in L, H+X in Ti"),
            std::string::npos);
  Result m = run({"--universe", "tame-neg-x", "distinguish", "{-1|0|.}", "0"});
  EXPECT_NE(m.out.find("distinguished"), std::string::npos);
}

TEST(Cli, Verify) {
  Result f = run({"verify", "fixtures", "--fixtures", kData + "/fixtures.txt"});
  EXPECT_EQ(f.code, 0) << f.out;
  EXPECT_EQ(f.out.rfind("fixtures: ok\n", 0), 0u);
  Result t = run({"verify", "table1", "--depth", "2", "--branching", "1",
               "--scores=-1..1", "--fixtures", kData + "/fixtures.txt"});
  EXPECT_EQ(t.code, 1);
  EXPECT_EQ(t.out.rfind("table1: FAILED\n", 0), 0u);
  EXPECT_NE(t.out.find("budget: depth<=2 branching<=1 scores={-1,0,1}"),
            std::string::npos);
  Result g = run({"verify", "group", "--x", "1", "--depth", "2"});
  EXPECT_EQ(g.code, 0) << g.out;
  EXPECT_EQ(run({"verify", "nothing"}).code, 2);
}

TEST(Cli, Pirates) {
  const std::string board = kData + "/reference.board";
  EXPECT_EQ(run({"pirates", board, "--tree"}).out, "{{.|2|1}|0|{1|-1|.}}\n");
  Result s = run({"pirates", board, "--solve"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out,
            "left_final=1 right_final=1 class=L\n"
            "last mover: Right when Left starts, Left when Right starts\n");
  EXPECT_EQ(run({"pirates", board}).code, 2);
  EXPECT_EQ(run({"pirates", board, "--tree", "--solve"}).code, 2);
  Result missing = run({"pirates", "/nonexistent.board", "--tree"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("cannot open board file"), std::string::npos);
  EXPECT_EQ(run({"pirates", board, "--tree", "--max-states", "1"}).code, 2);
}

TEST(Cli, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"eval"}).code, 2);
  EXPECT_EQ(run({"eval", "0", "1"}).code, 2);
  Result p = run({"eval", "{1|"});
  EXPECT_EQ(p.code, 2);
  EXPECT_EQ(p.err.rfind("error: ", 0), 0u);
  EXPECT_EQ(run({"cmp", "{2|0|.}", "0"}).code, 2);
  EXPECT_EQ(run({"--x", "0", "cmp", "0", "0"}).code, 2);
  EXPECT_EQ(run({"--universe", "wild", "cmp", "0", "0"}).code, 2);
  EXPECT_EQ(run({"--scores", "3..1", "verify", "table1"}).code, 2);
  EXPECT_EQ(run({"--depth", "x", "eval", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
