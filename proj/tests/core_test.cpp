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

#include <string>
#include <vector>

#include "oracles.hpp"
#include "scoreplay/enumerate.hpp"
#include "scoreplay/game.hpp"
#include "scoreplay/minimax.hpp"
#include "scoreplay/notation.hpp"
#include "scoreplay/score.hpp"

namespace {

using namespace scoreplay;

std::vector<Game> sample(int depth, std::uint64_t games, std::uint64_t seed) {
  EnumerationBudget b;
  b.max_depth = depth;
  b.score_alphabet = score_range(-2, 2);
  b.max_games = games;
  b.sample_seed = seed;
  return enumerate_games(b);
}

TEST(Score, ParsesRationalsAndDecimals) {
  EXPECT_EQ(Score::parse("3"), Score(3));
  EXPECT_EQ(Score::parse("-7"), Score(-7));
  EXPECT_EQ(Score::parse("1/2"), Score(1, 2));
  EXPECT_EQ(Score::parse("2/4"), Score(1, 2));
  EXPECT_EQ(Score::parse("2.5"), Score(5, 2));
  EXPECT_EQ(Score::parse("-0.25"), Score(-1, 4));
  EXPECT_EQ(Score::parse("010"), Score(10));
  EXPECT_EQ(Score::parse("1/08"), Score(1, 8));
  EXPECT_EQ(Score::parse("0.5"), Score(1, 2));
  EXPECT_EQ(Score(1, 3) + Score(1, 6), Score(1, 2));
}

TEST(Score, RejectsMalformedLiterals) {
  for (const char* bad : {"", "1/0", "abc", "1//2", "1.", "--1", "1 2"}) {
    EXPECT_THROW(Score::parse(bad), ParseError) << bad;
  }
}

TEST(Notation, RoundTripsCanonicalText) {
  for (const char* text :
       {"0", "-1", "1/2", "{1|0|-1}", "{.|0|.}", "{3|4|2}",
        "{{.|1|0}|0|{0|-1|.}}", "{{3|2|1},0|0|.}", "{.|2|{.|0|-2,2}}"}) {
    const Game g = parse_game(text);
    const std::string printed = format_game(g);
    EXPECT_EQ(parse_game(printed), g) << text;
  }
  EXPECT_EQ(format_game(parse_game("{.|0|.}")), "0");
  EXPECT_EQ(format_game(parse_game("{ {.|3|.} | 4 | {.|2|.} }")), "{3|4|2}");
}

TEST(Notation, OptionOrderDoesNotMatterButMultiplicityDoes) {
  EXPECT_EQ(parse_game("{1,2|0|.}"), parse_game("{2,1|0|.}"));
  EXPECT_NE(parse_game("{1,1|0|.}"), parse_game("{1|0|.}"));
  EXPECT_EQ(format_game(parse_game("{1,1|0|.}")), "{1,1|0|.}");
}

TEST(Notation, ReportsErrorOffsets) {
  try {
    parse_game("{1|0|-1");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
  EXPECT_THROW(parse_game("{1|"), ParseError);
  EXPECT_THROW(parse_game("{1|0|-1}}"), ParseError);
  EXPECT_THROW(parse_game("{1 0 -1}"), ParseError);
}

TEST(Game, StructuralEqualityIsIdentity) {
  const Game a = parse_game("{1|0|-1}");
  const Game b = make_game({leaf(1)}, 0, {leaf(-1)});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.id(), b.id());
  EXPECT_NE(a, parse_game("{1|0|-2}"));
}

TEST(Sum, ExpandsOptionsOnExamples) {
  EXPECT_EQ(format_game(sum(parse_game("{1|0|.}"), parse_game("{.|0|-1}"))),
            "{{.|1|0}|0|{0|-1|.}}");
  EXPECT_EQ(sum(leaf(2), leaf(-3)), leaf(-1));
}

TEST(Sum, AgreesWithUnsharedOracleAndCommutes) {
  const auto gs = sample(2, 120, 11);
  for (std::size_t i = 0; i < gs.size(); i += 7) {
    for (std::size_t j = 0; j < gs.size(); j += 5) {
      const Game s = sum(gs[i], gs[j]);
      EXPECT_EQ(s, oracle::plain_sum(gs[i], gs[j]));
      EXPECT_EQ(s, sum(gs[j], gs[i]));
    }
  }
}

TEST(Sum, IsAssociative) {
  const auto gs = sample(1, 40, 5);
  for (std::size_t i = 0; i + 2 < gs.size(); i += 3) {
    EXPECT_EQ(sum(sum(gs[i], gs[i + 1]), gs[i + 2]),
              sum(gs[i], sum(gs[i + 1], gs[i + 2])));
  }
}

TEST(Negate, IsAnInvolutionAndMatchesOracle) {
  for (const Game& g : sample(3, 300, 3)) {
    EXPECT_EQ(negate(negate(g)), g);
    EXPECT_EQ(negate(g), oracle::plain_negate(g));
  }
  EXPECT_EQ(format_game(negate(parse_game("{2|1|{0|-1|.}}"))),
            "{{.|1|0}|-1|-2}");
}

TEST(Translate, ShiftsEveryNode) {
  EXPECT_EQ(translate(parse_game("{1|0|-1}"), 2), parse_game("{3|2|1}"));
}

TEST(FinalScores, MatchesExamples) {
  const FinalScores f = final_scores(parse_game("{1|0|-1}"));
  EXPECT_EQ(f.left_first, Score(1));
  EXPECT_EQ(f.right_first, Score(-1));
  EXPECT_EQ(f.left_first_last_mover, Player::Left);
  EXPECT_EQ(f.right_first_last_mover, Player::Right);

  const FinalScores z = final_scores(leaf(0));
  EXPECT_EQ(z.left_first, Score(0));
  EXPECT_FALSE(z.left_first_last_mover.has_value());
  EXPECT_FALSE(z.right_first_last_mover.has_value());

  const FinalScores t = final_scores(parse_game("{3|4|2}"));
  EXPECT_EQ(t.left_first, Score(3));
  EXPECT_EQ(t.right_first, Score(2));
  EXPECT_EQ(outcome(parse_game("{3|4|2}")), OutcomeClass::L);
}

TEST(FinalScores, MatchesPlainMinimaxOracle) {
  for (const Game& g : sample(3, 2000, 17)) {
    const FinalScores f = final_scores(g);
    ASSERT_EQ(f.left_first, oracle::final_score(g, Player::Left))
        << format_game(g);
    ASSERT_EQ(f.right_first, oracle::final_score(g, Player::Right))
        << format_game(g);
    EXPECT_EQ(outcome_name(outcome(g)), oracle::class_of(g));
  }
}

TEST(FinalScores, LastMoverIsStuckOnlyAtRoot) {
  for (const Game& g : sample(3, 500, 23)) {
    const FinalScores f = final_scores(g);
    EXPECT_EQ(f.left_first_last_mover.has_value(), !g.left().empty());
    EXPECT_EQ(f.right_first_last_mover.has_value(), !g.right().empty());
  }
}

TEST(FinalScores, TieBreakPrefersMovingLast) {
  // Both Left options end at 1; only the second lets Left move last.
  const Game g = parse_game("{{.|2|1},1|0|.}");
  const FinalScores f = final_scores(g);
  EXPECT_EQ(f.left_first, Score(1));
  EXPECT_EQ(f.left_first_last_mover, Player::Left);
}

TEST(FinalScores, NegationMirrorsScores) {
  for (const Game& g : sample(3, 400, 29)) {
    const FinalScores f = final_scores(g);
    const FinalScores n = final_scores(negate(g));
    EXPECT_EQ(n.left_first, -f.right_first);
    EXPECT_EQ(n.right_first, -f.left_first);
    EXPECT_EQ(outcome(negate(g)), mirror(outcome(g)));
  }
}

TEST(SumScoreSolver, AgreesWithBuiltSum) {
  const auto gs = sample(2, 200, 31);
  SumScoreSolver solver;
  for (std::size_t i = 0; i < gs.size(); i += 3) {
    for (std::size_t j = 0; j < gs.size(); j += 4) {
      const FinalScores& a = solver(gs[i], gs[j]);
      const FinalScores b = final_scores(sum(gs[i], gs[j]));
      EXPECT_EQ(a.left_first, b.left_first);
      EXPECT_EQ(a.right_first, b.right_first);
      EXPECT_EQ(a.left_first_last_mover, b.left_first_last_mover);
      EXPECT_EQ(a.right_first_last_mover, b.right_first_last_mover);
    }
  }
}

TEST(Outcome, ClassifiesEverySignPair) {
  const char* expected[3][3] = {
      // right sign -1, 0, +1; rows are left sign -1, 0, +1
      {"R", "R", "P"},
      {"R", "Ti", "L"},
      {"N", "L", "L"},
  };
  for (int l = -1; l <= 1; ++l) {
    for (int r = -1; r <= 1; ++r) {
      EXPECT_EQ(outcome_name(classify(l, r)), expected[l + 1][r + 1]);
      EXPECT_EQ(oracle::class_of(l, r), expected[l + 1][r + 1]);
    }
  }
}

TEST(Outcome, NamesRoundTrip) {
  for (OutcomeClass c : kAllOutcomes) {
    EXPECT_EQ(parse_outcome(outcome_name(c)), c);
  }
  EXPECT_FALSE(parse_outcome("X").has_value());
}

TEST(MachineRecord, HasStableFieldOrder) {
  const Game g = parse_game("{1|0|-1}");
  EXPECT_EQ(machine_record(g, outcome_report(g)),
            "notation={1|0|-1} left_final=1 left_last=Left right_final=-1 "
            "right_last=Right class=N");
}

}  // namespace
