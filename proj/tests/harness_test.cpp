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

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "scoreplay/enumerate.hpp"
#include "scoreplay/equality.hpp"
#include "scoreplay/fixtures.hpp"
#include "scoreplay/notation.hpp"
#include "scoreplay/verify.hpp"

namespace {

using namespace scoreplay;

const std::string kFixtures = std::string(SCOREPLAY_DATA_DIR) + "/fixtures.txt";

EnumerationBudget budget(int depth, int branching, std::vector<Score> alphabet) {
  EnumerationBudget b;
  b.max_depth = depth;
  b.max_branching = branching;
  b.score_alphabet = std::move(alphabet);
  return b;
}

int depth(const Game& g) {
  int d = 0;
  for (const Game& o : g.left()) d = std::max(d, depth(o) + 1);
  for (const Game& o : g.right()) d = std::max(d, depth(o) + 1);
  return d;
}

std::vector<std::string> texts(const std::vector<Game>& gs) {
  std::vector<std::string> out;
  for (const Game& g : gs) out.push_back(format_game(g));
  return out;
}

TEST(EnumerateGames, DepthZero) {
  const auto gs = enumerate_games(budget(0, 2, {Score(0)}));
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0], leaf(0));
}

// Direct construction: 3 leaves, then for each root score a left option,
// a right option, or one of each, drawn from the 3 leaves.
TEST(EnumerateGames, DepthOneBranchingOneCount) {
  const auto b = budget(1, 1, score_range(-1, 1));
  const auto gs = enumerate_games(b);
  std::set<std::string> expected;
  for (int s = -1; s <= 1; ++s) {
    expected.insert(format_game(leaf(s)));
    for (int a = -1; a <= 1; ++a) {
      expected.insert(format_game(make_game({leaf(a)}, s, {})));
      expected.insert(format_game(make_game({}, s, {leaf(a)})));
      for (int c = -1; c <= 1; ++c) {
        expected.insert(format_game(make_game({leaf(a)}, s, {leaf(c)})));
      }
    }
  }
  EXPECT_EQ(expected.size(), 48u);
  EXPECT_EQ(gs.size(), 48u);
  EXPECT_EQ(count_games(b), 48u);
  const auto got = texts(gs);
  EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expected);
}

TEST(EnumerateGames, YieldsDistinctGamesWithinBounds) {
  const auto gs = enumerate_games(budget(2, 1, score_range(-1, 1)));
  std::set<const void*> ids;
  for (const Game& g : gs) {
    EXPECT_TRUE(ids.insert(g.id()).second) << format_game(g);
    EXPECT_LE(depth(g), 2);
    EXPECT_LE(g.left().size(), 1u);
    EXPECT_LE(g.right().size(), 1u);
  }
  EXPECT_EQ(gs.size(), count_games(budget(2, 1, score_range(-1, 1))));
}

TEST(EnumerateGames, IsDeterministicInTheSeed) {
  auto b = budget(3, 2, score_range(-2, 2));
  b.max_games = 200;
  b.sample_seed = 9;
  const auto a = texts(enumerate_games(b));
  EXPECT_EQ(a, texts(enumerate_games(b)));
  EXPECT_EQ(a.size(), 200u);
  b.sample_seed = 10;
  EXPECT_NE(a, texts(enumerate_games(b)));
}

TEST(EnumerateGames, TameFilterIsSound) {
  const auto gs = enumerate_games(budget(2, 1, score_range(-1, 1)),
                                  [](const Game& g) { return is_tame(g).is_tame; });
  EXPECT_FALSE(gs.empty());
  for (const Game& g : gs) EXPECT_TRUE(oracle::tame(g)) << format_game(g);
}

TEST(EnumerateUniverse, DepthOneMembers) {
  EnumerationBudget b;
  b.max_depth = 1;
  const auto gs = texts(enumerate_universe(b, Universe()));
  const std::set<std::string> expected{"0", "{1|0|.}", "{.|0|-1}", "{1|0|-1}"};
  EXPECT_EQ(std::set<std::string>(gs.begin(), gs.end()), expected);
  EXPECT_EQ(gs.size(), 4u);
}

TEST(EnumerateUniverse, DepthTwoMatchesShapeCount) {
  EnumerationBudget b;
  b.max_depth = 2;
  const Universe u;
  const auto gs = enumerate_universe(b, u);
  // Normal trees born by day 2 with at most two options a side, counted
  // from the unbounded day-2 list.
  std::size_t shapes = 0;
  for (const NormalGame& n : oracle::born_by(2)) {
    shapes += n.left().size() <= 2 && n.right().size() <= 2;
  }
  EXPECT_EQ(shapes, 121u);
  EXPECT_EQ(gs.size(), shapes);
  EXPECT_EQ(count_universe(b), shapes);
  std::vector<NormalGame> stripped;
  for (const Game& g : gs) {
    ASSERT_TRUE(in_universe(g, u));
    const NormalGame n = strip(g, u);
    EXPECT_EQ(std::find(stripped.begin(), stripped.end(), n), stripped.end());
    stripped.push_back(n);
  }
  EXPECT_EQ(stripped.size(), shapes);
}

TEST(Pairs, SamplingKicksInAboveTheLimit) {
  EXPECT_FALSE(pairs_are_sampled(316));
  EXPECT_TRUE(pairs_are_sampled(317));
  std::uint64_t n = for_each_pair(10, 1, [](std::size_t, std::size_t) {
    return true;
  });
  EXPECT_EQ(n, 100u);
  std::vector<std::pair<std::size_t, std::size_t>> a, b;
  for_each_pair(500, 4, [&](std::size_t i, std::size_t j) {
    a.emplace_back(i, j);
    return true;
  }, 1000);
  for_each_pair(500, 4, [&](std::size_t i, std::size_t j) {
    b.emplace_back(i, j);
    return true;
  }, 1000);
  EXPECT_EQ(a.size(), 1000u);
  EXPECT_EQ(a, b);
}

TEST(Fixtures, BundledSuitePasses) {
  const auto fs = load_fixtures(kFixtures);
  std::vector<FixtureResult> results;
  const SweepReport rep = run_fixture_suite(fs, &results);
  EXPECT_TRUE(rep.ok()) << rep.str();
  EXPECT_EQ(rep.get("pass"), fs.size());
  EXPECT_GT(rep.get("figure"), 0u);
  for (const Fixture& f : fs) {
    EXPECT_FALSE(f.provenance.empty()) << f.id;
    EXPECT_TRUE(f.from_figure() || f.provenance.rfind("search", 0) == 0 ||
                f.provenance.rfind("relabelled figure", 0) == 0)
        << f.id;
  }
}

TEST(Fixtures, NamedPairs) {
  const auto fs = load_fixtures(kFixtures);
  auto find = [&](const std::string& id) {
    auto it = std::find_if(fs.begin(), fs.end(),
                           [&](const Fixture& f) { return f.id == id; });
    EXPECT_NE(it, fs.end()) << id;
    return *it;
  };
  const Fixture l = find("t1-case8-L");
  EXPECT_EQ(l.games[0], parse_game("{2|0|-1}"));
  EXPECT_EQ(outcome(sum(l.games[0], l.games[1])), OutcomeClass::L);
  const Fixture t = find("t1-case8-Ti");
  EXPECT_EQ(outcome(sum(t.games[0], t.games[1])), OutcomeClass::Ti);
  const Fixture n = find("t1-case8-N");
  EXPECT_EQ(n.games[0], parse_game("{2|0|-2}"));
  EXPECT_EQ(outcome(sum(n.games[0], n.games[1])), OutcomeClass::N);
  const Fixture p = find("t1-case8-P");
  EXPECT_EQ(p.games[0], parse_game("{1/2|0|-1/2}"));
  EXPECT_EQ(outcome(sum(p.games[0], p.games[1])), OutcomeClass::P);
}

// Every class of every Table 1 cell appears in some tame fixture.
TEST(Fixtures, RealizeEveryTable1Entry) {
  std::set<std::tuple<OutcomeClass, OutcomeClass, OutcomeClass>> seen;
  for (const Fixture& f : load_fixtures(kFixtures)) {
    if (f.context != FixtureContext::Tame) continue;
    seen.insert({f.first, f.second, f.expected});
    seen.insert({f.second, f.first, f.expected});
  }
  for (OutcomeClass a : kAllOutcomes) {
    for (OutcomeClass b : kAllOutcomes) {
      for (OutcomeClass c : kAllOutcomes) {
        if (table1_cell(a, b).contains(c)) {
          EXPECT_TRUE(seen.count({a, b, c}))
              << outcome_name(a) << "+" << outcome_name(b) << " -> "
              << outcome_name(c);
        }
      }
    }
  }
}

TEST(Fixtures, ParseErrorsCarryTheLine) {
  const char* bad[] = {
      "a | 1 + 1 | tame: L,L -> L\n",
      "a | 1 + {1| | tame: L,L -> L | x\n",
      "a | 1 + 1 | tame L,L L | x\n",
      "a | 1 + 1 | wild: L,L -> L | x\n",
      "a | 1 + 1 | tame: L,Q -> L | x\n",
      "a | 1 + 1 + 1 | tame: L,L -> L | x\n",
  };
  for (const char* text : bad) {
    std::istringstream in(std::string("# header\n\n") + text);
    try {
      parse_fixtures(in);
      ADD_FAILURE() << text;
    } catch (const BoardError& e) {
      EXPECT_EQ(e.line(), 3u) << text;
    }
  }
  EXPECT_THROW(load_fixtures("/nonexistent/fixtures.txt"), Error);
}

TEST(Fixtures, FailingClaimNamesBothClasses) {
  std::istringstream in("wrong | 1 + 1 | tame: L,L -> R | search(test)\n");
  const SweepReport rep = run_fixture_suite(parse_fixtures(in));
  ASSERT_FALSE(rep.ok());
  EXPECT_NE(rep.str().find("wrong expected 'tame: L,L -> R', got L,L -> L"),
            std::string::npos)
      << rep.str();
}

TEST(SweepReport, TextFormIsStable) {
  SweepReport rep("demo", "depth<=1");
  rep.count("b", 2);
  rep.count("a");
  rep.note("hello");
  rep.fail("z", "second", {"0"});
  rep.fail("a", "first");
  EXPECT_EQ(rep.str(),
            "demo: FAILED\nbudget: depth<=1\n  a = 1\n  b = 2\n  hello\n"
            "violations: 2\nviolation a: first\nviolation z: second 0\n");
  SweepReport clean("clean");
  EXPECT_EQ(clean.str(), "clean: ok\nviolations: 0\n");
}

TEST(SweepReport, KeepsACappedList) {
  SweepReport rep("many");
  for (int i = 0; i < 60; ++i) rep.fail("c", std::to_string(100 + i));
  EXPECT_EQ(rep.violation_count(), 60u);
  EXPECT_EQ(rep.violations().size(), SweepReport::kKeptViolations);
  EXPECT_NE(rep.str().find("(10 further violations not listed)"),
            std::string::npos);
}

TEST(EqualBounded, Verdicts) {
  const Game one = parse_game("{1|0|.}");
  EnumerationBudget b;
  b.max_depth = 1;
  const EqualityVerdict same = equal_bounded(one, one, b);
  EXPECT_FALSE(same.distinguished());
  const EqualityVerdict v = equal_bounded(one, leaf(0), b);
  ASSERT_TRUE(v.distinguished());
  EXPECT_EQ(*v.context, leaf(0));
  EXPECT_EQ(v.str(), "distinguished by X = 0: G+X in L, H+X in Ti");
}

TEST(MisereNonzeroSearch, Examples) {
  EnumerationBudget b;
  b.max_depth = 3;
  for (const char* text : {"{-1|0|.}", "{-1|0|1}", "{.|0|1}"}) {
    const EqualityVerdict v = misere_nonzero_search(parse_game(text), b);
    ASSERT_TRUE(v.distinguished()) << text;
    SumScoreSolver solver;
    EXPECT_NE(outcome_report(solver(parse_game(text), *v.context)).outcome,
              outcome(*v.context));
  }
  EXPECT_THROW(misere_nonzero_search(leaf(0), b), std::invalid_argument);
  EXPECT_THROW(misere_nonzero_search(parse_game("{1|0|.}"), b), UniverseError);
}

TEST(Sweeps, SmallBudgets) {
  EnumerationBudget b;
  b.max_depth = 2;
  const Universe u;
  EXPECT_TRUE(verify_table2(b, u).ok());
  EXPECT_TRUE(verify_group(b, u).ok());
  EXPECT_TRUE(verify_mapping(b, u).ok());
  EXPECT_TRUE(verify_final_score_law(b, u).ok());
  EXPECT_TRUE(verify_misere_outcomes(b).ok());
  EnumerationBudget ctx;
  ctx.max_depth = 2;
  EnumerationBudget shallow;
  shallow.max_depth = 1;
  EXPECT_TRUE(verify_misere_nonzero(shallow, ctx).ok());
  EXPECT_TRUE(verify_bounded_order(b, ctx, 200, u).ok());
}

TEST(Sweeps, Table1FailsOnConsecutiveMoveSums) {
  auto b = budget(2, 1, score_range(-1, 1));
  const SweepReport rep = verify_table1(b);
  EXPECT_FALSE(rep.ok());
  EXPECT_GT(rep.violation_count(), 0u);
}

TEST(Sweeps, ReportsAreReproducible) {
  EnumerationBudget b;
  b.max_depth = 2;
  EXPECT_EQ(verify_table2(b, Universe()).str(), verify_table2(b, Universe()).str());
}

}  // namespace
