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

// Verification sweeps over enumerated games. Each returns a SweepReport
// with counts, notes and replayable counterexamples.

#ifndef SCOREPLAY_VERIFY_HPP_
#define SCOREPLAY_VERIFY_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scoreplay/enumerate.hpp"
#include "scoreplay/equality.hpp"
#include "scoreplay/fixtures.hpp"
#include "scoreplay/game.hpp"
#include "scoreplay/minimax.hpp"
#include "scoreplay/normal_play.hpp"
#include "scoreplay/notation.hpp"
#include "scoreplay/report.hpp"
#include "scoreplay/tame.hpp"
#include "scoreplay/tamex.hpp"

namespace scoreplay {

namespace detail {

inline std::string cls(OutcomeClass c) { return std::string(outcome_name(c)); }

inline OutcomeClass sum_outcome(const Game& g, const Game& h) {
  SumScoreSolver solver;
  return outcome_report(solver(g, h)).outcome;
}

// Observed classes of G + H per (class G, class H).
class CellTally {
 public:
  void add(OutcomeClass g, OutcomeClass h, OutcomeClass s) {
    cells_[{g, h}].insert(s);
  }
  OutcomeSet seen(OutcomeClass g, OutcomeClass h) const {
    auto it = cells_.find({g, h});
    return it == cells_.end() ? OutcomeSet{} : it->second;
  }
  template <class Cell>
  void report(SweepReport& rep, Cell&& cell) const {
    for (const auto& [key, set] : cells_) {
      rep.note(cls(key.first) + "+" + cls(key.second) + ": seen " +
               set.str() + " allowed " + cell(key.first, key.second).str());
    }
  }

 private:
  std::map<std::pair<OutcomeClass, OutcomeClass>, OutcomeSet> cells_;
};

inline void note_sampling(SweepReport& rep, std::size_t games,
                          const EnumerationBudget& b, std::uint64_t total,
                          bool pairs = true) {
  rep.count("games", games);
  if (b.max_games && total > *b.max_games) {
    rep.note("game space (" +
             (total == kSaturated ? std::string("> 2^64")
                                  : std::to_string(total)) +
             ") exceeds max_games, seeded sample used");
  }
  if (pairs && pairs_are_sampled(games, b.max_pairs)) {
    rep.note("pairs sampled: " + std::to_string(b.max_pairs) + " of " +
             std::to_string(games) + "^2");
  }
}

inline std::vector<Game> tame_games(const EnumerationBudget& b) {
  return enumerate_games(b, [](const Game& g) { return is_tame(g).is_tame; });
}

}  // namespace detail

// Table 1 containment over pairs of enumerated tame games, plus a replay
// of the tame-game fixtures when given.
inline SweepReport verify_table1(const EnumerationBudget& budget,
                                 const std::vector<Fixture>* fixtures =
                                     nullptr) {
  const EnumerationBudget b = with_sweep_cap(budget);
  SweepReport rep("table1", b.describe());
  const std::vector<Game> games = detail::tame_games(b);
  detail::note_sampling(rep, games.size(), b, count_games(b));
  std::vector<OutcomeClass> classes;
  for (const Game& g : games) classes.push_back(outcome(g));
  detail::CellTally tally;
  const std::uint64_t pairs = for_each_pair(
      games.size(), b.seed(),
      [&](std::size_t i, std::size_t j) {
        const OutcomeClass s = detail::sum_outcome(games[i], games[j]);
        tally.add(classes[i], classes[j], s);
        if (!table1_cell(classes[i], classes[j]).contains(s)) {
          rep.fail("table1",
                   detail::cls(classes[i]) + "+" + detail::cls(classes[j]) +
                       " gave " + detail::cls(s),
                   {format_game(games[i]), format_game(games[j])});
        }
        return true;
      },
      b.max_pairs);
  rep.count("pairs", pairs);
  tally.report(rep, table1_cell);
  for (OutcomeClass g : kAllOutcomes) {
    for (OutcomeClass h : kAllOutcomes) {
      const OutcomeSet printed = table1_cell_as_printed(g, h);
      const OutcomeSet seen = tally.seen(g, h);
      for (OutcomeClass c : kAllOutcomes) {
        if (seen.contains(c) && !printed.contains(c)) {
          rep.note("printed cell " + detail::cls(g) + "+" + detail::cls(h) +
                   " " + printed.str() + " omits observed " + detail::cls(c));
        }
      }
    }
  }
  if (fixtures) {
    std::vector<Fixture> mine;
    for (const Fixture& f : *fixtures) {
      if (f.context != FixtureContext::TameX) mine.push_back(f);
    }
    rep.merge(run_fixture_suite(mine));
  }
  return rep;
}

inline const Game& nonclosure_left() {
  static const Game g = parse_game("{2|0|.}");
  return g;
}
inline const Game& nonclosure_right() {
  static const Game h = parse_game("{.|0|-1}");
  return h;
}

// Identity, inverse and non-closure checks for tame games.
inline SweepReport verify_monoid(const EnumerationBudget& budget) {
  const EnumerationBudget b = with_sweep_cap(budget);
  SweepReport rep("monoid", b.describe());
  const std::vector<Game> games = detail::tame_games(b);
  detail::note_sampling(rep, games.size(), b, count_games(b));
  std::vector<OutcomeClass> classes;
  std::vector<Game> identities;
  for (const Game& g : games) {
    classes.push_back(outcome(g));
    if (classes.back() == OutcomeClass::Ti && second_player_moves_last(g)) {
      identities.push_back(g);
    }
  }
  rep.count("identity_candidates", identities.size());

  // (1) G + X ~ G for X in Ti on which the second player always moves last.
  std::uint64_t checked = 0;
  for_each_pair(
      games.size(), identities.size(), b.seed() + 1,
      [&](std::size_t i, std::size_t j) {
        ++checked;
        const OutcomeClass s = detail::sum_outcome(games[i], identities[j]);
        if (s != classes[i]) {
          rep.fail("identity",
                   detail::cls(classes[i]) + " became " + detail::cls(s),
                   {format_game(games[i]), format_game(identities[j])});
        }
        return true;
      },
      b.max_pairs);
  rep.count("identity_pairs", checked);

  // (2) G + (-G) + X ~ X.
  checked = 0;
  std::vector<std::optional<Game>> zeros(games.size());
  for_each_pair(
      games.size(), b.seed() + 2,
      [&](std::size_t i, std::size_t j) {
        ++checked;
        if (!zeros[i]) zeros[i] = sum(games[i], negate(games[i]));
        const OutcomeClass s = detail::sum_outcome(*zeros[i], games[j]);
        if (s != classes[j]) {
          rep.fail("inverse",
                   detail::cls(classes[j]) + " became " + detail::cls(s),
                   {format_game(games[i]), format_game(games[j])});
        }
        return true;
      },
      b.max_pairs);
  rep.count("inverse_pairs", checked);

  // (3) A sum of two tame games that is not tame.
  const Game w = sum(nonclosure_left(), nonclosure_right());
  const TameCertificate cert = is_tame(w);
  const bool parts_tame =
      is_tame(nonclosure_left()).is_tame && is_tame(nonclosure_right()).is_tame;
  if (!parts_tame || cert.is_tame || !replay_violation(w, *cert.violation)) {
    rep.fail("nonclosure", "witness sum is tame or parts are not",
             {format_game(nonclosure_left()), format_game(nonclosure_right())});
  } else {
    rep.note("nonclosure: " + format_game(w) + " " + cert.str());
  }
  return rep;
}

namespace detail {

inline std::vector<Game> members(const EnumerationBudget& b,
                                 const Universe& u) {
  return enumerate_universe(b, u);
}

// Left final in {x, 0} (x iff Left moves last); Right final in {-x, 0}
// (-x iff Right moves last). Misère mode mirrors the signs.
inline bool final_score_law(const FinalScores& f, const Universe& u) {
  const Score left_win = u.delta(Player::Left);  // x, or -x in misère
  const Score right_win = u.delta(Player::Right);
  const bool left_last =
      f.left_first_last_mover.value_or(Player::Right) == Player::Left;
  const bool right_last =
      f.right_first_last_mover.value_or(Player::Left) == Player::Right;
  const bool l = left_last ? f.left_first == left_win : f.left_first.is_zero();
  const bool r =
      right_last ? f.right_first == right_win : f.right_first.is_zero();
  return l && r;
}

}  // namespace detail

// Table 2 containment and emptiness of P over universe members.
inline SweepReport verify_table2(const EnumerationBudget& budget,
                                 const Universe& u,
                                 const std::vector<Fixture>* fixtures =
                                     nullptr) {
  detail::require_normal_mode(u, "the Tame_x outcome table");
  const EnumerationBudget b = with_sweep_cap(budget);
  SweepReport rep("table2", b.describe() + " universe=" + u.name());
  const std::vector<Game> games = detail::members(b, u);
  detail::note_sampling(rep, games.size(), b, count_universe(b));
  std::vector<OutcomeClass> classes;
  for (const Game& g : games) {
    classes.push_back(outcome(g));
    rep.count("class_" + detail::cls(classes.back()));
    if (classes.back() == OutcomeClass::P) {
      rep.fail("p-empty", "member in P", {format_game(g)});
    }
  }
  detail::CellTally tally;
  const std::uint64_t pairs = for_each_pair(
      games.size(), b.seed(),
      [&](std::size_t i, std::size_t j) {
        if (classes[i] == OutcomeClass::P || classes[j] == OutcomeClass::P) {
          return true;
        }
        const OutcomeClass s = detail::sum_outcome(games[i], games[j]);
        tally.add(classes[i], classes[j], s);
        if (!table2_cell(classes[i], classes[j]).contains(s)) {
          rep.fail("table2",
                   detail::cls(classes[i]) + "+" + detail::cls(classes[j]) +
                       " gave " + detail::cls(s),
                   {format_game(games[i]), format_game(games[j])});
        }
        return true;
      },
      b.max_pairs);
  rep.count("pairs", pairs);
  tally.report(rep, table2_cell);
  if (fixtures) {
    std::vector<Fixture> mine;
    for (const Fixture& f : *fixtures) {
      if (f.context == FixtureContext::TameX) mine.push_back(f);
    }
    rep.merge(run_fixture_suite(mine));
  }
  return rep;
}

// Final-score law for every member: Left's final score is x or 0, and x
// exactly when Left moves last; dually for Right.
inline SweepReport verify_final_score_law(const EnumerationBudget& budget,
                                          const Universe& u) {
  const EnumerationBudget b = with_sweep_cap(budget);
  SweepReport rep("final-score-law", b.describe() + " universe=" + u.name());
  const std::vector<Game> games = detail::members(b, u);
  detail::note_sampling(rep, games.size(), b, count_universe(b), false);
  FinalScoreSolver solver;
  for (const Game& g : games) {
    const FinalScores& f = solver(g);
    if (!detail::final_score_law(f, u)) {
      rep.fail("final-score-law",
               "finals " + f.left_first.str() + "/" +
                   last_mover_name(f.left_first_last_mover) + " " +
                   f.right_first.str() + "/" +
                   last_mover_name(f.right_first_last_mover),
               {format_game(g)});
    }
  }
  return rep;
}

// Closure, identity, inverse, Table 2 and the final-score law in Tame_x.
inline SweepReport verify_group(const EnumerationBudget& budget,
                                const Universe& u,
                                const std::vector<Fixture>* fixtures =
                                    nullptr) {
  detail::require_normal_mode(u, "the group check");
  const EnumerationBudget b = with_sweep_cap(budget);
  SweepReport rep("group", b.describe() + " universe=" + u.name());
  const std::vector<Game> games = detail::members(b, u);
  detail::note_sampling(rep, games.size(), b, count_universe(b));
  std::vector<OutcomeClass> classes;
  std::vector<std::size_t> ties;
  for (std::size_t i = 0; i < games.size(); ++i) {
    classes.push_back(outcome(games[i]));
    if (classes.back() == OutcomeClass::Ti) ties.push_back(i);
  }

  // Inverse: -G is a member and G + (-G) is a tie.
  for (const Game& g : games) {
    const Game ng = negate(g);
    if (!in_universe(ng, u)) {
      rep.fail("inverse", "negation left the universe", {format_game(g)});
    }
    const OutcomeClass s = detail::sum_outcome(g, ng);
    if (s != OutcomeClass::Ti) {
      rep.fail("inverse", "G+(-G) in " + detail::cls(s), {format_game(g)});
    }
  }
  rep.count("inverse_checked", games.size());

  // Closure on pairs.
  std::uint64_t closure = 0;
  for_each_pair(
      games.size(), b.seed() + 1,
      [&](std::size_t i, std::size_t j) {
        ++closure;
        if (!in_universe(sum(games[i], games[j]), u)) {
          rep.fail("closure", "sum left the universe",
                   {format_game(games[i]), format_game(games[j])});
        }
        return true;
      },
      b.max_pairs);
  rep.count("closure_pairs", closure);

  // Identity: adding a tie member changes no outcome.
  std::uint64_t identity = 0;
  for_each_pair(
      games.size(), ties.size(), b.seed() + 2,
      [&](std::size_t i, std::size_t j) {
        ++identity;
        const Game& t = games[ties[j]];
        const OutcomeClass s = detail::sum_outcome(games[i], t);
        if (s != classes[i]) {
          rep.fail("identity",
                   detail::cls(classes[i]) + " became " + detail::cls(s),
                   {format_game(games[i]), format_game(t)});
        }
        return true;
      },
      b.max_pairs);
  rep.count("identity_pairs", identity);
  rep.count("tie_members", ties.size());

  rep.merge(verify_table2(budget, u, fixtures));
  rep.merge(verify_final_score_law(budget, u));
  return rep;
}

// strip/embed round trips, the sum homomorphism and canonical forms.
inline SweepReport verify_mapping(const EnumerationBudget& budget,
                                  const Universe& u) {
  const EnumerationBudget b = with_sweep_cap(budget);
  SweepReport rep("mapping", b.describe() + " universe=" + u.name());
  const std::vector<NormalGame> shapes = enumerate_shapes(b);
  detail::note_sampling(rep, shapes.size(), b, count_universe(b));
  NormalOracle oracle;
  std::vector<Game> games;
  for (const NormalGame& n : shapes) {
    const Game g = embed(n, u);
    games.push_back(g);
    if (!in_universe(g, u)) {
      rep.fail("embed", "embedding is not a member", {format_normal(n)});
    }
    if (!(strip(g, u) == n)) {
      rep.fail("strip-embed", "strip(embed(n)) differs", {format_normal(n)});
    }
    if (!(embed(strip(g, u), u) == g)) {
      rep.fail("embed-strip", "embed(strip(g)) differs", {format_game(g)});
    }
  }
  rep.count("round_trips", shapes.size());
  if (u.mode == UniverseMode::Normal) {
    TameX tx(u);
    for (const Game& g : games) {
      const Game c = tx.canonical(g);
      const NormalGame expect = oracle.canonical(strip(g, u));
      if (!in_universe(c, u) || !(strip(c, u) == expect)) {
        rep.fail("canonical",
                 "canonical form " + format_game(c) + " vs normal " +
                     format_normal(expect),
                 {format_game(g)});
      }
    }
    rep.count("canonical_checked", games.size());
  }
  std::uint64_t pairs = 0;
  for_each_pair(
      games.size(), b.seed() + 3,
      [&](std::size_t i, std::size_t j) {
        ++pairs;
        const NormalGame lhs = strip(sum(games[i], games[j]), u);
        const NormalGame rhs = oracle.sum(shapes[i], shapes[j]);
        if (!(lhs == rhs)) {
          rep.fail("sum-lemma", "strip(G+H) differs from f(G)+f(H)",
                   {format_game(games[i]), format_game(games[j])});
        }
        return true;
      },
      b.max_pairs);
  rep.count("sum_pairs", pairs);
  return rep;
}

// Searches Tame_{-x} pairs for every (class G, class H, class G+H) triple.
struct MisereMatrix {
  std::array<std::array<std::array<bool, 5>, 5>, 5> found{};

  static std::size_t index(OutcomeClass c) { return static_cast<std::size_t>(c); }
  bool has(OutcomeClass a, OutcomeClass b, OutcomeClass c) const {
    return found[index(a)][index(b)][index(c)];
  }
  int count() const {
    int n = 0;
    for (const auto& a : found)
      for (const auto& b : a)
        for (bool c : b) n += c ? 1 : 0;
    return n;
  }
};

inline SweepReport verify_misere_outcomes(const EnumerationBudget& budget,
                                          const Score& x = Score(1),
                                          MisereMatrix* out = nullptr) {
  const Universe u(x, UniverseMode::Misere);
  const EnumerationBudget b = with_sweep_cap(budget);
  SweepReport rep("misere", b.describe() + " universe=" + u.name());
  const std::vector<Game> games = detail::members(b, u);
  detail::note_sampling(rep, games.size(), b, count_universe(b));
  std::map<OutcomeClass, std::vector<Game>> by_class;
  FinalScoreSolver solver;
  for (const Game& g : games) {
    const FinalScores& f = solver(g);
    if (!detail::final_score_law(f, u)) {
      rep.fail("misere-law", "finals outside {0, -x} / {0, x}",
               {format_game(g)});
    }
    const OutcomeClass c = outcome_report(f).outcome;
    by_class[c].push_back(g);
    rep.count("class_" + detail::cls(c));
  }
  for (auto& [c, v] : by_class) {
    std::stable_sort(v.begin(), v.end(), [](const Game& p, const Game& q) {
      return p.dag_size() < q.dag_size();
    });
  }
  // An even share of the pair budget for every class pair.
  const std::uint64_t per = std::max<std::uint64_t>(1, b.max_pairs / 25);
  MisereMatrix m;
  for (const auto& [cg, gs] : by_class) {
    for (const auto& [ch, hs] : by_class) {
      std::uint64_t tried = 0;
      for_each_pair(
          gs.size(), hs.size(), b.seed(),
          [&](std::size_t i, std::size_t j) {
            ++tried;
            const OutcomeClass s = detail::sum_outcome(gs[i], hs[j]);
            m.found[MisereMatrix::index(cg)][MisereMatrix::index(ch)]
                   [MisereMatrix::index(s)] = true;
            return true;
          },
          per);
      rep.count("pairs", tried);
    }
  }
  int possible = 0;
  int found_possible = 0;
  for (OutcomeClass a : kAllOutcomes) {
    for (OutcomeClass c2 : kAllOutcomes) {
      for (OutcomeClass s : kAllOutcomes) {
        const bool involves_n = a == OutcomeClass::N ||
                                c2 == OutcomeClass::N || s == OutcomeClass::N;
        if (involves_n) continue;
        ++possible;
        if (m.has(a, c2, s)) {
          ++found_possible;
        } else {
          rep.note("missing " + detail::cls(a) + "+" + detail::cls(c2) +
                   " -> " + detail::cls(s));
        }
      }
    }
  }
  rep.count("triples_found", static_cast<std::uint64_t>(m.count()));
  rep.count("triples_without_N", static_cast<std::uint64_t>(possible));
  rep.count("triples_without_N_found",
            static_cast<std::uint64_t>(found_possible));
  rep.note(
      "N is empty in Tame_-x: Left moving first ends at -x or 0, Right "
      "moving first at x or 0, so no triple involving N can occur");
  if (out) *out = m;
  return rep;
}

// Every nonzero member within `members` is separated from 0 by some
// member of `contexts`.
inline SweepReport verify_misere_nonzero(const EnumerationBudget& members,
                                         const EnumerationBudget& contexts,
                                         const Score& x = Score(1)) {
  const Universe u(x, UniverseMode::Misere);
  SweepReport rep("misere-nonzero", "members: " + members.describe() +
                                        "; contexts: " + contexts.describe());
  std::uint64_t checked = 0;
  std::uint64_t tried = 0;
  for_each_member(members, u, [&](const Game& g) {
    if (g == leaf(0)) return true;
    ++checked;
    const EqualityVerdict v = misere_nonzero_search(g, contexts, x);
    tried += v.contexts_tried;
    if (!v.distinguished()) {
      rep.fail("nonzero", "no distinguishing context within budget",
               {format_game(g)});
    }
    return true;
  });
  rep.count("members", checked);
  rep.count("contexts_tried", tried);
  return rep;
}

// Bounded direct check of the context definition of >=_x against geq_x:
// when geq_x holds, no context X may have H+X in O but G+X not in O, for
// O among L_>, R_>, L_>=, R_>=.
struct OrderCheck {
  bool refuted = false;
  std::optional<Game> context;
};

inline OrderCheck bounded_geq_check(const Game& g, const Game& h,
                                    const std::vector<Game>& contexts) {
  for (const Game& x : contexts) {
    SumScoreSolver solver;
    const FinalScores fg = solver(g, x);
    const FinalScores fh = solver(h, x);
    const int gl = fg.left_first.sign(), gr = fg.right_first.sign();
    const int hl = fh.left_first.sign(), hr = fh.right_first.sign();
    const bool bad = (hl > 0 && gl <= 0) || (hr > 0 && gr <= 0) ||
                     (hl >= 0 && gl < 0) || (hr >= 0 && gr < 0);
    if (bad) return OrderCheck{true, x};
  }
  return {};
}

inline SweepReport verify_bounded_order(const EnumerationBudget& pair_budget,
                                        const EnumerationBudget& ctx_budget,
                                        std::uint64_t pairs,
                                        const Universe& u) {
  detail::require_normal_mode(u, "the order check");
  SweepReport rep("bounded-order", "pairs from: " + pair_budget.describe() +
                                       "; contexts: " + ctx_budget.describe());
  const std::vector<Game> games = enumerate_universe(pair_budget, u);
  const std::vector<Game> contexts = enumerate_universe(ctx_budget, u);
  rep.count("games", games.size());
  rep.count("contexts", contexts.size());
  TameX tx(u);
  std::uint64_t done = 0;
  for_each_pair(
      games.size(), pair_budget.seed(),
      [&](std::size_t i, std::size_t j) {
        ++done;
        const bool geq = tx.geq(games[i], games[j]);
        const OrderCheck c = bounded_geq_check(games[i], games[j], contexts);
        rep.count(geq ? "geq_true" : "geq_false");
        if (!geq && c.refuted) rep.count("geq_false_refuted");
        if (geq && c.refuted) {
          rep.fail("order", "geq_x holds but context " +
                                format_game(*c.context) + " refutes it",
                   {format_game(games[i]), format_game(games[j])});
        }
        return true;
      },
      pairs);
  rep.count("pairs", done);
  return rep;
}

}  // namespace scoreplay

#endif  // SCOREPLAY_VERIFY_HPP_
