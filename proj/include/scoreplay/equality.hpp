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

// Bounded falsification of equality: G = H when G + X and H + X have the
// same outcome for every X. Only finitely many X can be tried, so the
// verdict is either a distinguishing context or "indistinguishable within
// the budget", never a proof of equality.

#ifndef SCOREPLAY_EQUALITY_HPP_
#define SCOREPLAY_EQUALITY_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "scoreplay/enumerate.hpp"
#include "scoreplay/game.hpp"
#include "scoreplay/minimax.hpp"
#include "scoreplay/notation.hpp"
#include "scoreplay/tamex.hpp"

namespace scoreplay {

struct EqualityVerdict {
  std::optional<Game> context;
  OutcomeClass with_g = OutcomeClass::Ti;
  OutcomeClass with_h = OutcomeClass::Ti;
  std::uint64_t contexts_tried = 0;

  bool distinguished() const { return context.has_value(); }

  std::string str() const {
    if (!context) {
      return "indistinguishable within budget (" +
             std::to_string(contexts_tried) + " contexts tried)";
    }
    return "distinguished by X = " + format_game(*context) +
           ": G+X in " + std::string(outcome_name(with_g)) + ", H+X in " +
           std::string(outcome_name(with_h));
  }
};

namespace detail {

// Tries one context; returns true (stop) when it separates g and h.
inline bool try_context(const Game& g, const Game& h, const Game& x,
                        EqualityVerdict& v) {
  ++v.contexts_tried;
  SumScoreSolver solver;
  const OutcomeClass a = outcome_report(solver(g, x)).outcome;
  const OutcomeClass b = outcome_report(solver(h, x)).outcome;
  if (a == b) return false;
  v.context = x;
  v.with_g = a;
  v.with_h = b;
  return true;
}

}  // namespace detail

// Contexts are X = 0 first, then the games of the budget in order.
inline EqualityVerdict equal_bounded(const Game& g, const Game& h,
                                     const EnumerationBudget& b) {
  EqualityVerdict v;
  if (g == h) return v;
  if (detail::try_context(g, h, leaf(0), v)) return v;
  for_each_game(b, [&](const Game& x) {
    return !detail::try_context(g, h, x, v);
  });
  return v;
}

// The same search with contexts drawn from a universe.
inline EqualityVerdict equal_bounded_in(const Game& g, const Game& h,
                                        const EnumerationBudget& b,
                                        const Universe& u) {
  EqualityVerdict v;
  if (g == h) return v;
  for_each_member(b, u, [&](const Game& x) {
    return !detail::try_context(g, h, x, v);
  });
  return v;
}

// Looks for a Tame_{-x} context separating g from 0. A member that is not
// structurally 0 is never equal to 0 there, so a witness exists, though
// possibly beyond the budget.
inline EqualityVerdict misere_nonzero_search(const Game& g,
                                             const EnumerationBudget& b,
                                             const Score& x = Score(1)) {
  const Universe u(x, UniverseMode::Misere);
  if (!in_universe(g, u)) {
    throw UniverseError(format_game(g) + " is not a member of " + u.name());
  }
  if (g == leaf(0)) {
    throw std::invalid_argument("the game is 0; nothing to distinguish");
  }
  // Shallow contexts first: each depth bound is searched in full before
  // the next one.
  EqualityVerdict total;
  for (int d = 0; d <= b.max_depth; ++d) {
    EnumerationBudget level = b;
    level.max_depth = d;
    EqualityVerdict v = equal_bounded_in(g, leaf(0), level, u);
    total.contexts_tried += v.contexts_tried;
    if (v.distinguished()) {
      v.contexts_tried = total.contexts_tried;
      return v;
    }
  }
  return total;
}

}  // namespace scoreplay

#endif  // SCOREPLAY_EQUALITY_HPP_
