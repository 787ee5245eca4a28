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

// Slow, memo-free reference implementations used to cross-check the
// library. Nothing here shares code with the library beyond the tree type.

#ifndef SCOREPLAY_TESTS_ORACLES_HPP_
#define SCOREPLAY_TESTS_ORACLES_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scoreplay/game.hpp"
#include "scoreplay/normal_play.hpp"

namespace oracle {

using scoreplay::Game;
using scoreplay::NormalGame;
using scoreplay::Player;
using scoreplay::Score;

// Plain minimax of the terminal score, mover to play.
inline Score final_score(const Game& g, Player mover) {
  const auto opts = scoreplay::options(g, mover);
  if (opts.empty()) return g.score();
  const Player next = scoreplay::opponent(mover);
  Score best = final_score(opts[0], next);
  for (const Game& o : opts) {
    const Score s = final_score(o, next);
    if (mover == Player::Left ? best < s : s < best) best = s;
  }
  return best;
}

// Sign pair to class name, straight from the definition of the classes.
inline std::string class_of(int l, int r) {
  if (l > 0 && r < 0) return "N";
  if (l < 0 && r > 0) return "P";
  if (l == 0 && r == 0) return "Ti";
  if (l >= 0 && r >= 0) return "L";
  return "R";
}

inline std::string class_of(const Game& g) {
  return class_of(final_score(g, Player::Left).sign(),
                  final_score(g, Player::Right).sign());
}

// Every maximal alternating line as (last mover or none, terminal score).
struct Line {
  int last;  // 0 none, 1 Left, 2 Right
  Score score;
};

inline void lines(const Game& g, Player mover, int last,
                  std::vector<Line>& out) {
  const auto opts = scoreplay::options(g, mover);
  if (opts.empty()) {
    out.push_back({last, g.score()});
    return;
  }
  for (const Game& o : opts) {
    lines(o, scoreplay::opponent(mover), mover == Player::Left ? 1 : 2, out);
  }
}

inline bool tame(const Game& g) {
  std::vector<Line> all;
  lines(g, Player::Left, 0, all);
  lines(g, Player::Right, 0, all);
  for (const Line& l : all) {
    if (l.last == 1 && l.score.sign() < 0) return false;
    if (l.last == 2 && l.score.sign() > 0) return false;
  }
  return true;
}

// Disjunctive sum from the definition, without sharing.
inline Game plain_sum(const Game& g, const Game& h) {
  std::vector<Game> left;
  std::vector<Game> right;
  for (const Game& gl : g.left()) left.push_back(plain_sum(gl, h));
  for (const Game& hl : h.left()) left.push_back(plain_sum(g, hl));
  for (const Game& gr : g.right()) right.push_back(plain_sum(gr, h));
  for (const Game& hr : h.right()) right.push_back(plain_sum(g, hr));
  return scoreplay::make_game(std::move(left), g.score() + h.score(),
                              std::move(right));
}

inline Game plain_negate(const Game& g) {
  std::vector<Game> left;
  std::vector<Game> right;
  for (const Game& r : g.right()) left.push_back(plain_negate(r));
  for (const Game& l : g.left()) right.push_back(plain_negate(l));
  return scoreplay::make_game(std::move(left), -g.score(), std::move(right));
}

// Normal play: the mover wins iff some option leaves the opponent losing.
inline bool plain_normal_wins(const NormalGame& g, Player mover) {
  for (const NormalGame& o : scoreplay::options(g, mover)) {
    if (!plain_normal_wins(o, scoreplay::opponent(mover))) return true;
  }
  return false;
}

// Misère play: a stuck mover wins.
inline bool plain_misere_wins(const NormalGame& g, Player mover) {
  const auto opts = scoreplay::options(g, mover);
  if (opts.empty()) return true;
  for (const NormalGame& o : opts) {
    if (!plain_misere_wins(o, scoreplay::opponent(mover))) return true;
  }
  return false;
}

inline NormalGame plain_normal_sum(const NormalGame& g, const NormalGame& h) {
  std::vector<NormalGame> left;
  std::vector<NormalGame> right;
  for (const NormalGame& gl : g.left()) left.push_back(plain_normal_sum(gl, h));
  for (const NormalGame& hl : h.left()) left.push_back(plain_normal_sum(g, hl));
  for (const NormalGame& gr : g.right()) right.push_back(plain_normal_sum(gr, h));
  for (const NormalGame& hr : h.right()) right.push_back(plain_normal_sum(g, hr));
  return scoreplay::normal_game(std::move(left), std::move(right));
}

inline NormalGame plain_normal_negate(const NormalGame& g) {
  std::vector<NormalGame> left;
  std::vector<NormalGame> right;
  for (const NormalGame& r : g.right()) left.push_back(plain_normal_negate(r));
  for (const NormalGame& l : g.left()) right.push_back(plain_normal_negate(l));
  return scoreplay::normal_game(std::move(left), std::move(right));
}

// g >= h iff Left wins g - h whenever Right starts there.
inline bool plain_normal_geq(const NormalGame& g, const NormalGame& h) {
  return !plain_normal_wins(plain_normal_sum(g, plain_normal_negate(h)), Player::Right);
}

// All normal games born by day n, as trees with option sets drawn from the
// previous day (no size bound).
inline std::vector<NormalGame> born_by(int n) {
  std::vector<NormalGame> day{scoreplay::normal_zero()};
  for (int d = 1; d <= n; ++d) {
    std::vector<NormalGame> next;
    const std::size_t k = day.size();
    for (std::size_t lm = 0; lm < (std::size_t{1} << k); ++lm) {
      for (std::size_t rm = 0; rm < (std::size_t{1} << k); ++rm) {
        std::vector<NormalGame> l, r;
        for (std::size_t i = 0; i < k; ++i) {
          if (lm >> i & 1) l.push_back(day[i]);
          if (rm >> i & 1) r.push_back(day[i]);
        }
        next.push_back(scoreplay::normal_game(std::move(l), std::move(r)));
      }
    }
    day = std::move(next);
  }
  return day;
}

// Value classes of `games` under mutual normal_geq.
inline std::size_t distinct_values(const std::vector<NormalGame>& games) {
  std::vector<NormalGame> reps;
  for (const NormalGame& g : games) {
    bool seen = false;
    for (const NormalGame& r : reps) {
      if (plain_normal_geq(g, r) && plain_normal_geq(r, g)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(g);
  }
  return reps.size();
}

// Dyadic rationals born by day n: 0 on day 0, then each day adds a new
// maximum, a new minimum and the midpoints of neighbouring old values.
inline std::vector<Score> dyadics_by(int n) {
  std::vector<Score> v{Score(0)};
  for (int d = 1; d <= n; ++d) {
    std::vector<Score> next{v.front() - Score(1)};
    for (std::size_t i = 0; i < v.size(); ++i) {
      next.push_back(v[i]);
      if (i + 1 < v.size()) {
        next.push_back((v[i] + v[i + 1]) * Score(1, 2));
      }
    }
    next.push_back(v.back() + Score(1));
    v = std::move(next);
  }
  return v;
}

}  // namespace oracle

#endif  // SCOREPLAY_TESTS_ORACLES_HPP_
