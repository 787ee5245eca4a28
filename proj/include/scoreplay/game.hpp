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

#ifndef SCOREPLAY_GAME_HPP_
#define SCOREPLAY_GAME_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scoreplay/detail/tree.hpp"
#include "scoreplay/score.hpp"

namespace scoreplay {

// A finite scoring-play game {G^L | G^S | G^R}. Scores are absolute: the
// score of an option already includes the points gained by the move.
using Game = detail::BasicTree<Score>;

enum class Player { Left, Right };

constexpr Player opponent(Player p) {
  return p == Player::Left ? Player::Right : Player::Left;
}

constexpr std::string_view player_name(Player p) {
  return p == Player::Left ? "Left" : "Right";
}

constexpr char player_letter(Player p) { return p == Player::Left ? 'L' : 'R'; }

inline std::span<const Game> options(const Game& g, Player p) {
  return p == Player::Left ? g.left() : g.right();
}

// {left | score | right}, mirroring the bracket notation.
inline Game make_game(std::vector<Game> left, Score score,
                      std::vector<Game> right) {
  return Game(std::move(score), std::move(left), std::move(right));
}

inline Game leaf(Score score) { return Game(std::move(score)); }

namespace detail {

struct PairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& p) const {
    return hash_mix(std::hash<const void*>{}(p.first),
                    std::hash<const void*>{}(p.second));
  }
};

// Memoized structural map over a DAG: each distinct subtree is rebuilt once.
template <class Fn>
class SubtreeMap {
 public:
  explicit SubtreeMap(Fn fn) : fn_(std::move(fn)) {}

  Game operator()(const Game& g) {
    if (auto it = memo_.find(g.id()); it != memo_.end()) return it->second.second;
    Game out = fn_(*this, g);
    memo_.emplace(g.id(), std::make_pair(g, out));
    return out;
  }

 private:
  Fn fn_;
  std::unordered_map<const void*, std::pair<Game, Game>> memo_;
};

}  // namespace detail

// -G = {-G^R | -G^S | -G^L}.
inline Game negate(const Game& g) {
  auto rec = detail::SubtreeMap([](auto& self, const Game& n) {
    std::vector<Game> left, right;
    for (const Game& r : n.right()) left.push_back(self(r));
    for (const Game& l : n.left()) right.push_back(self(l));
    return make_game(std::move(left), -n.score(), std::move(right));
  });
  return rec(g);
}

// Adds `delta` to every node score.
inline Game translate(const Game& g, const Score& delta) {
  if (delta.is_zero()) return g;
  auto rec = detail::SubtreeMap([&delta](auto& self, const Game& n) {
    std::vector<Game> left, right;
    for (const Game& l : n.left()) left.push_back(self(l));
    for (const Game& r : n.right()) right.push_back(self(r));
    return make_game(std::move(left), n.score() + delta, std::move(right));
  });
  return rec(g);
}

// Disjunctive sum G +_l H = {G^L+H, G+H^L | G^S+H^S | G^R+H, G+H^R}.
class SumBuilder {
 public:
  Game operator()(const Game& g, const Game& h) {
    const auto key = std::make_pair(g.id(), h.id());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Game> left, right;
    left.reserve(g.left().size() + h.left().size());
    right.reserve(g.right().size() + h.right().size());
    for (const Game& gl : g.left()) left.push_back((*this)(gl, h));
    for (const Game& hl : h.left()) left.push_back((*this)(g, hl));
    for (const Game& gr : g.right()) right.push_back((*this)(gr, h));
    for (const Game& hr : h.right()) right.push_back((*this)(g, hr));
    Game out = make_game(std::move(left), g.score() + h.score(),
                         std::move(right));
    keep_.push_back(g);
    keep_.push_back(h);
    memo_.emplace(key, out);
    return out;
  }

 private:
  std::unordered_map<std::pair<const void*, const void*>, Game,
                     detail::PairHash>
      memo_;
  std::vector<Game> keep_;  // pins memo keys for the builder's lifetime
};

inline Game sum(const Game& g, const Game& h) { return SumBuilder{}(g, h); }

inline Game sum(std::span<const Game> games) {
  Game acc = leaf(0);
  for (const Game& g : games) acc = sum(acc, g);
  return acc;
}

}  // namespace scoreplay

#endif  // SCOREPLAY_GAME_HPP_
