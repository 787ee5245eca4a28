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

// The universes Tame_x and Tame_{-x}.
//
// A member has root score 0 and every move changes the score by a fixed
// amount: in Tame_x a Left move adds x and a Right move subtracts x; in
// Tame_{-x} each player's own move costs them x. Subtrees of members keep
// the per-edge rule but not the zero root, so membership of a subtree is
// checked on score deltas and option games are translated to a zero root
// before they are compared.
//
// Scores in a member are determined by shape, which is what makes the
// shape-erasing maps (f into normal play, g into misère play) faithful.

#ifndef SCOREPLAY_TAMEX_HPP_
#define SCOREPLAY_TAMEX_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scoreplay/errors.hpp"
#include "scoreplay/game.hpp"
#include "scoreplay/minimax.hpp"
#include "scoreplay/normal_play.hpp"
#include "scoreplay/notation.hpp"

namespace scoreplay {

enum class UniverseMode {
  Normal,  // Tame_x
  Misere,  // Tame_{-x}
};

struct Universe {
  Score x = Score(1);
  UniverseMode mode = UniverseMode::Normal;

  Universe() = default;
  Universe(Score step, UniverseMode m) : x(std::move(step)), mode(m) {
    if (x.sign() <= 0) throw std::invalid_argument("x must be positive");
  }

  // Score change of a move by `p`.
  Score delta(Player p) const {
    const bool gains = (p == Player::Left) == (mode == UniverseMode::Normal);
    return gains ? x : -x;
  }

  std::string name() const {
    return std::string(mode == UniverseMode::Normal ? "Tame_" : "Tame_-") +
           x.str();
  }
};

inline std::string universe_flag(UniverseMode m) {
  return m == UniverseMode::Normal ? "tame-x" : "tame-neg-x";
}

// Every edge obeys the universe's delta rule; the root score is free.
inline bool deltas_consistent(const Game& g, const Universe& u) {
  std::unordered_map<const void*, bool> memo;
  auto rec = [&](auto& self, const Game& n) -> bool {
    if (auto it = memo.find(n.id()); it != memo.end()) return it->second;
    bool ok = true;
    for (Player p : {Player::Left, Player::Right}) {
      const Score expected = n.score() + u.delta(p);
      for (const Game& o : options(n, p)) {
        if (o.score() != expected || !self(self, o)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    memo.emplace(n.id(), ok);
    return ok;
  };
  return rec(rec, g);
}

inline bool in_universe(const Game& g, const Universe& u) {
  return g.score().is_zero() && deltas_consistent(g, u);
}

// Forgets scores, keeps shape. No membership check.
inline NormalGame erase_scores(const Game& g) {
  std::unordered_map<const void*, NormalGame> memo;
  auto rec = [&](auto& self, const Game& n) -> NormalGame {
    if (auto it = memo.find(n.id()); it != memo.end()) return it->second;
    std::vector<NormalGame> left, right;
    for (const Game& l : n.left()) left.push_back(self(self, l));
    for (const Game& r : n.right()) right.push_back(self(self, r));
    NormalGame out = normal_game(std::move(left), std::move(right));
    memo.emplace(n.id(), out);
    return out;
  };
  return rec(rec, g);
}

// The maps f (Tame_x -> normal play) and g (Tame_{-x} -> misère play).
inline NormalGame strip(const Game& g, const Universe& u) {
  if (!in_universe(g, u)) {
    throw UniverseError(format_game(g) + " is not a member of " + u.name());
  }
  return erase_scores(g);
}

// Shape of an option subtree; the subtree must obey the delta rule.
inline NormalGame relative_shape(const Game& option, const Universe& u) {
  if (!deltas_consistent(option, u)) {
    throw UniverseError(format_game(option) +
                        " does not follow the move rule of " + u.name());
  }
  return erase_scores(option);
}

// The member of the universe with shape n and root score `root`.
inline Game embed(const NormalGame& n, const Universe& u,
                  const Score& root = Score(0)) {
  std::map<std::pair<const void*, Score>, Game> memo;
  auto rec = [&](auto& self, const NormalGame& m, const Score& s) -> Game {
    auto key = std::make_pair(m.id(), s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Game> left, right;
    const Score sl = s + u.delta(Player::Left);
    const Score sr = s + u.delta(Player::Right);
    for (const NormalGame& l : m.left()) left.push_back(self(self, l, sl));
    for (const NormalGame& r : m.right()) right.push_back(self(self, r, sr));
    Game out = make_game(std::move(left), s, std::move(right));
    memo.emplace(std::move(key), out);
    return out;
  };
  return rec(rec, n, root);
}

namespace detail {

inline void require_member(const Game& g, const Universe& u) {
  if (!in_universe(g, u)) {
    throw UniverseError(format_game(g) + " is not a member of " + u.name());
  }
}

inline void require_normal_mode(const Universe& u, const char* what) {
  if (u.mode != UniverseMode::Normal) {
    throw UniverseError(std::string(what) + " is only available on Tame_x");
  }
}

}  // namespace detail

// Order, canonical forms and numbers inside Tame_x. Comparisons are routed
// through the normal-play order of the shapes:  G >=_x H  iff  f(G) >= f(H).
class TameX {
 public:
  explicit TameX(Universe u) : u_(std::move(u)) {
    detail::require_normal_mode(u_, "the >=_x order");
  }

  const Universe& universe() const { return u_; }
  NormalOracle& oracle() { return oracle_; }

  bool geq(const Game& g, const Game& h) {
    detail::require_member(g, u_);
    detail::require_member(h, u_);
    return oracle_.geq(erase_scores(g), erase_scores(h));
  }
  bool leq(const Game& g, const Game& h) { return geq(h, g); }
  bool equal(const Game& g, const Game& h) { return geq(g, h) && geq(h, g); }

  // Compares two subtrees after translating each to a zero root.
  bool geq_relative(const Game& a, const Game& b) {
    return oracle_.geq(relative_shape(a, u_), relative_shape(b, u_));
  }

  // Deletes dominated options and bypasses reversible ones, bottom-up,
  // working on the scored trees themselves.
  Game canonical(const Game& g) {
    detail::require_member(g, u_);
    return canonical_subtree(g);
  }

  // No Left option is >=_x any Right option, recursively.
  bool is_number(const Game& g) {
    detail::require_member(g, u_);
    return number_subtree(g);
  }

 private:
  Game canonical_subtree(const Game& g) {
    if (auto it = canon_.find(g.id()); it != canon_.end()) {
      return it->second.second;
    }
    std::vector<Game> left, right;
    for (const Game& l : g.left()) left.push_back(canonical_subtree(l));
    for (const Game& r : g.right()) right.push_back(canonical_subtree(r));
    dedupe(left);
    dedupe(right);
    for (bool changed = true; changed;) {
      changed = drop_dominated(left, Player::Left) ||
                drop_dominated(right, Player::Right);
      if (changed) continue;
      const Game current = make_game(left, g.score(), right);
      changed = bypass_reversible(current, left, Player::Left) ||
                bypass_reversible(current, right, Player::Right);
    }
    Game out = make_game(std::move(left), g.score(), std::move(right));
    canon_.emplace(g.id(), std::make_pair(g, out));
    return out;
  }

  static void dedupe(std::vector<Game>& v) {
    std::sort(v.begin(), v.end(), detail::StructuralLess<Score>{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  // A dominates B (Left) when A >=_x B; Right keeps the smaller.
  bool drop_dominated(std::vector<Game>& opts, Player side) {
    for (std::size_t i = 0; i < opts.size(); ++i) {
      for (std::size_t j = 0; j < opts.size(); ++j) {
        if (i == j) continue;
        const bool dominated = side == Player::Left
                                   ? geq_relative(opts[j], opts[i])
                                   : geq_relative(opts[i], opts[j]);
        if (dominated) {
          opts.erase(opts.begin() + static_cast<std::ptrdiff_t>(i));
          return true;
        }
      }
    }
    return false;
  }

  // Left option A reverses through A^R when A^R <=_x G. A is replaced by
  // the Left options of A^R, which already carry G's score plus x.
  bool bypass_reversible(const Game& g, std::vector<Game>& opts, Player side) {
    for (std::size_t i = 0; i < opts.size(); ++i) {
      const Game a = opts[i];
      for (const Game& reply : options(a, opponent(side))) {
        const bool reversible = side == Player::Left ? geq_relative(g, reply)
                                                     : geq_relative(reply, g);
        if (!reversible) continue;
        opts.erase(opts.begin() + static_cast<std::ptrdiff_t>(i));
        for (const Game& w : options(reply, side)) opts.push_back(w);
        dedupe(opts);
        return true;
      }
    }
    return false;
  }

  bool number_subtree(const Game& g) {
    for (const Game& o : g.left()) {
      if (!number_subtree(o)) return false;
    }
    for (const Game& o : g.right()) {
      if (!number_subtree(o)) return false;
    }
    for (const Game& l : g.left()) {
      for (const Game& r : g.right()) {
        if (geq_relative(l, r)) return false;
      }
    }
    return true;
  }

  Universe u_;
  NormalOracle oracle_;
  std::unordered_map<const void*, std::pair<Game, Game>> canon_;
};

inline bool geq_x(const Game& g, const Game& h, const Universe& u) {
  return TameX(u).geq(g, h);
}
inline bool leq_x(const Game& g, const Game& h, const Universe& u) {
  return TameX(u).leq(g, h);
}
inline Game canonical_form_x(const Game& g, const Universe& u) {
  return TameX(u).canonical(g);
}
inline bool is_number(const Game& g, const Universe& u) {
  return TameX(u).is_number(g);
}

struct SurrealValue {
  Game game;   // canonical Tame_x representative
  Score value; // the dyadic it stands for
};

inline constexpr int kDefaultSurrealDayCap = 3;

// All numbers born by day n, as canonical Tame_x games, in increasing order.
// Day n draws option sets from the representatives of day n-1.
inline std::vector<SurrealValue> surreal_day(int n, const Universe& u,
                                             int cap = kDefaultSurrealDayCap) {
  if (n < 0) throw std::invalid_argument("day must be non-negative");
  if (n > cap) {
    throw CapExceeded("day " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(cap));
  }
  TameX tx(u);
  std::vector<Game> reps{leaf(0)};
  for (int day = 1; day <= n; ++day) {
    const std::size_t k = reps.size();
    std::vector<Game> next;
    for (std::size_t lmask = 0; lmask < (std::size_t{1} << k); ++lmask) {
      for (std::size_t rmask = 0; rmask < (std::size_t{1} << k); ++rmask) {
        std::vector<Game> left, right;
        for (std::size_t i = 0; i < k; ++i) {
          if (lmask >> i & 1) left.push_back(translate(reps[i], u.x));
          if (rmask >> i & 1) right.push_back(translate(reps[i], -u.x));
        }
        Game candidate = make_game(std::move(left), 0, std::move(right));
        if (!tx.is_number(candidate)) continue;
        Game c = tx.canonical(candidate);
        if (std::find(next.begin(), next.end(), c) == next.end()) {
          next.push_back(c);
        }
      }
    }
    reps = std::move(next);
  }
  std::vector<SurrealValue> out;
  for (const Game& g : reps) {
    auto v = tx.oracle().number_value(erase_scores(g));
    out.push_back({g, v.value_or(Score(0))});
  }
  std::sort(out.begin(), out.end(),
            [](const SurrealValue& a, const SurrealValue& b) {
              return a.value < b.value;
            });
  return out;
}

// Allowed outcome classes of G + H for G, H in Tame_x. P never occurs in
// Tame_x, so it is not a valid argument.
inline OutcomeSet table2_cell(OutcomeClass g, OutcomeClass h) {
  using O = OutcomeClass;
  if (g == O::P || h == O::P) {
    throw std::invalid_argument(
        "no member of Tame_x has outcome P (Left's final score is x or 0), so "
        "the Tame_x table has no P row or column");
  }
  if (g == O::Ti) return {h};
  if (h == O::Ti) return {g};
  if (g == h && g != O::N) return {g};
  if (g == O::N && h == O::N) return {O::L, O::R, O::N, O::Ti};
  if ((g == O::L && h == O::R) || (g == O::R && h == O::L)) {
    return {O::L, O::R, O::N, O::Ti};
  }
  // One of them is N, the other L or R.
  const O side = g == O::N ? h : g;
  return {side, O::N};
}

}  // namespace scoreplay

#endif  // SCOREPLAY_TAMEX_HPP_
