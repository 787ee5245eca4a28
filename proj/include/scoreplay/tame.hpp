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

// Tame games: on every alternating line of play, from either starting
// player, the terminal score is >= 0 when Left moved last and <= 0 when
// Right moved last. A line on which nobody moved is unconstrained.

#ifndef SCOREPLAY_TAME_HPP_
#define SCOREPLAY_TAME_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scoreplay/game.hpp"
#include "scoreplay/minimax.hpp"
#include "scoreplay/notation.hpp"

namespace scoreplay {

struct TameViolation {
  std::vector<Player> path;  // alternating moves from the root
  Score score;               // terminal score
  Player last_mover;
};

struct TameCertificate {
  bool is_tame = true;
  std::optional<TameViolation> violation;

  // "tame", or "not tame: path L R ends at 1".
  std::string str() const {
    if (is_tame) return "tame";
    std::string out = "not tame: path";
    for (Player p : violation->path) {
      out += ' ';
      out += player_letter(p);
    }
    return out + " ends at " + violation->score.str();
  }
};

// Depth-first search over (position, player to move, last mover); states
// known to be safe are cached. The first violation found is returned.
class TameChecker {
 public:
  TameCertificate operator()(const Game& g) {
    for (Player first : {Player::Left, Player::Right}) {
      std::vector<Player> path;
      if (auto v = search(g, first, std::nullopt, path)) {
        return TameCertificate{false, std::move(v)};
      }
    }
    return TameCertificate{};
  }

 private:
  struct Key {
    const void* node;
    int mover;
    int last;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return detail::hash_mix(std::hash<const void*>{}(k.node),
                              static_cast<std::size_t>(k.mover * 3 + k.last));
    }
  };

  static int code(const std::optional<Player>& p) {
    return p ? (*p == Player::Left ? 1 : 2) : 0;
  }

  std::optional<TameViolation> search(const Game& g, Player mover,
                                      std::optional<Player> last,
                                      std::vector<Player>& path) {
    const Key key{g.id(), mover == Player::Left ? 0 : 1, code(last)};
    if (safe_.count(key)) return std::nullopt;
    auto opts = options(g, mover);
    if (opts.empty()) {
      const int s = g.score().sign();
      const bool bad = last && ((*last == Player::Left && s < 0) ||
                                (*last == Player::Right && s > 0));
      if (bad) return TameViolation{path, g.score(), *last};
      safe_.emplace(key, g);
      return std::nullopt;
    }
    for (const Game& o : opts) {
      path.push_back(mover);
      auto v = search(o, opponent(mover), mover, path);
      path.pop_back();
      if (v) return v;
    }
    safe_.emplace(key, g);
    return std::nullopt;
  }

  std::unordered_map<Key, Game, KeyHash> safe_;  // pins the node
};

inline TameCertificate is_tame(const Game& g) { return TameChecker{}(g); }

// Replays a violation: at each step some option of the recorded mover must
// continue to a terminal with the recorded score. True iff the recorded
// line exists and breaks the sign rule for its last mover.
inline bool replay_violation(const Game& g, const TameViolation& v) {
  auto rec = [&](auto& self, const Game& n, std::size_t depth) -> bool {
    if (depth == v.path.size()) {
      const Player next =
          v.path.empty() ? Player::Left : opponent(v.path.back());
      if (!options(n, next).empty()) return false;
      if (n.score() != v.score) return false;
      const int s = n.score().sign();
      return v.last_mover == Player::Left ? s < 0 : s > 0;
    }
    for (const Game& o : options(n, v.path[depth])) {
      if (self(self, o, depth + 1)) return true;
    }
    return false;
  };
  if (v.path.empty() || v.path.back() != v.last_mover) return false;
  for (std::size_t i = 1; i < v.path.size(); ++i) {
    if (v.path[i] == v.path[i - 1]) return false;
  }
  return rec(rec, g, 0);
}

// True when every maximal alternating line, from either starting player,
// has even length: the second player always makes the last move.
inline bool second_player_moves_last(const Game& g) {
  // Bits: 1/2 = every line is even with Left/Right to move, 4/8 = odd.
  std::unordered_map<const void*, std::pair<Game, int>> memo;
  auto rec = [&](auto& self, const Game& n) -> int {
    if (auto it = memo.find(n.id()); it != memo.end()) return it->second.second;
    int bits = 0;
    for (Player p : {Player::Left, Player::Right}) {
      const bool left = p == Player::Left;
      const int opp_even = left ? 2 : 1;
      const int opp_odd = left ? 8 : 4;
      bool even = true;
      bool odd = !options(n, p).empty();
      for (const Game& o : options(n, p)) {
        const int sub = self(self, o);
        even = even && (sub & opp_odd);
        odd = odd && (sub & opp_even);
      }
      if (even) bits |= left ? 1 : 2;
      if (odd) bits |= left ? 4 : 8;
    }
    memo.emplace(n.id(), std::make_pair(n, bits));
    return bits;
  };
  return (rec(rec, g) & 3) == 3;
}

// Allowed outcome classes of G + H for tame G and H.
//
// The (Ti, L) and (Ti, R) entries allow every class: the printed table
// lists only {L, Ti} there, but its own proof case for that pair exhibits
// P, Ti, L, R and N, and the engine confirms those witnesses.
inline OutcomeSet table1_cell(OutcomeClass g, OutcomeClass h) {
  using O = OutcomeClass;
  const OutcomeSet all = OutcomeSet::all();
  if (g == O::P && h == O::P) return {O::P};
  if (g == O::P) return h == O::Ti ? OutcomeSet{O::P, O::L, O::R, O::N}
                                   : OutcomeSet{h};
  if (h == O::P) return table1_cell(h, g);
  if (g == O::Ti || h == O::Ti) return all;
  if (g == h) return g == O::N ? all : OutcomeSet{g};
  if ((g == O::L && h == O::R) || (g == O::R && h == O::L)) return all;
  const O side = g == O::N ? h : g;  // the other one is N
  return {side, O::N};
}

// The cell exactly as printed, kept for reporting the discrepancy.
inline OutcomeSet table1_cell_as_printed(OutcomeClass g, OutcomeClass h) {
  using O = OutcomeClass;
  if ((g == O::Ti && h == O::L) || (g == O::L && h == O::Ti)) {
    return {O::L, O::Ti};
  }
  if ((g == O::Ti && h == O::R) || (g == O::R && h == O::Ti)) {
    return {O::R, O::Ti};
  }
  return table1_cell(g, h);
}

}  // namespace scoreplay

#endif  // SCOREPLAY_TAME_HPP_
