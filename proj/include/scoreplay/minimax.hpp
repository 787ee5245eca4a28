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

// Final scores under perfect alternating play, and the five outcome classes
// derived from their signs.

#ifndef SCOREPLAY_MINIMAX_HPP_
#define SCOREPLAY_MINIMAX_HPP_

#include <array>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scoreplay/game.hpp"
#include "scoreplay/notation.hpp"

namespace scoreplay {

struct FinalScores {
  Score left_first;
  std::optional<Player> left_first_last_mover;
  Score right_first;
  std::optional<Player> right_first_last_mover;

  const Score& first(Player mover) const {
    return mover == Player::Left ? left_first : right_first;
  }
  const std::optional<Player>& last_mover(Player mover) const {
    return mover == Player::Left ? left_first_last_mover
                                 : right_first_last_mover;
  }

  friend bool operator==(const FinalScores&, const FinalScores&) = default;
};

// Memoized minimax. The cache pins every game it has seen, so one solver can
// be reused across many related queries (e.g. all subgames of a sum).
//
// When several options reach the optimum the mover prefers, in order, a line
// on which the mover makes the last move, then the structurally smallest
// option. Options are stored sorted, so that is the first one scanned.
class FinalScoreSolver {
 public:
  const FinalScores& operator()(const Game& g) {
    if (auto it = cache_.find(g.id()); it != cache_.end()) {
      return it->second.second;
    }
    FinalScores out;
    solve_side(g, Player::Left, out.left_first, out.left_first_last_mover);
    solve_side(g, Player::Right, out.right_first, out.right_first_last_mover);
    return cache_.emplace(g.id(), std::make_pair(g, std::move(out)))
        .first->second.second;
  }

  // Index (into options(g, mover)) of the move chosen by optimal play, or
  // nullopt when the mover is stuck.
  std::optional<std::size_t> best_move(const Game& g, Player mover) {
    auto opts = options(g, mover);
    std::optional<std::size_t> best;
    Score best_score;
    Player best_last = mover;
    for (std::size_t i = 0; i < opts.size(); ++i) {
      const FinalScores& f = (*this)(opts[i]);
      const Player reply = opponent(mover);
      const Score& s = f.first(reply);
      const Player last = f.last_mover(reply).value_or(mover);
      if (!best || better(mover, s, last, best_score, best_last)) {
        best = i;
        best_score = s;
        best_last = last;
      }
    }
    return best;
  }

  std::size_t cache_size() const { return cache_.size(); }

 private:
  static bool better(Player mover, const Score& s, Player last,
                     const Score& best, Player best_last) {
    if (s != best) return mover == Player::Left ? s > best : s < best;
    return last == mover && best_last != mover;
  }

  void solve_side(const Game& g, Player mover, Score& score,
                  std::optional<Player>& last) {
    auto choice = best_move(g, mover);
    if (!choice) {
      score = g.score();
      last.reset();
      return;
    }
    const FinalScores& f = (*this)(options(g, mover)[*choice]);
    score = f.first(opponent(mover));
    last = f.last_mover(opponent(mover)).value_or(mover);
  }

  std::unordered_map<const void*, std::pair<Game, FinalScores>> cache_;
};

// Final scores of G + H without building the sum tree: positions of the sum
// are pairs of subgames. Agrees with FinalScoreSolver on sum(g, h).
class SumScoreSolver {
 public:
  const FinalScores& operator()(const Game& g, const Game& h) {
    const auto key = std::make_pair(g.id(), h.id());
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    FinalScores out;
    solve_side(g, h, Player::Left, out.left_first, out.left_first_last_mover);
    solve_side(g, h, Player::Right, out.right_first,
               out.right_first_last_mover);
    pins_.push_back(g);
    pins_.push_back(h);
    return cache_.emplace(key, std::move(out)).first->second;
  }

 private:
  void solve_side(const Game& g, const Game& h, Player mover, Score& score,
                  std::optional<Player>& last) {
    const Player reply = opponent(mover);
    bool any = false;
    Score best;
    Player best_last = mover;
    auto consider = [&](const FinalScores& f) {
      const Score& s = f.first(reply);
      const Player l = f.last_mover(reply).value_or(mover);
      const bool better =
          !any || (s != best ? (mover == Player::Left ? s > best : s < best)
                             : (l == mover && best_last != mover));
      if (better) {
        best = s;
        best_last = l;
        any = true;
      }
    };
    for (const Game& o : options(g, mover)) consider((*this)(o, h));
    for (const Game& o : options(h, mover)) consider((*this)(g, o));
    if (!any) {
      score = g.score() + h.score();
      last.reset();
      return;
    }
    score = best;
    last = best_last;
  }

  std::unordered_map<std::pair<const void*, const void*>, FinalScores,
                     detail::PairHash>
      cache_;
  std::vector<Game> pins_;
};

inline FinalScores final_scores(const Game& g) {
  FinalScoreSolver solver;
  return solver(g);
}

enum class OutcomeClass { L, R, N, P, Ti };

inline constexpr std::array<OutcomeClass, 5> kAllOutcomes = {
    OutcomeClass::L, OutcomeClass::R, OutcomeClass::N, OutcomeClass::P,
    OutcomeClass::Ti};

constexpr std::string_view outcome_name(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::L: return "L";
    case OutcomeClass::R: return "R";
    case OutcomeClass::N: return "N";
    case OutcomeClass::P: return "P";
    case OutcomeClass::Ti: return "Ti";
  }
  return "?";
}

inline std::optional<OutcomeClass> parse_outcome(std::string_view s) {
  for (OutcomeClass c : kAllOutcomes) {
    if (outcome_name(c) == s) return c;
  }
  if (s == "ti" || s == "T") return OutcomeClass::Ti;
  return std::nullopt;
}

// Mirror image under negation: L and R swap, the rest are fixed.
constexpr OutcomeClass mirror(OutcomeClass c) {
  if (c == OutcomeClass::L) return OutcomeClass::R;
  if (c == OutcomeClass::R) return OutcomeClass::L;
  return c;
}

// Sign pair (left final vs 0, right final vs 0) to class:
//   L = {>>, >=, =>}, R = {<<, <=, =<}, N = {><}, P = {<>}, Ti = {==}.
constexpr OutcomeClass classify(int left_sign, int right_sign) {
  if (left_sign > 0 && right_sign < 0) return OutcomeClass::N;
  if (left_sign < 0 && right_sign > 0) return OutcomeClass::P;
  if (left_sign == 0 && right_sign == 0) return OutcomeClass::Ti;
  if (left_sign >= 0 && right_sign >= 0) return OutcomeClass::L;
  return OutcomeClass::R;
}

constexpr char sign_char(int s) { return s > 0 ? '>' : (s < 0 ? '<' : '='); }

// A subset of the five outcome classes.
class OutcomeSet {
 public:
  constexpr OutcomeSet() = default;
  constexpr OutcomeSet(std::initializer_list<OutcomeClass> classes) {
    for (OutcomeClass c : classes) insert(c);
  }
  static constexpr OutcomeSet all() {
    return {OutcomeClass::L, OutcomeClass::R, OutcomeClass::N, OutcomeClass::P,
            OutcomeClass::Ti};
  }

  constexpr void insert(OutcomeClass c) { bits_ |= bit(c); }
  constexpr bool contains(OutcomeClass c) const { return bits_ & bit(c); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const {
    int n = 0;
    for (OutcomeClass c : kAllOutcomes) n += contains(c) ? 1 : 0;
    return n;
  }

  // Classes in the fixed order P, Ti, L, R, N.
  std::string str() const {
    static constexpr OutcomeClass kOrder[] = {OutcomeClass::P, OutcomeClass::Ti,
                                              OutcomeClass::L, OutcomeClass::R,
                                              OutcomeClass::N};
    std::string out = "{";
    for (OutcomeClass c : kOrder) {
      if (!contains(c)) continue;
      if (out.size() > 1) out += ',';
      out += outcome_name(c);
    }
    return out + "}";
  }

  friend constexpr bool operator==(OutcomeSet, OutcomeSet) = default;

 private:
  static constexpr unsigned bit(OutcomeClass c) {
    return 1u << static_cast<unsigned>(c);
  }
  unsigned bits_ = 0;
};

struct OutcomeReport {
  FinalScores finals;
  int left_sign = 0;
  int right_sign = 0;
  OutcomeClass outcome = OutcomeClass::Ti;
};

inline OutcomeReport outcome_report(const FinalScores& f) {
  OutcomeReport r{f, f.left_first.sign(), f.right_first.sign(),
                  OutcomeClass::Ti};
  r.outcome = classify(r.left_sign, r.right_sign);
  return r;
}

inline OutcomeReport outcome_report(const Game& g) {
  return outcome_report(final_scores(g));
}

inline OutcomeClass outcome(const Game& g) {
  return outcome_report(g).outcome;
}

inline std::string last_mover_name(const std::optional<Player>& p) {
  return p ? std::string(player_name(*p)) : std::string("None");
}

// One-line machine record: notation, finals, last movers, class.
inline std::string machine_record(const Game& g, const OutcomeReport& r) {
  return "notation=" + format_game(g) +
         " left_final=" + r.finals.left_first.str() +
         " left_last=" + last_mover_name(r.finals.left_first_last_mover) +
         " right_final=" + r.finals.right_first.str() +
         " right_last=" + last_mover_name(r.finals.right_first_last_mover) +
         " class=" + std::string(outcome_name(r.outcome));
}

}  // namespace scoreplay

#endif  // SCOREPLAY_MINIMAX_HPP_
