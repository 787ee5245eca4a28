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

// A small normal-play / misère-play oracle over score-free game trees:
// outcomes, the normal-play order, sums, canonical forms and number values.
// It is the target of the shape-erasing maps out of Tame_x and Tame_{-x}.

#ifndef SCOREPLAY_NORMAL_PLAY_HPP_
#define SCOREPLAY_NORMAL_PLAY_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scoreplay/detail/tree.hpp"
#include "scoreplay/errors.hpp"
#include "scoreplay/game.hpp"
#include "scoreplay/score.hpp"

namespace scoreplay {

struct Unscored {
  friend constexpr auto operator<=>(Unscored, Unscored) = default;
};

}  // namespace scoreplay

template <>
struct std::hash<scoreplay::Unscored> {
  std::size_t operator()(scoreplay::Unscored) const { return 0x2545f491; }
};

namespace scoreplay {

using NormalGame = detail::BasicTree<Unscored>;

inline NormalGame normal_game(std::vector<NormalGame> left,
                              std::vector<NormalGame> right) {
  return NormalGame(Unscored{}, std::move(left), std::move(right));
}

inline NormalGame normal_zero() { return NormalGame(Unscored{}); }

inline std::span<const NormalGame> options(const NormalGame& g, Player p) {
  return p == Player::Left ? g.left() : g.right();
}

enum class MoverResult { MoverWins, MoverLoses };

// Normal-play outcome classes (who wins under last-player-wins).
enum class NormalClass { L, R, N, P };

constexpr std::string_view normal_class_name(NormalClass c) {
  switch (c) {
    case NormalClass::L: return "L";
    case NormalClass::R: return "R";
    case NormalClass::N: return "N";
    case NormalClass::P: return "P";
  }
  return "?";
}

// Caches for one family of related queries. Every cache pins its keys.
class NormalOracle {
 public:
  // Last player to move wins; a stuck mover loses.
  MoverResult normal_outcome(const NormalGame& g, Player mover) {
    return outcome_impl(g, mover, /*misere=*/false);
  }

  // Last player to move loses; a stuck mover wins.
  MoverResult misere_outcome(const NormalGame& g, Player mover) {
    return outcome_impl(g, mover, /*misere=*/true);
  }

  NormalClass normal_class(const NormalGame& g) {
    return to_class(normal_outcome(g, Player::Left),
                    normal_outcome(g, Player::Right));
  }

  NormalClass misere_class(const NormalGame& g) {
    return to_class(misere_outcome(g, Player::Left),
                    misere_outcome(g, Player::Right));
  }

  // g >= h: no g^R <= h and no h^L >= g.
  bool geq(const NormalGame& g, const NormalGame& h) {
    const auto key = std::make_pair(g.id(), h.id());
    if (auto it = geq_.find(key); it != geq_.end()) return it->second;
    bool result = true;
    for (const NormalGame& gr : g.right()) {
      if (geq(h, gr)) {
        result = false;
        break;
      }
    }
    if (result) {
      for (const NormalGame& hl : h.left()) {
        if (geq(hl, g)) {
          result = false;
          break;
        }
      }
    }
    pin(g);
    pin(h);
    geq_.emplace(key, result);
    return result;
  }

  bool equal(const NormalGame& g, const NormalGame& h) {
    return g == h || (geq(g, h) && geq(h, g));
  }

  NormalGame sum(const NormalGame& g, const NormalGame& h) {
    const auto key = std::make_pair(g.id(), h.id());
    if (auto it = sum_.find(key); it != sum_.end()) return it->second;
    std::vector<NormalGame> left, right;
    for (const NormalGame& gl : g.left()) left.push_back(sum(gl, h));
    for (const NormalGame& hl : h.left()) left.push_back(sum(g, hl));
    for (const NormalGame& gr : g.right()) right.push_back(sum(gr, h));
    for (const NormalGame& hr : h.right()) right.push_back(sum(g, hr));
    NormalGame out = normal_game(std::move(left), std::move(right));
    pin(g);
    pin(h);
    sum_.emplace(key, out);
    return out;
  }

  NormalGame negate(const NormalGame& g) {
    if (auto it = neg_.find(g.id()); it != neg_.end()) return it->second;
    std::vector<NormalGame> left, right;
    for (const NormalGame& r : g.right()) left.push_back(negate(r));
    for (const NormalGame& l : g.left()) right.push_back(negate(l));
    NormalGame out = normal_game(std::move(left), std::move(right));
    pin(g);
    neg_.emplace(g.id(), out);
    return out;
  }

  // Simplest form: options canonical, no dominated options, no reversible
  // options. Unique per equivalence class.
  NormalGame canonical(const NormalGame& g) {
    if (auto it = canon_.find(g.id()); it != canon_.end()) return it->second;
    std::vector<NormalGame> left, right;
    for (const NormalGame& l : g.left()) left.push_back(canonical(l));
    for (const NormalGame& r : g.right()) right.push_back(canonical(r));
    dedupe(left);
    dedupe(right);
    bool changed = true;
    while (changed) {
      changed = false;
      changed |= drop_dominated(left, Player::Left);
      changed |= drop_dominated(right, Player::Right);
      const NormalGame current = normal_game(left, right);
      changed |= bypass_reversible(current, left, Player::Left);
      if (changed) continue;
      changed |= bypass_reversible(current, right, Player::Right);
    }
    NormalGame out = normal_game(std::move(left), std::move(right));
    pin(g);
    canon_.emplace(g.id(), out);
    return out;
  }

  // The dyadic value when g is a number (every option a number, no left
  // option >= a right option), else nullopt.
  std::optional<Score> number_value(const NormalGame& g);

 private:
  static NormalClass to_class(MoverResult left_first, MoverResult right_first) {
    const bool lw = left_first == MoverResult::MoverWins;
    const bool rw = right_first == MoverResult::MoverWins;
    if (lw && rw) return NormalClass::N;
    if (!lw && !rw) return NormalClass::P;
    return lw ? NormalClass::L : NormalClass::R;
  }

  MoverResult outcome_impl(const NormalGame& g, Player mover, bool misere) {
    const int slot = (mover == Player::Left ? 0 : 1) + (misere ? 2 : 0);
    auto& cache = outcome_[slot];
    if (auto it = cache.find(g.id()); it != cache.end()) return it->second;
    auto opts = options(g, mover);
    MoverResult result = MoverResult::MoverLoses;
    if (opts.empty()) {
      result = misere ? MoverResult::MoverWins : MoverResult::MoverLoses;
    } else {
      for (const NormalGame& o : opts) {
        if (outcome_impl(o, opponent(mover), misere) ==
            MoverResult::MoverLoses) {
          result = MoverResult::MoverWins;
          break;
        }
      }
    }
    pin(g);
    cache.emplace(g.id(), result);
    return result;
  }

  static void dedupe(std::vector<NormalGame>& v) {
    std::sort(v.begin(), v.end(), detail::StructuralLess<Unscored>{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  // Left drops b when some other a >= b; Right drops d when some c <= d.
  bool drop_dominated(std::vector<NormalGame>& opts, Player side) {
    for (std::size_t i = 0; i < opts.size(); ++i) {
      for (std::size_t j = 0; j < opts.size(); ++j) {
        if (i == j) continue;
        const bool dominated = side == Player::Left ? geq(opts[j], opts[i])
                                                    : geq(opts[i], opts[j]);
        if (dominated) {
          opts.erase(opts.begin() + static_cast<std::ptrdiff_t>(i));
          return true;
        }
      }
    }
    return false;
  }

  // Left option a is reversible through a^R when a^R <= g; it is replaced
  // by the Left options of a^R. Dually for Right.
  bool bypass_reversible(const NormalGame& g, std::vector<NormalGame>& opts,
                         Player side) {
    for (std::size_t i = 0; i < opts.size(); ++i) {
      const NormalGame a = opts[i];
      for (const NormalGame& reply : options(a, opponent(side))) {
        const bool reversible =
            side == Player::Left ? geq(g, reply) : geq(reply, g);
        if (!reversible) continue;
        opts.erase(opts.begin() + static_cast<std::ptrdiff_t>(i));
        for (const NormalGame& w : options(reply, side)) opts.push_back(w);
        dedupe(opts);
        return true;
      }
    }
    return false;
  }

  void pin(const NormalGame& g) { pinned_.emplace(g.id(), g); }

  using PairMap = std::unordered_map<std::pair<const void*, const void*>,
                                     bool, detail::PairHash>;
  PairMap geq_;
  std::unordered_map<std::pair<const void*, const void*>, NormalGame,
                     detail::PairHash>
      sum_;
  std::unordered_map<const void*, NormalGame> neg_;
  std::unordered_map<const void*, NormalGame> canon_;
  std::unordered_map<const void*, MoverResult> outcome_[4];
  std::unordered_map<const void*, std::optional<Score>> value_;
  std::unordered_map<const void*, NormalGame> pinned_;
};

namespace detail {

inline Score::Integer floor_of(const Score& s) {
  Score::Integer q = s.numerator() / s.denominator();
  if (s.sign() < 0 && q * s.denominator() != s.numerator()) q -= 1;
  return q;
}

// Simplest dyadic strictly inside (lo, hi); a missing bound is infinite.
inline Score simplest_between(const std::optional<Score>& lo,
                              const std::optional<Score>& hi) {
  auto inside = [&](const Score& v) {
    return (!lo || v > *lo) && (!hi || v < *hi);
  };
  if (inside(Score(0))) return Score(0);
  if (lo && *lo >= Score(0)) {
    Score n(Score::Rational(floor_of(*lo) + 1));
    if (inside(n)) return n;
  } else if (hi && *hi <= Score(0)) {
    Score n(Score::Rational(floor_of(*hi)));
    if (n == *hi) n -= Score(1);
    if (inside(n)) return n;
  }
  // Both bounds exist and no integer fits.
  Score::Integer den = 2;
  for (;;) {
    Score scaled = *lo * Score(Score::Rational(den));
    Score::Integer m = floor_of(scaled) + 1;
    Score candidate(Score::Rational(m, den));
    if (inside(candidate)) return candidate;
    den *= 2;
  }
}

}  // namespace detail

inline std::optional<Score> NormalOracle::number_value(const NormalGame& g) {
  if (auto it = value_.find(g.id()); it != value_.end()) return it->second;
  std::optional<Score> result;
  std::optional<Score> lo, hi;
  bool ok = true;
  for (const NormalGame& l : g.left()) {
    auto v = number_value(l);
    if (!v) { ok = false; break; }
    if (!lo || *v > *lo) lo = v;
  }
  for (const NormalGame& r : g.right()) {
    if (!ok) break;
    auto v = number_value(r);
    if (!v) { ok = false; break; }
    if (!hi || *v < *hi) hi = v;
  }
  if (ok) {
    for (const NormalGame& l : g.left()) {
      for (const NormalGame& r : g.right()) {
        if (geq(l, r)) ok = false;
      }
    }
  }
  if (ok) result = detail::simplest_between(lo, hi);
  pin(g);
  value_.emplace(g.id(), result);
  return result;
}

inline MoverResult normal_outcome(const NormalGame& g, Player mover) {
  return NormalOracle{}.normal_outcome(g, mover);
}
inline MoverResult misere_outcome(const NormalGame& g, Player mover) {
  return NormalOracle{}.misere_outcome(g, mover);
}
inline bool normal_geq(const NormalGame& g, const NormalGame& h) {
  return NormalOracle{}.geq(g, h);
}
inline NormalGame normal_canonical(const NormalGame& g) {
  return NormalOracle{}.canonical(g);
}
inline NormalGame normal_sum(const NormalGame& g, const NormalGame& h) {
  return NormalOracle{}.sum(g, h);
}
inline NormalGame normal_negate(const NormalGame& g) {
  return NormalOracle{}.negate(g);
}

// Score-free notation: "{L|R}" with "." for an empty side.
inline std::string format_normal(const NormalGame& g) {
  std::string out = "{";
  auto side = [&](std::span<const NormalGame> opts) {
    if (opts.empty()) {
      out += '.';
      return;
    }
    for (std::size_t i = 0; i < opts.size(); ++i) {
      if (i > 0) out += ',';
      out += format_normal(opts[i]);
    }
  };
  side(g.left());
  out += '|';
  side(g.right());
  out += '}';
  return out;
}

inline NormalGame parse_normal(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto peek = [&](char c) {
    skip();
    return pos < text.size() && text[pos] == c;
  };
  auto expect = [&](char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  std::function<NormalGame()> game;
  auto side = [&] {
    std::vector<NormalGame> out;
    if (peek('.')) {
      ++pos;
      return out;
    }
    if (peek('|') || peek('}')) return out;
    out.push_back(game());
    while (peek(',')) {
      ++pos;
      out.push_back(game());
    }
    return out;
  };
  game = [&] {
    expect('{');
    auto left = side();
    expect('|');
    auto right = side();
    expect('}');
    return normal_game(std::move(left), std::move(right));
  };
  NormalGame g = game();
  skip();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return g;
}

}  // namespace scoreplay

#endif  // SCOREPLAY_NORMAL_PLAY_HPP_
