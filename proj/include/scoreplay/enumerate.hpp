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

// Bounded enumeration of game trees.
//
// A budget fixes the maximum depth, the maximum number of options per side
// and the alphabet of node scores. Option lists are sets: a game never has
// two structurally identical options on the same side, which keeps the
// space finite and loses nothing (a repeated option changes no value).
//
// Small spaces are enumerated exhaustively, in a fixed order, level by
// level; the last level is generated lazily, so early-exit searches never
// build it. Spaces larger than the budget's game cap are replaced by a
// seeded sample. Identical budgets give identical streams.

#ifndef SCOREPLAY_ENUMERATE_HPP_
#define SCOREPLAY_ENUMERATE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "scoreplay/errors.hpp"
#include "scoreplay/game.hpp"
#include "scoreplay/normal_play.hpp"
#include "scoreplay/tamex.hpp"

namespace scoreplay {

inline std::vector<Score> score_range(long long lo, long long hi) {
  std::vector<Score> out;
  for (long long v = lo; v <= hi; ++v) out.emplace_back(v);
  return out;
}

// Pair sweeps switch from all ordered pairs to a seeded sample above this.
inline constexpr std::uint64_t kExhaustivePairLimit = 100000;

struct EnumerationBudget {
  int max_depth = 3;
  int max_branching = 2;
  std::vector<Score> score_alphabet = score_range(-2, 2);
  std::optional<std::uint64_t> max_games;
  std::optional<std::uint64_t> sample_seed;
  std::uint64_t max_pairs = kExhaustivePairLimit;

  std::uint64_t seed() const { return sample_seed.value_or(0); }

  std::string describe() const {
    std::ostringstream os;
    os << "depth<=" << max_depth << " branching<=" << max_branching
       << " scores={";
    for (std::size_t i = 0; i < score_alphabet.size(); ++i) {
      if (i > 0) os << ',';
      os << score_alphabet[i];
    }
    os << "} max_games=";
    if (max_games) {
      os << *max_games;
    } else {
      os << "none";
    }
    os << " max_pairs=" << max_pairs << " seed=" << seed();
    return os.str();
  }
};

// Game cap applied by sweeps whose budget leaves max_games unset.
inline constexpr std::uint64_t kDefaultSweepGames = 3000;

inline EnumerationBudget with_sweep_cap(EnumerationBudget b) {
  if (!b.max_games) b.max_games = kDefaultSweepGames;
  return b;
}

// Levels larger than this are never materialized.
inline constexpr std::uint64_t kMaterializeLimit = 2000000;

namespace detail {

inline constexpr std::uint64_t kSaturated =
    std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// Number of subsets of size <= k of an n-element set.
inline std::uint64_t small_subsets(std::uint64_t n, int k) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (int i = 0; i <= k && static_cast<std::uint64_t>(i) <= n; ++i) {
    total = sat_add(total, binom);
    if (binom == kSaturated) return kSaturated;
    // binom(n, i+1) = binom(n, i) * (n - i) / (i + 1); dividing out the
    // common factor first keeps the product exact.
    const std::uint64_t d = static_cast<std::uint64_t>(i) + 1;
    const std::uint64_t g = std::gcd(binom, d);
    binom = sat_mul(binom / g, (n - static_cast<std::uint64_t>(i)) / (d / g));
  }
  return total;
}

// Calls fn(indices) for every subset of {0..n-1} of size <= k: by size, then
// lexicographically. Stops early when fn returns false.
template <class Fn>
bool for_each_small_subset(std::size_t n, int k, Fn&& fn) {
  std::vector<std::size_t> idx;
  if (!fn(idx)) return false;
  for (int size = 1; size <= k && static_cast<std::size_t>(size) <= n; ++size) {
    idx.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    while (true) {
      if (!fn(idx)) return false;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                           n - static_cast<std::size_t>(size - i)) {
        --i;
      }
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) {
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return true;
}

template <class T>
std::vector<T> pick(const std::vector<T>& pool,
                    const std::vector<std::size_t>& idx) {
  std::vector<T> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(pool[i]);
  return out;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

// Exhaustive and sampled generation shared by scored games and shapes.
// `Make(label_index, left, right)` builds a node from children of type T.
template <class T, class Make>
class LevelGenerator {
 public:
  LevelGenerator(int branching, std::size_t labels, Make make)
      : branching_(branching), labels_(labels), make_(std::move(make)) {}

  std::vector<T> leaves() const {
    std::vector<T> out;
    for (std::size_t s = 0; s < labels_; ++s) out.push_back(make_(s, {}, {}));
    return out;
  }

  // Every node over children drawn from `below`. Stops when fn is false.
  template <class Fn>
  bool for_each_over(const std::vector<T>& below, Fn&& fn) const {
    for (std::size_t s = 0; s < labels_; ++s) {
      const bool go = for_each_small_subset(
          below.size(), branching_, [&](const std::vector<std::size_t>& l) {
            return for_each_small_subset(
                below.size(), branching_,
                [&](const std::vector<std::size_t>& r) {
                  return fn(make_(s, pick(below, l), pick(below, r)));
                });
          });
      if (!go) return false;
    }
    return true;
  }

  std::vector<T> level_over(const std::vector<T>& below) const {
    std::vector<T> out;
    for_each_over(below, [&](T g) {
      out.push_back(std::move(g));
      return true;
    });
    return out;
  }

  // A random tree of depth <= r with distinct options.
  T random_tree(std::mt19937_64& rng, int r) const {
    const std::size_t s = uniform(rng, labels_);
    if (r <= 0) return make_(s, {}, {});
    auto side = [&] {
      std::vector<T> opts;
      const std::size_t k =
          uniform(rng, static_cast<std::size_t>(branching_) + 1);
      for (std::size_t i = 0; i < k; ++i) {
        const int below = r - 1 - static_cast<int>(uniform(rng, 2));
        T child = random_tree(rng, below < 0 ? 0 : below);
        if (std::find(opts.begin(), opts.end(), child) == opts.end()) {
          opts.push_back(std::move(child));
        }
      }
      return opts;
    };
    std::vector<T> left = side();
    std::vector<T> right = side();
    return make_(s, std::move(left), std::move(right));
  }

 private:
  int branching_;
  std::size_t labels_;
  Make make_;
};

// Drives a LevelGenerator according to a budget. fn returns false to stop.
template <class T, class Make, class Fn>
void drive(const EnumerationBudget& b, std::uint64_t total,
           const LevelGenerator<T, Make>& gen, Fn&& fn) {
  if (b.max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
  if (b.max_branching < 0) {
    throw std::invalid_argument("max_branching must be >= 0");
  }
  const bool sampled = b.max_games && total > *b.max_games;
  std::vector<T> level = gen.leaves();
  if (!sampled) {
    for (int d = 1; d <= b.max_depth; ++d) {
      if (d < b.max_depth) {
        std::vector<T> next = gen.level_over(level);
        if (next.size() > kMaterializeLimit) {
          throw CapExceeded("enumeration level too large to materialize");
        }
        level = std::move(next);
      } else {
        gen.for_each_over(level, fn);
        return;
      }
    }
    for (T& g : level) {
      if (!fn(std::move(g))) return;
    }
    return;
  }

  // Sampled: the deepest exhaustively listable prefix first, then random
  // trees of a uniformly chosen depth, deduplicated. The caller stops the
  // stream once it has what it needs.
  const std::uint64_t cap = *b.max_games;
  std::unordered_set<T> seen;
  auto emit = [&](const T& g) { return !seen.insert(g).second || fn(g); };
  std::vector<T> prefix = level;
  for (int d = 1; d < b.max_depth; ++d) {
    std::vector<T> next;
    bool small = true;
    gen.for_each_over(prefix, [&](T g) {
      next.push_back(std::move(g));
      if (next.size() > cap / 2) {
        small = false;
        return false;
      }
      return true;
    });
    if (!small) break;
    prefix = std::move(next);
  }
  if (prefix.size() > cap / 2) prefix.clear();
  for (const T& g : prefix) {
    if (!emit(g)) return;
  }
  std::mt19937_64 rng(b.seed());
  const std::uint64_t attempts = 20 * cap + 100;
  for (std::uint64_t i = 0; i < attempts; ++i) {
    const int r = static_cast<int>(
        uniform(rng, static_cast<std::size_t>(b.max_depth) + 1));
    if (!emit(gen.random_tree(rng, r))) return;
  }
}

}  // namespace detail

// Number of games within the budget (all depths <= max_depth), saturating.
inline std::uint64_t count_games(const EnumerationBudget& b) {
  const std::uint64_t a = b.score_alphabet.size();
  std::uint64_t n = a;
  for (int d = 1; d <= b.max_depth; ++d) {
    const std::uint64_t side = detail::small_subsets(n, b.max_branching);
    n = detail::sat_mul(a, detail::sat_mul(side, side));
  }
  return n;
}

// Number of universe members within the budget (scores are forced).
inline std::uint64_t count_universe(const EnumerationBudget& b) {
  std::uint64_t n = 1;
  for (int d = 1; d <= b.max_depth; ++d) {
    const std::uint64_t side = detail::small_subsets(n, b.max_branching);
    n = detail::sat_mul(side, side);
  }
  return n;
}

using GameFilter = std::function<bool(const Game&)>;

// Visits the games of the budget in enumeration order (or the seeded
// sample). With a filter, only passing games are visited and count toward
// the sample cap. fn returns false to stop.
template <class Fn>
void for_each_game(const EnumerationBudget& b, Fn&& fn,
                   const GameFilter& filter = {}) {
  const auto& alphabet = b.score_alphabet;
  if (alphabet.empty()) throw std::invalid_argument("empty score alphabet");
  auto make = [&alphabet](std::size_t s, std::vector<Game> l,
                          std::vector<Game> r) {
    return make_game(std::move(l), alphabet[s], std::move(r));
  };
  detail::LevelGenerator<Game, decltype(make)> gen(b.max_branching,
                                                   alphabet.size(), make);
  // The cap counts accepted games, so a filter thins nothing away from it.
  std::uint64_t accepted = 0;
  const std::uint64_t cap = b.max_games.value_or(detail::kSaturated);
  detail::drive(b, count_games(b), gen, [&](Game g) {
    if (filter && !filter(g)) return true;
    ++accepted;
    return fn(g) && accepted < cap;
  });
}

inline std::vector<Game> enumerate_games(const EnumerationBudget& b,
                                         const GameFilter& filter = {}) {
  std::vector<Game> out;
  for_each_game(
      b,
      [&](const Game& g) {
        out.push_back(g);
        return true;
      },
      filter);
  return out;
}

// Shapes: normal-play games within depth and branching bounds.
template <class Fn>
void for_each_shape(const EnumerationBudget& b, Fn&& fn) {
  auto make = [](std::size_t, std::vector<NormalGame> l,
                 std::vector<NormalGame> r) {
    return normal_game(std::move(l), std::move(r));
  };
  detail::LevelGenerator<NormalGame, decltype(make)> gen(b.max_branching, 1,
                                                         make);
  std::uint64_t emitted = 0;
  const std::uint64_t cap = b.max_games.value_or(detail::kSaturated);
  detail::drive(b, count_universe(b), gen, [&](NormalGame n) {
    ++emitted;
    return fn(n) && emitted < cap;
  });
}

inline std::vector<NormalGame> enumerate_shapes(const EnumerationBudget& b) {
  std::vector<NormalGame> out;
  for_each_shape(b, [&](const NormalGame& n) {
    out.push_back(n);
    return true;
  });
  return out;
}

// Members of the universe, generated by shape and then scored by the
// universe's move rule. The score alphabet is ignored.
template <class Fn>
void for_each_member(const EnumerationBudget& b, const Universe& u, Fn&& fn) {
  for_each_shape(b, [&](const NormalGame& n) { return fn(embed(n, u)); });
}

inline std::vector<Game> enumerate_universe(const EnumerationBudget& b,
                                            const Universe& u) {
  std::vector<Game> out;
  for_each_member(b, u, [&](const Game& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

// All pairs (i, j) in [0, n) x [0, m) when there are at most `limit` of
// them, otherwise `limit` pairs drawn with the seed. fn returns false to
// stop. Returns the number of pairs visited.
template <class Fn>
std::uint64_t for_each_pair(std::size_t n, std::size_t m, std::uint64_t seed,
                            Fn&& fn,
                            std::uint64_t limit = kExhaustivePairLimit) {
  if (n == 0 || m == 0) return 0;
  std::uint64_t visited = 0;
  if (detail::sat_mul(n, m) <= limit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        ++visited;
        if (!fn(i, j)) return visited;
      }
    }
    return visited;
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::uint64_t k = 0; k < limit; ++k) {
    const std::size_t i = detail::uniform(rng, n);
    const std::size_t j = detail::uniform(rng, m);
    ++visited;
    if (!fn(i, j)) return visited;
  }
  return visited;
}

template <class Fn>
std::uint64_t for_each_pair(std::size_t n, std::uint64_t seed, Fn&& fn,
                            std::uint64_t limit = kExhaustivePairLimit) {
  return for_each_pair(n, n, seed, std::forward<Fn>(fn), limit);
}

inline bool pairs_are_sampled(std::size_t n,
                              std::uint64_t limit = kExhaustivePairLimit) {
  return detail::sat_mul(n, n) > limit;
}

}  // namespace scoreplay

#endif  // SCOREPLAY_ENUMERATE_HPP_
