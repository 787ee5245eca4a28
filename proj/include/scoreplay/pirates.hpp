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

// Pirates & Treasure. Ships sit on start vertices; on their turn a player
// moves one of their ships to an adjacent unvisited vertex and collects its
// treasure. A player none of whose ships can move is stuck, and the game
// ends when the player to move is stuck.
//
// Board files are line oriented, '#' starts a comment:
//
//   vertex a start
//   vertex b 2
//   edge a b
//   left a
//
// Ships must be placed on start vertices, one ship per vertex.

#ifndef SCOREPLAY_PIRATES_HPP_
#define SCOREPLAY_PIRATES_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scoreplay/errors.hpp"
#include "scoreplay/game.hpp"
#include "scoreplay/minimax.hpp"
#include "scoreplay/score.hpp"

namespace scoreplay {

inline constexpr std::uint64_t kDefaultMaxStates = 1000000;

struct PiratesBoard {
  std::vector<std::string> ids;
  std::vector<std::optional<Score>> value;  // nullopt marks a start vertex
  std::vector<std::vector<int>> adjacent;
  std::vector<int> left_ships;
  std::vector<int> right_ships;

  std::size_t size() const { return ids.size(); }
  bool is_start(int v) const { return !value[v].has_value(); }

  const std::vector<int>& ships(Player p) const {
    return p == Player::Left ? left_ships : right_ships;
  }

  // -1 when absent.
  int index(const std::string& id) const {
    auto it = std::find(ids.begin(), ids.end(), id);
    return it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
  }
};

inline PiratesBoard parse_board(std::istream& in) {
  PiratesBoard b;
  std::map<std::string, int> index;
  std::set<std::pair<int, int>> edges;
  std::set<int> occupied;
  std::vector<std::pair<std::string, std::size_t>> pending_ships;
  std::vector<std::tuple<std::string, std::string, std::size_t>> pending_edges;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;
    const std::string& kind = w[0];
    if (kind == "vertex") {
      if (w.size() != 3) throw BoardError("usage: vertex <id> <value|start>", line);
      if (index.count(w[1])) throw BoardError("duplicate vertex " + w[1], line);
      std::optional<Score> v;
      if (w[2] != "start") {
        try {
          v = Score::parse(w[2]);
        } catch (const ParseError&) {
          throw BoardError("bad treasure value '" + w[2] + "'", line);
        }
      }
      index[w[1]] = static_cast<int>(b.ids.size());
      b.ids.push_back(w[1]);
      b.value.push_back(std::move(v));
      b.adjacent.emplace_back();
    } else if (kind == "edge") {
      if (w.size() != 3) throw BoardError("usage: edge <id> <id>", line);
      pending_edges.emplace_back(w[1], w[2], line);
    } else if (kind == "left" || kind == "right") {
      if (w.size() != 2) throw BoardError("usage: " + kind + " <id>", line);
      pending_ships.emplace_back(kind + " " + w[1], line);
    } else {
      throw BoardError("unknown directive '" + kind + "'", line);
    }
  }

  auto lookup = [&](const std::string& id, std::size_t at) {
    auto it = index.find(id);
    if (it == index.end()) throw BoardError("unknown vertex " + id, at);
    return it->second;
  };
  for (const auto& [a, c, at] : pending_edges) {
    const int u = lookup(a, at);
    const int v = lookup(c, at);
    if (u == v) throw BoardError("loop at vertex " + a, at);
    if (!edges.emplace(std::min(u, v), std::max(u, v)).second) {
      throw BoardError("duplicate edge " + a + " " + c, at);
    }
    b.adjacent[u].push_back(v);
    b.adjacent[v].push_back(u);
  }
  for (const auto& [spec, at] : pending_ships) {
    const auto space = spec.find(' ');
    const std::string id = spec.substr(space + 1);
    const int v = lookup(id, at);
    if (!b.is_start(v)) {
      throw BoardError("ship on vertex " + id + ", which carries treasure", at);
    }
    if (!occupied.insert(v).second) {
      throw BoardError("two ships on vertex " + id, at);
    }
    (spec[0] == 'l' ? b.left_ships : b.right_ships).push_back(v);
  }
  return b;
}

inline PiratesBoard parse_board(const std::string& text) {
  std::istringstream in(text);
  return parse_board(in);
}

inline PiratesBoard load_board(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open board file " + path);
  return parse_board(in);
}

struct PiratesPosition {
  std::shared_ptr<const PiratesBoard> board;
  std::vector<bool> visited;
  std::vector<int> left_at;
  std::vector<int> right_at;
  Score score;

  std::vector<int>& ships(Player p) {
    return p == Player::Left ? left_at : right_at;
  }
  const std::vector<int>& ships(Player p) const {
    return p == Player::Left ? left_at : right_at;
  }

  // Same-player ships are interchangeable, so they are kept sorted.
  std::string key() const {
    std::string k;
    k.reserve(visited.size() + 4 * (left_at.size() + right_at.size()) + 8);
    for (bool v : visited) k += v ? '1' : '0';
    for (const auto* side : {&left_at, &right_at}) {
      k += '|';
      for (int s : *side) k += std::to_string(s) + ',';
    }
    return k + '|' + score.str();
  }
};

// Start vertices and ship locations are visited; the score is 0.
inline PiratesPosition initial_position(PiratesBoard board) {
  PiratesPosition p;
  auto shared = std::make_shared<const PiratesBoard>(std::move(board));
  p.visited.assign(shared->size(), false);
  for (std::size_t v = 0; v < shared->size(); ++v) {
    if (shared->is_start(static_cast<int>(v))) p.visited[v] = true;
  }
  p.left_at = shared->left_ships;
  p.right_at = shared->right_ships;
  std::sort(p.left_at.begin(), p.left_at.end());
  std::sort(p.right_at.begin(), p.right_at.end());
  p.board = std::move(shared);
  return p;
}

// Every position reachable by one move of p.
inline std::vector<PiratesPosition> moves(const PiratesPosition& pos,
                                          Player p) {
  std::vector<PiratesPosition> out;
  const PiratesBoard& b = *pos.board;
  const std::vector<int>& ships = pos.ships(p);
  for (std::size_t i = 0; i < ships.size(); ++i) {
    for (int v : b.adjacent[ships[i]]) {
      if (pos.visited[v]) continue;
      PiratesPosition next = pos;
      next.visited[v] = true;
      next.ships(p)[i] = v;
      std::sort(next.ships(p).begin(), next.ships(p).end());
      next.score = p == Player::Left ? pos.score + *b.value[v]
                                     : pos.score - *b.value[v];
      out.push_back(std::move(next));
    }
  }
  return out;
}

// Builds the game tree of a position. Transpositions are shared; more than
// max_states distinct positions throws CapExceeded.
class PiratesTranslator {
 public:
  explicit PiratesTranslator(std::uint64_t max_states = kDefaultMaxStates)
      : max_states_(max_states) {}

  Game operator()(const PiratesPosition& pos) {
    std::string k = pos.key();
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    if (memo_.size() >= max_states_) {
      throw CapExceeded("more than " + std::to_string(max_states_) +
                        " reachable positions");
    }
    std::vector<Game> left;
    std::vector<Game> right;
    for (const PiratesPosition& n : moves(pos, Player::Left)) {
      left.push_back((*this)(n));
    }
    for (const PiratesPosition& n : moves(pos, Player::Right)) {
      right.push_back((*this)(n));
    }
    Game g = make_game(std::move(left), pos.score, std::move(right));
    memo_.emplace(std::move(k), g);
    return g;
  }

  std::size_t states() const { return memo_.size(); }

 private:
  std::uint64_t max_states_;
  std::unordered_map<std::string, Game> memo_;
};

inline Game to_game(const PiratesPosition& pos,
                    std::uint64_t max_states = kDefaultMaxStates) {
  return PiratesTranslator(max_states)(pos);
}

inline OutcomeReport solve(const PiratesPosition& pos,
                           std::uint64_t max_states = kDefaultMaxStates) {
  return outcome_report(to_game(pos, max_states));
}

// A path v0 - v1 - ... with the given vertices marked as ship starts and
// every other vertex worth x.
inline PiratesBoard path_board(int vertices, const std::vector<int>& left,
                               const std::vector<int>& right,
                               const Score& x = Score(1)) {
  std::ostringstream text;
  auto is_in = [](const std::vector<int>& v, int i) {
    return std::find(v.begin(), v.end(), i) != v.end();
  };
  for (int i = 0; i < vertices; ++i) {
    text << "vertex v" << i << ' '
         << (is_in(left, i) || is_in(right, i) ? std::string("start") : x.str())
         << '\n';
  }
  for (int i = 0; i + 1 < vertices; ++i) {
    text << "edge v" << i << " v" << i + 1 << '\n';
  }
  for (int i : left) text << "left v" << i << '\n';
  for (int i : right) text << "right v" << i << '\n';
  return parse_board(text.str());
}

}  // namespace scoreplay

#endif  // SCOREPLAY_PIRATES_HPP_
