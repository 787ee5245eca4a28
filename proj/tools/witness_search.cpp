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

// Finds the smallest pair of games realizing each (class, class -> class)
// entry of the two outcome tables and prints fixture rows for it.
//
//   witness_search [tame|tame_x] [seed]

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "scoreplay/enumerate.hpp"
#include "scoreplay/fixtures.hpp"
#include "scoreplay/minimax.hpp"
#include "scoreplay/tame.hpp"
#include "scoreplay/tamex.hpp"

using namespace scoreplay;

namespace {

struct Entry {
  Game game;
  OutcomeClass cls;
  std::size_t size;
};

std::string lower(OutcomeClass c) {
  std::string s(outcome_name(c));
  for (char& ch : s) ch = static_cast<char>(std::tolower(ch));
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "tame";
  const std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 7;
  const bool tame_mode = mode == "tame";

  std::vector<Game> pool;
  std::string search_name;
  if (tame_mode) {
    EnumerationBudget small;
    small.max_depth = 1;
    small.score_alphabet = score_range(-2, 2);
    auto tame = [](const Game& g) { return is_tame(g).is_tame; };
    pool = enumerate_games(small, tame);
    EnumerationBudget wide;
    wide.max_depth = 3;
    wide.score_alphabet = score_range(-2, 2);
    wide.max_games = 4000;
    wide.sample_seed = seed;
    for (const Game& g : enumerate_games(wide, tame)) pool.push_back(g);
    search_name = "search(witness_search tame " + std::to_string(seed) + ")";
  } else {
    EnumerationBudget b;
    b.max_depth = 3;
    b.max_games = 4000;
    b.sample_seed = seed;
    pool = enumerate_universe(b, Universe());
    search_name = "search(witness_search tame_x " + std::to_string(seed) + ")";
  }

  std::map<OutcomeClass, std::vector<Entry>> by_class;
  for (const Game& g : pool) {
    by_class[outcome(g)].push_back({g, outcome(g), g.dag_size()});
  }
  for (auto& [c, v] : by_class) {
    std::stable_sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) {
      return a.size < b.size;
    });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const Entry& a, const Entry& b) {
                          return a.game == b.game;
                        }),
            v.end());
    std::cerr << outcome_name(c) << ": " << v.size() << " games\n";
  }

  for (OutcomeClass cg : kAllOutcomes) {
    for (OutcomeClass ch : kAllOutcomes) {
      if (static_cast<int>(ch) < static_cast<int>(cg)) continue;
      OutcomeSet cell;
      try {
        cell = tame_mode ? table1_cell(cg, ch) : table2_cell(cg, ch);
      } catch (const std::invalid_argument&) {
        continue;
      }
      const auto& gs = by_class[cg];
      const auto& hs = by_class[ch];
      for (OutcomeClass target : kAllOutcomes) {
        if (!cell.contains(target)) continue;
        std::size_t best = SIZE_MAX;
        const Entry* bg = nullptr;
        const Entry* bh = nullptr;
        for (const Entry& g : gs) {
          if (g.size >= best) break;
          for (const Entry& h : hs) {
            if (g.size + h.size >= best) break;
            SumScoreSolver solver;
            if (outcome_report(solver(g.game, h.game)).outcome == target) {
              best = g.size + h.size;
              bg = &g;
              bh = &h;
              break;
            }
          }
        }
        const std::string id = std::string(tame_mode ? "t1" : "t2") +
                               "-search-" + lower(cg) + "-" + lower(ch) +
                               "-" + lower(target);
        if (!bg) {
          std::cout << "# " << id << " | no witness found\n";
          continue;
        }
        std::cout << id << " | " << format_game(bg->game) << " + "
                  << format_game(bh->game) << " | "
                  << (tame_mode ? "tame" : "tame_x=1") << ": "
                  << outcome_name(cg) << "," << outcome_name(ch) << " -> "
                  << outcome_name(target) << " | " << search_name << "\n";
      }
    }
  }
  return 0;
}
