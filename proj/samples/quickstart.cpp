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

// A tour of the library: parse, add, solve, test tameness, move between
// scoring play and normal play, and build a Pirates game.

#include <iostream>

#include "scoreplay/minimax.hpp"
#include "scoreplay/notation.hpp"
#include "scoreplay/pirates.hpp"
#include "scoreplay/tame.hpp"
#include "scoreplay/tamex.hpp"

int main() {
  using namespace scoreplay;

  const Game g = parse_game("{2|0|-1}");
  const Game s = sum(g, g);
  std::cout << format_game(g) << " + itself = " << format_game(s) << '\n';
  std::cout << "  " << machine_record(s, outcome_report(s)) << '\n';

  // Tame games are not closed under sum.
  const Game t = sum(parse_game("{2|0|.}"), parse_game("{.|0|-1}"));
  std::cout << format_game(t) << ": " << is_tame(t).str() << '\n';

  // Tame_1 mirrors normal play: * becomes {1|0|-1}, and * + * is a tie.
  const Universe u;
  const Game star = embed(parse_normal("{{.|.}|{.|.}}"), u);
  std::cout << "star in Tame_1: " << format_game(star) << ", star + star is "
            << outcome_name(outcome(sum(star, star))) << '\n';
  TameX tx(u);
  std::cout << "canonical {0,1|} in Tame_1: "
            << format_game(tx.canonical(
                   embed(parse_normal("{{.|.},{{.|.}|.}|.}"), u)))
            << '\n';
  for (const SurrealValue& v : surreal_day(2, u)) {
    std::cout << "  " << v.value << " = " << format_game(v.game) << '\n';
  }

  const PiratesBoard board = parse_board(std::string(
      "vertex a start\nvertex b 2\nvertex c start\nvertex d 1\n"
      "edge a b\nedge c d\nleft a\nright c\n"));
  const Game p = to_game(initial_position(board));
  std::cout << "pirates: " << format_game(p) << " class "
            << outcome_name(outcome(p)) << '\n';
}
