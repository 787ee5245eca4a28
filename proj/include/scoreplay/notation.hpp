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

// Bracket notation for scoring games.
//
//   game := rational | "{" opts "|" rational "|" opts "}"
//   opts := "." | game ("," game)*
//
// A bare rational s stands for the leaf {.|s|.}. Whitespace is ignored.
// An empty option list may also be written as nothing at all ("{|0|}").
// Every internal node must carry an explicit score.

#ifndef SCOREPLAY_NOTATION_HPP_
#define SCOREPLAY_NOTATION_HPP_

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scoreplay/errors.hpp"
#include "scoreplay/game.hpp"

namespace scoreplay {

namespace detail {

class NotationReader {
 public:
  explicit NotationReader(std::string_view text) : text_(text) {}

  Game read_all() {
    Game g = read_game();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
    return g;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  Game read_game() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (text_[pos_] != '{') return leaf(Score::parse_prefix(text_, pos_));
    ++pos_;
    std::vector<Game> left = read_options();
    expect('|');
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] == '|') {
      throw ParseError("internal node needs an explicit score", pos_);
    }
    Score s = Score::parse_prefix(text_, pos_);
    expect('|');
    std::vector<Game> right = read_options();
    expect('}');
    return make_game(std::move(left), std::move(s), std::move(right));
  }

  std::vector<Game> read_options() {
    std::vector<Game> out;
    if (peek('.')) {
      ++pos_;
      return out;
    }
    if (peek('|') || peek('}')) return out;
    out.push_back(read_game());
    while (peek(',')) {
      ++pos_;
      out.push_back(read_game());
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Game parse_game(std::string_view text) {
  return detail::NotationReader(text).read_all();
}

inline std::string format_game(const Game& g) {
  std::unordered_map<const void*, std::string> memo;
  auto rec = [&memo](auto& self, const Game& n) -> const std::string& {
    if (auto it = memo.find(n.id()); it != memo.end()) return it->second;
    std::string out;
    if (n.is_leaf()) {
      out = n.score().str();
    } else {
      auto side = [&](std::span<const Game> opts) {
        if (opts.empty()) {
          out += '.';
          return;
        }
        for (std::size_t i = 0; i < opts.size(); ++i) {
          if (i > 0) out += ',';
          out += self(self, opts[i]);
        }
      };
      out += '{';
      side(n.left());
      out += '|';
      out += n.score().str();
      out += '|';
      side(n.right());
      out += '}';
    }
    return memo.emplace(n.id(), std::move(out)).first->second;
  };
  return rec(rec, g);
}

}  // namespace scoreplay

#endif  // SCOREPLAY_NOTATION_HPP_
