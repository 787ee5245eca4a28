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

// Fixture registry: one row per worked example.
//
//   id | game + game | claim | provenance
//
// Claims:
//   tame: C1,C2 -> C        both games tame, of classes C1 and C2, sum in C
//   tame_x=R: C1,C2 -> C    both games in Tame_R, likewise
//   not tame                the sum of the listed games fails the tame test
//
// Provenance is free text; rows taken from drawn figures start with
// "figure", rows produced by search start with "search". Lines starting
// with '#' and blank lines are ignored.

#ifndef SCOREPLAY_FIXTURES_HPP_
#define SCOREPLAY_FIXTURES_HPP_

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "scoreplay/errors.hpp"
#include "scoreplay/game.hpp"
#include "scoreplay/minimax.hpp"
#include "scoreplay/notation.hpp"
#include "scoreplay/report.hpp"
#include "scoreplay/tame.hpp"
#include "scoreplay/tamex.hpp"

namespace scoreplay {

enum class FixtureContext { Tame, TameX, NotTame };

struct Fixture {
  std::string id;
  std::vector<Game> games;
  FixtureContext context = FixtureContext::Tame;
  Score x = Score(1);
  OutcomeClass first = OutcomeClass::Ti;
  OutcomeClass second = OutcomeClass::Ti;
  OutcomeClass expected = OutcomeClass::Ti;
  std::string claim;
  std::string provenance;
  int line = 0;

  bool from_figure() const { return provenance.rfind("figure", 0) == 0; }
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t from = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '{') ++depth;
    if (s[i] == '}') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(from, i - from)));
      from = i + 1;
    }
  }
  out.push_back(trim(s.substr(from)));
  return out;
}

inline OutcomeClass class_or_throw(const std::string& s, int line) {
  auto c = parse_outcome(trim(s));
  if (!c) throw BoardError("unknown outcome class '" + s + "'", line);
  return *c;
}

}  // namespace detail

// Throws BoardError (which carries the line number) on malformed rows.
inline std::vector<Fixture> parse_fixtures(std::istream& in) {
  std::vector<Fixture> out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = detail::trim(raw);
    if (text.empty() || text[0] == '#') continue;
    auto cols = detail::split(text, '|');
    if (cols.size() != 4) {
      throw BoardError("expected 4 '|'-separated columns", line);
    }
    Fixture f;
    f.id = cols[0];
    f.claim = cols[2];
    f.provenance = cols[3];
    f.line = line;
    try {
      for (const std::string& g : detail::split(cols[1], '+')) {
        f.games.push_back(parse_game(g));
      }
    } catch (const ParseError& e) {
      throw BoardError(std::string("bad notation: ") + e.what(), line);
    }
    const std::string& claim = f.claim;
    if (claim == "not tame") {
      f.context = FixtureContext::NotTame;
      out.push_back(std::move(f));
      continue;
    }
    const auto colon = claim.find(':');
    const auto arrow = claim.find("->");
    if (colon == std::string::npos || arrow == std::string::npos) {
      throw BoardError("claim must look like 'tame: N,N -> L'", line);
    }
    const std::string ctx = detail::trim(claim.substr(0, colon));
    if (ctx == "tame") {
      f.context = FixtureContext::Tame;
    } else if (ctx.rfind("tame_x=", 0) == 0) {
      f.context = FixtureContext::TameX;
      try {
        f.x = Score::parse(ctx.substr(7));
      } catch (const ParseError& e) {
        throw BoardError(std::string("bad x: ") + e.what(), line);
      }
    } else {
      throw BoardError("unknown claim context '" + ctx + "'", line);
    }
    auto parts =
        detail::split(claim.substr(colon + 1, arrow - colon - 1), ',');
    if (parts.size() != 2 || f.games.size() != 2) {
      throw BoardError("sum claims need exactly two games", line);
    }
    f.first = detail::class_or_throw(parts[0], line);
    f.second = detail::class_or_throw(parts[1], line);
    f.expected = detail::class_or_throw(claim.substr(arrow + 2), line);
    out.push_back(std::move(f));
  }
  return out;
}

inline std::vector<Fixture> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture file " + path);
  return parse_fixtures(in);
}

struct FixtureResult {
  std::string id;
  bool pass = false;
  std::string detail;  // computed values, or what went wrong
};

inline FixtureResult check_fixture(const Fixture& f) {
  FixtureResult r{f.id, false, {}};
  if (f.context == FixtureContext::NotTame) {
    const Game total = sum(std::span<const Game>(f.games));
    const TameCertificate c = is_tame(total);
    r.pass = !c.is_tame && replay_violation(total, *c.violation);
    r.detail = c.str();
    return r;
  }
  const Game& g = f.games[0];
  const Game& h = f.games[1];
  if (f.context == FixtureContext::Tame) {
    for (const Game& k : f.games) {
      if (!is_tame(k).is_tame) {
        r.detail = format_game(k) + " is not tame";
        return r;
      }
    }
  } else {
    const Universe u(f.x, UniverseMode::Normal);
    for (const Game& k : f.games) {
      if (!in_universe(k, u)) {
        r.detail = format_game(k) + " is not in " + u.name();
        return r;
      }
    }
  }
  const OutcomeClass og = outcome(g);
  const OutcomeClass oh = outcome(h);
  const OutcomeClass os = outcome(sum(g, h));
  r.detail = std::string(outcome_name(og)) + "," +
             std::string(outcome_name(oh)) + " -> " +
             std::string(outcome_name(os));
  const OutcomeSet cell = f.context == FixtureContext::Tame
                              ? table1_cell(og, oh)
                              : table2_cell(og, oh);
  r.pass = og == f.first && oh == f.second && os == f.expected &&
           cell.contains(os);
  if (!r.pass && !cell.contains(os)) r.detail += " (outside table cell)";
  return r;
}

inline SweepReport run_fixture_suite(const std::vector<Fixture>& fixtures,
                                     std::vector<FixtureResult>* results =
                                         nullptr) {
  SweepReport rep("fixtures");
  for (const Fixture& f : fixtures) {
    FixtureResult r = check_fixture(f);
    rep.count(f.from_figure() ? "figure" : "search");
    rep.count(r.pass ? "pass" : "fail");
    if (!r.pass) {
      std::vector<std::string> games;
      for (const Game& g : f.games) games.push_back(format_game(g));
      rep.fail("fixture", f.id + " expected '" + f.claim + "', got " + r.detail,
               games);
    }
    if (results) results->push_back(std::move(r));
  }
  return rep;
}

}  // namespace scoreplay

#endif  // SCOREPLAY_FIXTURES_HPP_
