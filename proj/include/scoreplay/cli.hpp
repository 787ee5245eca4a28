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

// Command-line front end. Needs CLI11.hpp on the include path.
//
// Exit codes: 0 success, 1 verification found violations, 2 bad usage or
// bad input.

#ifndef SCOREPLAY_CLI_HPP_
#define SCOREPLAY_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scoreplay/equality.hpp"
#include "scoreplay/fixtures.hpp"
#include "scoreplay/minimax.hpp"
#include "scoreplay/notation.hpp"
#include "scoreplay/pirates.hpp"
#include "scoreplay/tame.hpp"
#include "scoreplay/tamex.hpp"
#include "scoreplay/verify.hpp"

#ifndef SCOREPLAY_DEFAULT_FIXTURES
#define SCOREPLAY_DEFAULT_FIXTURES "data/fixtures.txt"
#endif

namespace scoreplay {

struct CliConfig {
  std::string command;
  std::vector<std::string> args;
  bool machine = false;
  std::string x = "1";
  std::string universe = "tame-x";
  int depth = 3;
  int branching = 2;
  std::string scores = "-2..2";
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> max_games;
  std::uint64_t max_pairs = kExhaustivePairLimit;
  std::uint64_t max_states = kDefaultMaxStates;
  std::string fixtures = SCOREPLAY_DEFAULT_FIXTURES;
  bool tree = false;
  bool solve = false;
};

namespace detail {

class UsageError : public Error {
 public:
  using Error::Error;
};

// "-2..2" or a comma list such as "-1,0,1/2".
inline std::vector<Score> parse_scores(const std::string& s) {
  if (auto dots = s.find(".."); dots != std::string::npos) {
    try {
      const long long lo = std::stoll(s.substr(0, dots));
      const long long hi = std::stoll(s.substr(dots + 2));
      if (lo > hi) throw UsageError("empty score range " + s);
      return score_range(lo, hi);
    } catch (const std::logic_error&) {
      throw UsageError("bad score range " + s);
    }
  }
  std::vector<Score> out;
  for (const std::string& part : split(s, ',')) out.push_back(Score::parse(part));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline EnumerationBudget budget_of(const CliConfig& c) {
  EnumerationBudget b;
  b.max_depth = c.depth;
  b.max_branching = c.branching;
  b.score_alphabet = parse_scores(c.scores);
  b.max_games = c.max_games;
  b.sample_seed = c.seed;
  b.max_pairs = c.max_pairs;
  return b;
}

inline Universe universe_of(const CliConfig& c) {
  UniverseMode m;
  if (c.universe == universe_flag(UniverseMode::Normal)) {
    m = UniverseMode::Normal;
  } else if (c.universe == universe_flag(UniverseMode::Misere)) {
    m = UniverseMode::Misere;
  } else {
    throw UsageError("--universe must be tame-x or tame-neg-x");
  }
  const Score x = Score::parse(c.x);
  if (x.sign() <= 0) throw UsageError("--x must be positive");
  return Universe(x, m);
}

inline Universe member_universe(const CliConfig& c,
                                const std::vector<Game>& games,
                                bool normal_only) {
  const Universe u = universe_of(c);
  if (normal_only) require_normal_mode(u, c.command.c_str());
  for (const Game& g : games) require_member(g, u);
  return u;
}

inline void want_args(const CliConfig& c, std::size_t lo, std::size_t hi) {
  if (c.args.size() < lo || c.args.size() > hi) {
    throw UsageError(c.command + ": expected " +
                     (lo == hi ? std::to_string(lo)
                               : std::to_string(lo) + ".." +
                                     (hi == SIZE_MAX ? std::string("n")
                                                     : std::to_string(hi))) +
                     " argument(s), got " + std::to_string(c.args.size()));
  }
}

inline std::vector<Game> parse_args(const CliConfig& c) {
  std::vector<Game> out;
  for (const std::string& a : c.args) out.push_back(parse_game(a));
  return out;
}

inline void print_report(std::ostream& out, const CliConfig& c,
                         const Game& g, const OutcomeReport& r) {
  if (c.machine) {
    out << machine_record(g, r) << '\n';
    return;
  }
  out << "left_final=" << r.finals.left_first
      << " right_final=" << r.finals.right_first
      << " class=" << outcome_name(r.outcome) << '\n'
      << "last mover: " << last_mover_name(r.finals.left_first_last_mover)
      << " when Left starts, "
      << last_mover_name(r.finals.right_first_last_mover)
      << " when Right starts\n";
}

inline int run_verify(const CliConfig& c, std::ostream& out) {
  want_args(c, 1, 1);
  const std::string& target = c.args[0];
  const EnumerationBudget b = budget_of(c);
  std::vector<Fixture> fixtures;
  auto need_fixtures = [&] {
    fixtures = load_fixtures(c.fixtures);
    return &fixtures;
  };
  SweepReport rep("none");
  if (target == "table1") {
    rep = verify_table1(b, need_fixtures());
  } else if (target == "table2") {
    rep = verify_table2(b, universe_of(c), need_fixtures());
  } else if (target == "monoid") {
    rep = verify_monoid(b);
  } else if (target == "group") {
    rep = verify_group(b, universe_of(c), need_fixtures());
  } else if (target == "misere") {
    rep = verify_misere_outcomes(b, Score::parse(c.x));
    EnumerationBudget members = b;
    members.max_depth = std::min(b.max_depth, 2);
    members.max_games.reset();
    EnumerationBudget contexts = b;
    contexts.max_games.reset();
    rep.merge(verify_misere_nonzero(members, contexts, Score::parse(c.x)));
  } else if (target == "fixtures") {
    rep = run_fixture_suite(*need_fixtures());
  } else if (target == "mapping") {
    rep = verify_mapping(b, universe_of(c));
  } else {
    throw UsageError(
        "verify target must be table1, table2, monoid, group, misere, "
        "fixtures or mapping");
  }
  out << rep.str();
  return rep.ok() ? 0 : 1;
}

inline int dispatch(const CliConfig& c, std::ostream& out) {
  const std::string& cmd = c.command;
  if (cmd == "eval") {
    want_args(c, 1, 1);
    const Game g = parse_game(c.args[0]);
    print_report(out, c, g, outcome_report(g));
  } else if (cmd == "sum") {
    want_args(c, 1, SIZE_MAX);
    const std::vector<Game> gs = parse_args(c);
    out << format_game(sum(std::span<const Game>(gs))) << '\n';
  } else if (cmd == "neg") {
    want_args(c, 1, 1);
    out << format_game(negate(parse_game(c.args[0]))) << '\n';
  } else if (cmd == "tame") {
    want_args(c, 1, 1);
    const TameCertificate cert = is_tame(parse_game(c.args[0]));
    out << (c.machine ? "tame=" + std::string(cert.is_tame ? "true" : "false")
                      : cert.str())
        << '\n';
  } else if (cmd == "cmp") {
    want_args(c, 2, 2);
    const std::vector<Game> gs = parse_args(c);
    const Universe u = member_universe(c, gs, true);
    TameX tx(u);
    const bool ge = tx.geq(gs[0], gs[1]);
    const bool le = tx.leq(gs[0], gs[1]);
    const char* rel = ge && le ? "=" : ge ? ">" : le ? "<" : "||";
    if (c.machine) {
      out << "geq=" << (ge ? "true" : "false")
          << " leq=" << (le ? "true" : "false") << " relation=" << rel << '\n';
    } else {
      out << "G " << rel << " H in " << u.name() << '\n';
    }
  } else if (cmd == "canon") {
    want_args(c, 1, 1);
    const std::vector<Game> gs = parse_args(c);
    const Universe u = member_universe(c, gs, true);
    out << format_game(canonical_form_x(gs[0], u)) << '\n';
  } else if (cmd == "number") {
    want_args(c, 1, 1);
    const std::vector<Game> gs = parse_args(c);
    const Universe u = member_universe(c, gs, true);
    const bool num = is_number(gs[0], u);
    std::optional<Score> v;
    if (num) v = NormalOracle().number_value(strip(gs[0], u));
    if (c.machine) {
      out << "number=" << (num ? "true" : "false");
      if (v) out << " value=" << *v;
      out << '\n';
    } else if (num) {
      out << "number " << (v ? v->str() : std::string("?")) << '\n';
    } else {
      out << "not a number\n";
    }
  } else if (cmd == "surreal") {
    want_args(c, 1, 1);
    int day = 0;
    try {
      day = std::stoi(c.args[0]);
    } catch (const std::logic_error&) {
      throw UsageError("surreal: day must be an integer");
    }
    const Universe u = universe_of(c);
    require_normal_mode(u, "surreal");
    const auto values = surreal_day(day, u);
    out << "day " << day << " in " << u.name() << ": " << values.size()
        << " numbers\n";
    for (const SurrealValue& s : values) {
      out << s.value << ' ' << format_game(s.game) << '\n';
    }
  } else if (cmd == "distinguish") {
    want_args(c, 2, 2);
    const std::vector<Game> gs = parse_args(c);
    const EnumerationBudget b = budget_of(c);
    out << "budget: " << b.describe() << '\n';
    EqualityVerdict v;
    if (c.universe == universe_flag(UniverseMode::Misere) &&
        gs[1] == leaf(0)) {
      v = misere_nonzero_search(gs[0], b, Score::parse(c.x));
    } else {
      v = equal_bounded(gs[0], gs[1], b);
    }
    out << v.str() << '\n';
  } else if (cmd == "pirates") {
    want_args(c, 1, 1);
    if (c.tree == c.solve) {
      throw UsageError("pirates: pass exactly one of --tree and --solve");
    }
    const Game g =
        to_game(initial_position(load_board(c.args[0])), c.max_states);
    if (c.tree) {
      out << format_game(g) << '\n';
    } else {
      print_report(out, c, g, outcome_report(g));
    }
  } else if (cmd == "verify") {
    return run_verify(c, out);
  } else {
    throw UsageError("unknown command '" + cmd + "'");
  }
  return 0;
}

}  // namespace detail

// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CliConfig c;
  CLI::App app{"Scoring-play combinatorial game toolkit", "scoreplay"};
  app.add_flag("--machine", c.machine, "key=value output");
  app.add_option("--x", c.x, "move value x of the universe");
  app.add_option("--universe", c.universe, "tame-x or tame-neg-x");
  app.add_option("--depth", c.depth, "enumeration depth");
  app.add_option("--branching", c.branching, "options per side");
  app.add_option("--scores", c.scores, "score alphabet, lo..hi or a,b,c");
  app.add_option("--seed", c.seed, "sampling seed");
  app.add_option("--max-games", c.max_games, "games drawn per sweep");
  app.add_option("--max-pairs", c.max_pairs, "pairs checked per sweep");
  app.add_option("--max-states", c.max_states, "Pirates position cap");
  app.add_option("--fixtures", c.fixtures, "fixture file");
  app.add_flag("--tree", c.tree, "pirates: print the game tree");
  app.add_flag("--solve", c.solve, "pirates: print the outcome");
  app.add_option("command", c.command,
                 "eval sum neg tame cmp canon number surreal verify "
                 "distinguish pirates")
      ->required();
  app.add_option("args", c.args, "games, files or targets");
  app.positionals_at_end(false);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  try {
    return detail::dispatch(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace scoreplay

#endif  // SCOREPLAY_CLI_HPP_
