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

#ifndef SCOREPLAY_REPORT_HPP_
#define SCOREPLAY_REPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace scoreplay {

struct Violation {
  std::string check;
  std::string message;
  std::vector<std::string> games;  // replayable notation

  std::string line() const {
    std::string out = "violation " + check + ": " + message;
    for (const std::string& g : games) out += " " + g;
    return out;
  }

  friend bool operator<(const Violation& a, const Violation& b) {
    return std::tie(a.check, a.message, a.games) <
           std::tie(b.check, b.message, b.games);
  }
};

// Aggregate result of a sweep. Counts are keyed by name and violations are
// kept sorted, so the text form does not depend on visiting order.
class SweepReport {
 public:
  static constexpr std::size_t kKeptViolations = 50;

  explicit SweepReport(std::string name, std::string budget = {})
      : name_(std::move(name)), budget_(std::move(budget)) {}

  const std::string& name() const { return name_; }
  const std::string& budget() const { return budget_; }
  void set_budget(std::string b) { budget_ = std::move(b); }

  void count(const std::string& key, std::uint64_t n = 1) { counts_[key] += n; }
  std::uint64_t get(const std::string& key) const {
    auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
  }
  void note(std::string line) { notes_.push_back(std::move(line)); }

  void fail(Violation v) {
    ++violation_count_;
    auto at = std::lower_bound(violations_.begin(), violations_.end(), v);
    violations_.insert(at, std::move(v));
    if (violations_.size() > kKeptViolations) violations_.pop_back();
  }
  void fail(std::string check, std::string message,
            std::vector<std::string> games = {}) {
    fail(Violation{std::move(check), std::move(message), std::move(games)});
  }

  void merge(const SweepReport& other) {
    for (const auto& [k, v] : other.counts_) counts_[other.name_ + "." + k] += v;
    for (const auto& n : other.notes_) notes_.push_back(other.name_ + ": " + n);
    for (const auto& v : other.violations_) fail(v);
    violation_count_ += other.violation_count_ - other.violations_.size();
  }

  bool ok() const { return violation_count_ == 0; }
  std::uint64_t violation_count() const { return violation_count_; }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::map<std::string, std::uint64_t>& counts() const { return counts_; }
  const std::vector<std::string>& notes() const { return notes_; }

  std::string str() const {
    std::ostringstream os;
    os << name_ << ": " << (ok() ? "ok" : "FAILED") << "\n";
    if (!budget_.empty()) os << "budget: " << budget_ << "\n";
    for (const auto& [k, v] : counts_) os << "  " << k << " = " << v << "\n";
    for (const auto& n : notes_) os << "  " << n << "\n";
    os << "violations: " << violation_count_ << "\n";
    for (const auto& v : violations_) os << v.line() << "\n";
    if (violation_count_ > violations_.size()) {
      os << "(" << violation_count_ - violations_.size()
         << " further violations not listed)\n";
    }
    return os.str();
  }

 private:
  std::string name_;
  std::string budget_;
  std::map<std::string, std::uint64_t> counts_;
  std::vector<std::string> notes_;
  std::vector<Violation> violations_;
  std::uint64_t violation_count_ = 0;
};

}  // namespace scoreplay

#endif  // SCOREPLAY_REPORT_HPP_
