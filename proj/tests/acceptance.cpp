// Runs the twelve acceptance criteria with pinned seeds, counts and time
// limits. One PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "hnq/error.hpp"
#include "hnq/suites.hpp"

namespace {

using namespace hnq;

constexpr std::uint64_t kSeed = 1;

struct Criterion {
  int id;
  std::string title;
  std::vector<std::pair<SuiteFn, SuiteOptions>> suites;
  double limit_seconds;  // 0: no limit
};

SuiteOptions opts(long count = 0, Field field = Field::F2()) {
  SuiteOptions o;
  o.seed = kSeed;
  o.count = count;
  o.field = field;
  return o;
}

std::string counters_text(const SuiteReport& r) {
  std::string out;
  for (const auto& [k, v] : r.counters) out += " " + k + "=" + std::to_string(v);
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "fixture rank and skyscraper invariants", {{suite_fixtures, opts()}}, 1},
      {2,
       "HN post-conditions, additivity, seesaw",
       {{suite_hn_postconditions, opts(500)}, {suite_additivity, opts(200)}, {suite_seesaw, opts(300)}},
       120},
      {3, "rank invariant from skyscraper HN types", {{suite_rank_from_hn, opts(200)}}, 60},
      {4, "type-A classifier vs interval stability", {{suite_type_a_oracle, opts(50)}}, 120},
      {5, "zigzag barcode round trip", {{suite_zigzag_roundtrip, opts(200)}}, 120},
      {6, "incomplete-charge counterexamples", {{suite_counterexamples, opts(50)}}, 0},
      {7, "grid completeness and rectangle recovery", {{suite_grid_oracle, opts(100)}}, 180},
      {8, "max flow, min cut, lattice inequality", {{suite_flow_mincut, opts(100)}, {suite_lattice, opts(10000)}}, 120},
      {9, "ladder closed forms and family size", {{suite_ladder_closed_form, opts()}}, 300},
      {10, "ladder multiset round trip", {{suite_ladder_roundtrip, opts(200)}}, 300},
      {11, "length-4 infeasibility certificate", {{suite_ladder_infeasibility, opts()}}, 1},
      {12, "nested fixture, F3, V(1) vs V(2)", {{suite_nested_fixture, opts(50, Field::F3())}}, 120},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<SuiteReport> reports;
    std::string error;
    try {
      for (const auto& [fn, o] : c.suites) reports.push_back(fn(o));
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    long checks = 0, violations = 0;
    for (const auto& r : reports) {
      checks += r.checks;
      violations += r.violations;
    }
    const bool in_time = c.limit_seconds <= 0 || seconds < c.limit_seconds;
    const bool pass = error.empty() && violations == 0 && checks > 0 && in_time;
    failed += !pass;
    char timing[96];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2fs (limit %.0fs)", seconds, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << "C" << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.title << ": " << checks << " checks, "
              << violations << " violations, " << timing << "\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    for (const auto& r : reports) {
      const std::string counters = counters_text(r);
      if (!counters.empty()) std::cout << "    " << r.name << ":" << counters << "\n";
      for (const auto& f : r.failures) std::cout << "    failure: " << f.substr(0, 300) << "\n";
      if (!pass)
        for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
