#pragma once

// Property suites shared by the command line `verify` command and the
// acceptance binary. Each suite counts checks and violations and keeps the
// first few failing inputs verbatim.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hnq/representation.hpp"

namespace hnq {

struct SuiteOptions {
  std::uint64_t seed = 1;
  long count = 0;   // 0 picks the suite default
  int length = 0;   // ladder or zigzag length; 0 picks the suite default
  long budget = 0;  // max total dimension of generated modules; 0 = default
  Field field = Field::F2();
};

struct SuiteReport {
  SuiteReport() = default;
  explicit SuiteReport(std::string n) : name(std::move(n)) {}

  std::string name;
  long checks = 0;
  long violations = 0;
  std::vector<std::string> failures;  // first few, verbatim
  std::vector<std::string> notes;     // informational
  std::map<std::string, long> counters;

  bool ok() const { return violations == 0; }
  /// Records one check; `describe` is only called on failure.
  void check(bool condition, const std::function<std::string()>& describe);
  void note(std::string line) { notes.push_back(std::move(line)); }
};

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

/// Fixtures: equal rank invariants, different skyscraper invariants, pinned
/// HN types along the bottom-left skyscraper.
SuiteReport suite_fixtures(const SuiteOptions& o);
/// HN filtrations of random small modules re-checked against the full
/// subrepresentation lattice; dispatcher agrees with brute force.
SuiteReport suite_hn_postconditions(const SuiteOptions& o);
/// hn(V + W) = hn(V) + hn(W), conjugation invariance, semistable sums.
SuiteReport suite_additivity(const SuiteOptions& o);
/// Exactly one of the three slope orders for U < V with quotient V/U.
SuiteReport suite_seesaw(const SuiteOptions& o);
/// Shape of HN filtrations along skyscraper charges.
SuiteReport suite_skyscraper_structure(const SuiteOptions& o);
/// Rank invariant read off the skyscraper HN types of equalised grid modules.
SuiteReport suite_rank_from_hn(const SuiteOptions& o);
/// Type-A classifier against stability of every interval module.
SuiteReport suite_type_a_oracle(const SuiteOptions& o);
/// Equal-HN-type pairs built from unstable intervals of incomplete charges.
SuiteReport suite_counterexamples(const SuiteOptions& o);
/// Barcode -> module -> conjugate -> HN type -> barcode.
SuiteReport suite_zigzag_roundtrip(const SuiteOptions& o);
/// Grid classifier against rectangle stability, and rectangle recovery.
SuiteReport suite_grid_oracle(const SuiteOptions& o);
/// Max flow against brute-force min cut on the up-set networks.
SuiteReport suite_flow_mincut(const SuiteOptions& o);
/// Lattice inequality and the four-function consequence.
SuiteReport suite_lattice(const SuiteOptions& o);
/// Ladder closed forms against brute force and the family size.
SuiteReport suite_ladder_closed_form(const SuiteOptions& o);
/// Nestfree multiset -> module -> conjugate -> HN types -> multiset.
SuiteReport suite_ladder_roundtrip(const SuiteOptions& o);
/// The five-inequality contradiction at length four.
SuiteReport suite_ladder_infeasibility(const SuiteOptions& o);
/// Nested fixture over F3: no identity morphism, equal HN types.
SuiteReport suite_nested_fixture(const SuiteOptions& o);

/// Suites by command-line name, in a fixed order.
const std::vector<std::pair<std::string, SuiteFn>>& suite_registry();

}  // namespace hnq
