#include "doctest.h"
#include "hnq/suites.hpp"

using namespace hnq;

namespace {

SuiteOptions small(long count, std::uint64_t seed = 7) {
  SuiteOptions o;
  o.seed = seed;
  o.count = count;
  return o;
}

}  // namespace

TEST_CASE("every registered suite runs clean at small counts") {
  for (const auto& [name, fn] : suite_registry()) {
    if (name == "nested-fixture") continue;
    CAPTURE(name);
    auto r = fn(small(10));
    CHECK(r.checks > 0);
    CHECK(r.violations == 0);
    for (const auto& f : r.failures) MESSAGE(f);
  }
}

TEST_CASE("suites are deterministic for a fixed seed") {
  auto a = suite_hn_postconditions(small(20, 1));
  auto b = suite_hn_postconditions(small(20, 1));
  CHECK(a.checks == b.checks);
  CHECK(a.counters == b.counters);
}

TEST_CASE("nested fixture: F3 pair differs, F5 pair agrees") {
  SuiteOptions o = small(10);
  o.field = Field::F3();
  auto r = suite_nested_fixture(o);
  REQUIRE(r.counters.count("F3 V(1)/V(2) mismatches"));
  REQUIRE(r.counters.count("F5 V(2)/V(3) mismatches"));
  // lambda = 1 makes the vertical map singular; F3 has no pair avoiding 0 and 1.
  CHECK(r.counters.at("F3 V(1)/V(2) mismatches") > 0);
  CHECK(r.counters.at("F5 V(2)/V(3) mismatches") == 0);
}
