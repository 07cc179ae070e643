#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "towerkit/search.hpp"

using namespace towerkit;

namespace {

SearchOptions p5q3() {
  SearchOptions o;
  o.p = 5;
  o.q = 3;
  o.a = testing::P("(1,2,3,4,5)(6,7,8,9,10)(11,12,13,14,15)", 15);
  o.budget = 10'000;
  return o;
}

}  // namespace

TEST_CASE("search at p = 5, q = 3 finds only passing towers") {
  const auto r = search_towers(p5q3());
  CHECK(r.scanned == 4860);
  CHECK(r.b_candidates > 0);
  CHECK(r.distinct_groups > 0);
  REQUIRE_FALSE(r.hits.empty());
  std::set<std::string> labels;
  for (const auto& h : r.hits) {
    CAPTURE(h.report.machine());
    CHECK(h.report.passed());
    CHECK(order_of(h.b) == 5);
    CHECK(order_of(p5q3().a * h.b) == 5);
    CHECK(h.N.order() * 3 == h.H.order());
    labels.insert(h.report.classification->label);
    // The emitted file reproduces the hit.
    const auto again = verify_tower(parse_tower_file(serialize_tower_file(h.to_file(p5q3().a, 5, 3))));
    CHECK(again.passed());
    CHECK(again.machine().find("result.label=" + h.report.classification->label) != std::string::npos);
  }
  for (std::size_t i = 1; i < r.hits.size(); ++i) CHECK(r.hits[i - 1].report.order <= r.hits[i].report.order);
}

TEST_CASE("thread count does not change the result") {
  auto o = p5q3();
  const auto one = search_towers(o);
  o.threads = 3;
  const auto three = search_towers(o);
  CHECK(one.scanned == three.scanned);
  CHECK(one.b_candidates == three.b_candidates);
  CHECK(one.distinct_groups == three.distinct_groups);
  REQUIRE(one.hits.size() == three.hits.size());
  for (std::size_t i = 0; i < one.hits.size(); ++i) {
    CHECK(one.hits[i].b == three.hits[i].b);
    CHECK(one.hits[i].report.machine() == three.hits[i].report.machine());
  }
}

TEST_CASE("search rejects bad inputs") {
  auto o = p5q3();
  o.budget = 100;
  CHECK_THROWS_AS(search_towers(o), BudgetError);
  o = p5q3();
  o.a = testing::P("(1,2,3,4,5)(6,7,8,9,10)", 15);
  CHECK_THROWS_AS(search_towers(o), InvariantError);
}
