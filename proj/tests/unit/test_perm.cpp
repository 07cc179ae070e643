#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "towerkit/permutation.hpp"

using namespace towerkit;
using testing::P;

TEST_CASE("parse_cycles reads the degree-14 generator a") {
  const auto a = P(testing::kA14, 14);
  CHECK(a.degree() == 14);
  for (Point x = 0; x < 7; ++x) CHECK(a[x] == (x + 1) % 7);
  for (Point x = 7; x < 14; ++x) CHECK(a[x] == 7 + (x - 7 + 1) % 7);
}

TEST_CASE("parse_cycles identity and involution") {
  CHECK(P("()", 5) == identity(5));
  CHECK(P("  ( ) ", 5) == identity(5));
  const auto h1 = P("(3,10)(5,12)(6,13)(7,14)", 14);
  CHECK(order_of(h1) == 2);
  CHECK(h1[2] == 9);
  CHECK(h1[0] == 0);
  CHECK(format_cycles(h1) == "(3,10)(5,12)(6,13)(7,14)");
}

TEST_CASE("parse_cycles rejects malformed input") {
  CHECK_THROWS_AS(P("(1,2", 3), ParseError);
  CHECK_THROWS_AS(P("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(P("(0,1)", 3), ParseError);
  CHECK_THROWS_AS(P("(1,2)(2,3)", 3), ParseError);
  CHECK_THROWS_AS(P("(1,2,1)", 3), ParseError);
  CHECK_THROWS_AS(P("(1)", 3), ParseError);
  CHECK_THROWS_AS(P("", 3), ParseError);
  CHECK_THROWS_AS(P("()(1,2)", 3), ParseError);
  CHECK_THROWS_AS(P("(1;2)", 3), ParseError);
  CHECK_THROWS_AS(P("1,2", 3), ParseError);
}

TEST_CASE("degree is explicit, not inferred") {
  const auto x = P("(1,2,3,4,5,6,7)", 14);
  CHECK(x.degree() == 14);
  CHECK(cycle_type(x) == CycleType{{1, 7}, {7, 1}});
}

TEST_CASE("compose follows the right action, pinned on all of S3") {
  // (1,2)*(2,3): 1 -> 2 -> 3, 2 -> 1, 3 -> 2  gives (1,3,2).
  CHECK(P("(1,2)", 3) * P("(2,3)", 3) == P("(1,3,2)", 3));
  CHECK_FALSE(P("(1,2)", 3) * P("(2,3)", 3) == P("(1,2,3)", 3));

  std::vector<oracle::Perm> s3;
  oracle::Perm base = oracle::identity(3);
  do s3.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  REQUIRE(s3.size() == 6);
  int left_action_disagreements = 0;
  for (const auto& p : s3) {
    for (const auto& q : s3) {
      const auto prod = testing::from_oracle(p) * testing::from_oracle(q);
      CHECK(testing::to_oracle(prod) == oracle::mul(p, q));
      if (testing::to_oracle(prod) != oracle::mul(q, p)) ++left_action_disagreements;
    }
  }
  // S3 is non-abelian, so the two conventions really differ.
  CHECK(left_action_disagreements > 0);
}

TEST_CASE("a*b for the first example has order 7") {
  const auto a = P(testing::kA14, 14);
  const auto b = P("(1,2,3,11,12,6,14)(4,5,13,7,8,9,10)", 14);
  CHECK(order_of(a * b) == 7);
  CHECK(compose(identity(14), b) == b);
  CHECK_THROWS_AS(compose(a, identity(13)), InvariantError);
}

TEST_CASE("inverse, conjugate, power, order") {
  const auto a = P(testing::kA14, 14);
  CHECK(order_of(a) == 7);
  CHECK(conjugate(a, identity(14)) == a);
  CHECK(order_of(P("(1,2)(3,4,5)", 5)) == 6);
  CHECK(power(a, 7) == identity(14));
  CHECK(power(a, -1) == inverse(a));
  CHECK(power(a, 0) == identity(14));
  CHECK(power(a, 15) == a);
  CHECK_THROWS_AS(conjugate(a, identity(5)), InvariantError);

  // Oracle for (1,2)(3,4,5): smallest k with x^k = 1 by repeated multiplication.
  const auto x = P("(1,2)(3,4,5)", 5);
  auto y = x;
  int k = 1;
  while (!y.is_identity()) {
    y = y * x;
    ++k;
  }
  CHECK(k == 6);
}

TEST_CASE("cycle_type and parity") {
  const auto a = P(testing::kA14, 14);
  CHECK(cycle_type(a) == CycleType{{7, 2}});
  CHECK(is_even(identity(4)));
  CHECK_FALSE(is_even(P("(1,2)", 4)));
  // q disjoint p-cycles are even for odd p.
  for (auto [p, q] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{7, 3}}) {
    std::vector<std::vector<Point>> cyc;
    for (int j = 0; j < q; ++j) {
      std::vector<Point> c;
      for (int b = 1; b <= p; ++b) c.push_back(static_cast<Point>(j * p + b));
      cyc.push_back(c);
    }
    const auto x = Permutation::from_cycles(static_cast<std::size_t>(p * q), cyc);
    CHECK(cycle_type(x) == CycleType{{static_cast<std::size_t>(p), static_cast<std::size_t>(q)}});
    CHECK(is_even(x));
  }
}

TEST_CASE("property: round trip, associativity, inverses, conjugation invariance") {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 14;
    const auto p = testing::from_oracle(oracle::random_perm(n, rng));
    const auto q = testing::from_oracle(oracle::random_perm(n, rng));
    const auto r = testing::from_oracle(oracle::random_perm(n, rng));
    CHECK(parse_cycles(format_cycles(p), n) == p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * inverse(p) == identity(n));
    CHECK(inverse(p) * p == identity(n));
    CHECK(cycle_type(conjugate(p, q)) == cycle_type(p));
    CHECK(conjugate(p, q) == inverse(q) * p * q);

    BigInt k = 1;
    auto y = p;
    while (!y.is_identity()) {
      y = y * p;
      ++k;
    }
    CHECK(order_of(p) == k);
    CHECK(power(p, static_cast<std::int64_t>(k)) == identity(n));
  }
}
