#include "doctest.h"
#include "helpers.hpp"
#include "towers.hpp"
#include "towerkit/structure.hpp"

using namespace towerkit;
using testing::P;

TEST_CASE("build_epsilon for p = 3, q = 2") {
  const auto e = build_epsilon(3, 2);
  REQUIRE(e.epsilon_b.size() == 3);
  CHECK(e.epsilon_b[0] == P("(1,4)", 6));
  CHECK(e.epsilon_b[1] == P("(2,5)", 6));
  CHECK(e.epsilon_b[2] == P("(3,6)", 6));
  CHECK(e.epsilon == P("(1,4)(2,5)(3,6)", 6));
  CHECK(e.R.order() == 8);
  CHECK(e.J.order() == 4);
}

TEST_CASE("R and J for p = 7, q = 2") {
  const auto e = build_epsilon(7, 2);
  CHECK(e.R.order() == 128);
  CHECK(testing::element_set(e.R).size() == 128);
  CHECK(e.J.order() == 64);
  for (const auto& g : e.J.generators()) CHECK(is_even(g));
  CHECK(e.epsilon_b[2] == P("(3,10)", 14));
}

TEST_CASE("order of T is q^(p-1) p!/2") {
  struct Case {
    std::uint64_t p, q, order;
  };
  for (auto c : {Case{3, 2, 12}, Case{5, 2, 960}, Case{5, 3, 4860}, Case{7, 2, 161280}, Case{7, 3, 1837080}}) {
    CAPTURE(c.p);
    CAPTURE(c.q);
    CHECK(build_T(c.p, c.q).order() == c.order);
  }
  // Brute force at the smallest size.
  const auto t = build_T(3, 2);
  std::vector<oracle::Perm> gens;
  for (const auto& g : t.generators()) gens.push_back(testing::to_oracle(g));
  CHECK(oracle::closure(gens, 6)->size() == 12);

  const auto t7 = build_T(7, 2);
  for (const auto& g : t7.generators()) CHECK(is_even(g));
}

TEST_CASE("diagonal lift acts the same way on every layer") {
  const auto pi = P("(1,2,3)", 5);
  const auto lift = diagonal_lift(pi, 3);
  CHECK(lift == P("(1,2,3)(6,7,8)(11,12,13)", 15));
}

TEST_CASE("find_sigma_tau") {
  const auto t1 = testing::fixture_tower("tower14_1");
  const auto st1 = find_sigma_tau(t1);
  CHECK(st1.sigma == P(testing::kA14, 14));
  CHECK(t1.H().contains(st1.tau));
  CHECK_FALSE(t1.N().contains(st1.tau));

  const auto t7 = testing::fixture_tower("tower14_7");
  const auto st7 = find_sigma_tau(t7);
  CHECK(order_of(st7.sigma) == 7);
  CHECK(t7.N().contains(st7.tau * st7.tau));
  CHECK_FALSE(t7.N().contains(st7.tau));
}

TEST_CASE("relabeling puts every fixture in standard block position") {
  const auto standard_sigma = P(testing::kA14, 14);
  const std::vector<Point> delta1{1, 8};
  for (const char* name : testing::kDegree14Fixtures) {
    CAPTURE(name);
    const auto t = testing::fixture_tower(name);
    const auto r = relabel_to_blocks(t, find_sigma_tau(t));
    CHECK(r.sigma == standard_sigma);
    CHECK(r.tower.G().order() == t.G().order());
    CHECK(r.tower.H().order() == t.H().order());
    CHECK(r.tower.N().order() == t.N().order());
    // N is the stabilizer of point 1 after relabeling.
    CHECK(same_group(stabilizer(r.tower.G(), 1).group, r.tower.N()));
    CHECK(same_group(block_stabilizer(r.tower.G(), delta1).group, r.tower.H()));
    if (r.relabeling) {
      for (const auto& c : t.vector().elliptic) CHECK(r.tower.G().contains(conjugate(c, *r.relabeling)));
    }
  }
}

TEST_CASE("relabeling of a tower already in standard position is the identity") {
  const auto t = testing::fixture_tower("tower14_5");
  const auto r = relabel_to_blocks(t, find_sigma_tau(t));
  REQUIRE(r.relabeling.has_value());
  CHECK(r.relabeling->is_identity());
  CHECK(r.tower.vector().elliptic == t.vector().elliptic);
}

TEST_CASE("no point relabeling when N is not a point stabilizer") {
  const auto t = testing::fixture_tower("tower14_4");
  CHECK_FALSE(relabel_to_blocks(t, find_sigma_tau(t)).relabeling.has_value());
}

TEST_CASE("decompose verifies every structural claim on every fixture") {
  struct Want {
    const char* name;
    std::uint64_t k, u;
    unsigned s;
  };
  for (auto w : {Want{"tower14_1", 8, 7, 3}, Want{"tower14_2", 64, 7, 6}, Want{"tower14_3", 64, 2520, 6},
                 Want{"tower14_4", 8, 168, 3}, Want{"tower14_5", 8, 168, 3}, Want{"tower14_6", 64, 168, 6},
                 Want{"tower14_7", 1, 168, 0}}) {
    CAPTURE(w.name);
    const auto r = testing::fixture_relabeled(w.name);
    const auto s = decompose(r);
    for (const auto& c : s.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
    CHECK(s.K.order() == w.k);
    CHECK(s.U_image.order() == w.u);
    CHECK(s.s == w.s);
    CHECK(s.U_image.degree() == 7);
    CHECK(s.pi_images.size() == 3);
  }
}

TEST_CASE("the block image of the A7 tower is simple") {
  const auto s = decompose(testing::fixture_relabeled("tower14_3"));
  CHECK(is_simple(s.U_image));
  const auto s4 = decompose(testing::fixture_relabeled("tower14_4"));
  CHECK(is_simple(s4.U_image));
}

TEST_CASE("K = G n J agrees with enumeration of J") {
  const auto r = testing::fixture_relabeled("tower14_4");
  const auto& G = r.tower.G();
  const auto J = build_epsilon(7, 2).J;
  std::size_t count = 0;
  J.for_each_element([&](const Permutation& x) { count += G.contains(x) ? 1 : 0; });
  CHECK(count == 8);
  CHECK(intersect(G, J).order() == 8);
  CHECK(core(G, r.tower.H()).order() == 8);
}

TEST_CASE("verify_containments flags an odd generator first") {
  const auto r = testing::fixture_relabeled("tower14_1");
  const auto eps = build_epsilon(7, 2);
  const auto T = build_T(7, 2);
  const auto K = core(r.tower.G(), r.tower.H()).group;
  CHECK(all_passed(verify_containments(r.tower.G(), eps, T, K)));

  auto gens = r.tower.G().generators();
  gens.back() = P("(1,8)", 14);
  const auto checks = verify_containments(PermutationGroup(14, gens), eps, T, K);
  REQUIRE_FALSE(checks.empty());
  CHECK(checks.front().name == "relabeled.G_even");
  CHECK_FALSE(checks.front().passed);
}

TEST_CASE("complements of K") {
  const auto t = testing::fixture_tower("tower14_4");
  const auto K = core(t.G(), t.H()).group;
  const auto comps = complements(t.G(), K);
  REQUIRE(comps.has_value());
  CHECK(comps->size() == 16);
  for (const auto& u : *comps) {
    CHECK(u.order() == 168);
    CHECK(intersect(u, K).is_trivial());
  }
  CHECK_FALSE(complements(t.G(), K, 10).has_value());
  CHECK(complements(t.G(), PermutationGroup::trivial(14))->size() == 1);
}
