#include <set>

#include "doctest.h"
#include "towers.hpp"
#include "towerkit/classify.hpp"

using namespace towerkit;

namespace {

std::set<std::pair<std::string, std::string>> names_orders(const std::vector<SimpleGroupId>& ids) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& id : ids) out.emplace(id.name(), to_string(id.order));
  return out;
}

std::set<std::pair<std::uint64_t, std::string>> pairs(std::uint64_t p) {
  std::set<std::pair<std::uint64_t, std::string>> out;
  for (const auto& [q, id] : admissible_pairs(p)) out.emplace(q, id.name());
  return out;
}

BigInt half_factorial(std::uint64_t p) {
  BigInt f = 1;
  for (std::uint64_t i = 3; i <= p; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("PSL orders") {
  CHECK(psl_order(3, 2) == 168);
  CHECK(psl_order(2, 11) == 660);
  CHECK(psl_order(3, 3) == 5616);
  CHECK(psl_order(5, 2) == 9999360);
  CHECK(psl_order(3, 5) == 372000);
  CHECK(psl_order(2, 4) == 60);
}

TEST_CASE("guralnick_candidates") {
  using Set = std::set<std::pair<std::string, std::string>>;
  CHECK(names_orders(guralnick_candidates(7)) == Set{{"PSL(3,2)", "168"}, {"A7", "2520"}});
  CHECK(guralnick_candidates(3).empty());
  CHECK(names_orders(guralnick_candidates(5)) == Set{{"A5", "60"}});
  CHECK(names_orders(guralnick_candidates(11)) ==
        Set{{"PSL(2,11)", "660"}, {"M11", "7920"}, {"A11", "19958400"}});
  const auto c23 = names_orders(guralnick_candidates(23));
  CHECK(c23.count({"M23", "10200960"}) == 1);
  CHECK(c23.count({"A23", to_string(half_factorial(23))}) == 1);
  const auto c31 = guralnick_candidates(31);
  const auto n31 = names_orders(c31);
  CHECK(n31.count({"PSL(5,2)", "9999360"}) == 1);
  CHECK(n31.count({"PSL(3,5)", "372000"}) == 1);
  CHECK(names_orders(guralnick_candidates(13)).count({"PSL(3,3)", "5616"}) == 1);
  CHECK(names_orders(guralnick_candidates(17)).count({"PSL(2,16)", "4080"}) == 1);

  const auto c7 = guralnick_candidates(7);
  CHECK(c7.front().order < c7.back().order);

  CHECK_THROWS_AS(guralnick_candidates(9), InvariantError);
  CHECK_THROWS_AS(guralnick_candidates(2), InvariantError);
}

TEST_CASE("property: candidate orders divide p!/2 and are divisible by p") {
  for (std::uint64_t p = 3; p <= 100; p += 2) {
    if (!is_prime(p)) continue;
    const auto half = half_factorial(p);
    for (const auto& c : guralnick_candidates(p)) {
      CAPTURE(c.name());
      CHECK(half % c.order == 0);
      CHECK(c.order % p == 0);
      CHECK(c.degree == p);
    }
    // Every admissible U is a candidate for the same p.
    const auto cands = guralnick_candidates(p);
    for (const auto& [q, id] : admissible_pairs(p)) {
      CHECK(is_prime(q));
      CHECK(std::find(cands.begin(), cands.end(), id) != cands.end());
    }
  }
}

TEST_CASE("admissible_pairs") {
  using Set = std::set<std::pair<std::uint64_t, std::string>>;
  CHECK(pairs(5) == Set{{3, "A5"}});
  CHECK(pairs(7) == Set{{2, "PSL(3,2)"}});
  CHECK(pairs(11) == Set{{2, "M11"}});
  CHECK(pairs(13) == Set{{2, "PSL(3,3)"}});
  CHECK(pairs(3).empty());
  // PSL(5,2) needs fq > 2 or p = 7; PSL(3,5) admits the prime divisors of 4.
  CHECK(pairs(31) == Set{{2, "PSL(3,5)"}});
}

TEST_CASE("identify_U on every fixture") {
  const std::vector<std::pair<const char*, std::string>> want{
      {"tower14_1", "Z7"},       {"tower14_2", "Z7"},       {"tower14_3", "A7"},       {"tower14_4", "PSL(3,2)"},
      {"tower14_5", "PSL(3,2)"}, {"tower14_6", "PSL(3,2)"}, {"tower14_7", "PSL(3,2)"}, {"galois21", "Z3"}};
  for (const auto& [name, u] : want) {
    CAPTURE(name);
    const auto r = testing::fixture_relabeled(name);
    const auto w = decompose(r);
    CHECK(identify_U(w, r.tower.p()).name() == u);
  }
}

TEST_CASE("solvable_case") {
  auto run = [](const char* name) {
    const auto r = testing::fixture_relabeled(name);
    return solvable_case(r.tower, decompose(r));
  };
  const auto s1 = run("tower14_1");
  REQUIRE(s1.has_value());
  CHECK(s1->s == 3);
  CHECK_FALSE(s1->galois);
  CHECK(all_passed(s1->checks));

  const auto s2 = run("tower14_2");
  REQUIRE(s2.has_value());
  CHECK(s2->s == 6);
  CHECK_FALSE(s2->galois);

  CHECK_FALSE(run("tower14_3").has_value());
  CHECK_FALSE(run("tower14_7").has_value());

  const auto g = run("galois21");
  REQUIRE(g.has_value());
  CHECK(g->galois);
  CHECK(g->s == 1);
  REQUIRE(g->r.has_value());
  CHECK((*g->r == 2 || *g->r == 4));
  CHECK((*g->r * *g->r * *g->r) % 7 == 1);
  CHECK(all_passed(g->checks));
}

TEST_CASE("case labels") {
  const std::vector<std::pair<const char*, std::string>> want{
      {"tower14_1", "i-general"}, {"tower14_2", "i-general"}, {"tower14_3", "ii-a"}, {"tower14_4", "ii-h"},
      {"tower14_5", "ii-e"},      {"tower14_6", "ii-e"},      {"tower14_7", "ii-h"}, {"galois21", "i-galois"}};
  for (const auto& [name, label] : want) {
    CAPTURE(name);
    const auto f = testing::fixture_file(name);
    const auto t = CoverTower(to_tower_data(f));
    const auto r = relabel_to_blocks(t, find_sigma_tau(t));
    const auto w = decompose(r);
    std::optional<PermutationGroup> U;
    if (f.U) {
      std::vector<Permutation> moved;
      for (const auto& x : values(*f.U)) moved.push_back(r.image(x));
      U.emplace(r.tower.degree(), moved);
    }
    const auto rep = case_label(r.tower, w, identify_U(w, r.tower.p()), U);
    CHECK(rep.label == label);
    CHECK(all_passed(rep.checks));
    CHECK(rep.solvable == (label[0] == 'i' && label[1] == '-'));
  }
}

TEST_CASE("without a supplied U the complement search decides G = NU") {
  // Some complement of K permutes with N even where the named one does not.
  const auto t = testing::fixture_tower("tower14_5");
  const auto r = relabel_to_blocks(t, find_sigma_tau(t));
  const auto w = decompose(r);
  const auto rep = case_label(r.tower, w, identify_U(w, 7));
  CHECK(rep.permute_source == PermuteSource::complement_search);
  CHECK(rep.n_permutes_with_u == true);
  CHECK(rep.label == "ii-h");

  const auto undecided = case_label(r.tower, w, identify_U(w, 7), std::nullopt, 1);
  CHECK(undecided.permute_source == PermuteSource::undetermined);
  CHECK(undecided.label == "ii-e");
}

TEST_CASE("H meets U in a subgroup of index p") {
  const auto r = testing::fixture_relabeled("tower14_3");
  const auto w = decompose(r);
  const auto rep = case_label(r.tower, w, identify_U(w, 7));
  CHECK(rep.h_meets_u == "A6");
  CHECK(r.tower.H().order() / w.K.order() == 360);
}
