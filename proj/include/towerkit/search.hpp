#pragma once

// Enumeration of towers with a fixed first generator a: every b in T with
// the right cycle type and |ab| = p, every index-q subgroup N of the block
// stabilizer H with trivial core, each run through the full pipeline.

#include <vector>

#include "towerkit/pipeline.hpp"

namespace towerkit {

struct SearchOptions {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  Permutation a;
  std::uint64_t budget = 1'000'000;
  unsigned threads = 1;
  VerifyOptions verify;
};

struct SearchHit {
  Permutation b;
  std::uint64_t b_rank = 0;
  PermutationGroup H = PermutationGroup::trivial(1);
  PermutationGroup N = PermutationGroup::trivial(1);
  VerifyReport report;

  TowerFile to_file(const Permutation& a, std::uint64_t p, std::uint64_t q) const;
};

struct SearchResult {
  std::uint64_t scanned = 0;       // elements of T visited
  std::uint64_t b_candidates = 0;  // those with the right cycle type and |ab| = p
  std::uint64_t distinct_groups = 0;
  std::vector<SearchHit> hits;     // sorted by (|G|, s, U, label, b rank)
};

// Throws InvariantError when a has the wrong cycle type or lies outside T,
// BudgetError when |T| exceeds the budget.
SearchResult search_towers(const SearchOptions& options);

}  // namespace towerkit
