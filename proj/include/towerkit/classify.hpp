#pragma once

// Identification of U among the simple transitive groups of prime degree,
// the solvable and Galois cases, and the final case label.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "towerkit/structure.hpp"

namespace towerkit {

enum class SimpleTag { cyclic, alternating, psl2_11, m11, m23, psl };

struct SimpleGroupId {
  SimpleTag tag = SimpleTag::cyclic;
  std::uint64_t degree = 0;
  BigInt order;
  // PSL(n, fq) parameters; zero for other tags.
  unsigned n = 0;
  std::uint64_t fq = 0;

  // "Z7", "A7", "PSL(2,11)", "M11", "M23", "PSL(3,2)".
  std::string name() const;
  friend bool operator==(const SimpleGroupId& a, const SimpleGroupId& b) {
    return a.tag == b.tag && a.degree == b.degree && a.order == b.order && a.n == b.n && a.fq == b.fq;
  }
};

SimpleGroupId cyclic_id(std::uint64_t p);
SimpleGroupId alternating_id(std::uint64_t p);
SimpleGroupId psl_id(unsigned n, std::uint64_t fq);
BigInt psl_order(unsigned n, std::uint64_t fq);

// Non-abelian simple transitive groups of degree p, sorted by order.
// PSL(2,4) is reported as A5. Throws InvariantError if two share an order.
std::vector<SimpleGroupId> guralnick_candidates(std::uint64_t p);

// (q, U) for which K = 1 or G = NU is possible, sorted by q then order.
std::vector<std::pair<std::uint64_t, SimpleGroupId>> admissible_pairs(std::uint64_t p);

struct SolvableCase {
  unsigned s = 0;
  bool galois = false;
  // b^-1 a b = a^r for the Galois presentation.
  std::optional<std::uint64_t> r;
  CheckList checks;
};
std::optional<SolvableCase> solvable_case(const CoverTower& relabeled, const StructureWitness& w);

// Throws InvariantError when U matches no candidate or fails simplicity.
SimpleGroupId identify_U(const StructureWitness& w, std::uint64_t p);

// How the "G = NU" condition was decided.
enum class PermuteSource { supplied_U, complement_search, undetermined, not_needed };

struct ClassificationReport {
  bool solvable = false;
  bool galois = false;
  std::optional<std::uint64_t> r;
  unsigned s = 0;
  SimpleGroupId U;
  std::string label;
  std::string h_meets_u;
  std::optional<bool> n_permutes_with_u;
  PermuteSource permute_source = PermuteSource::not_needed;
  Genera genera;
  CheckList checks;
  std::vector<std::string> notes;
};

// `supplied_U` is a subgroup of the relabeled G, if the input named one.
ClassificationReport case_label(const CoverTower& relabeled, const StructureWitness& w,
                                const SimpleGroupId& uid,
                                const std::optional<PermutationGroup>& supplied_U = std::nullopt,
                                std::uint64_t complement_budget = 100'000);

std::string_view permute_source_name(PermuteSource s);

}  // namespace towerkit
