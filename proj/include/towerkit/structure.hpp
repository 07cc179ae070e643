#pragma once

// Block structure of a tower: the transversal elements sigma and tau, the
// relabeling that puts the blocks in standard position, the groups
// R, J and T = J x| A_p, and the decomposition G = K x| U.

#include <functional>
#include <optional>
#include <vector>

#include "towerkit/cover.hpp"

namespace towerkit {

// Blocks {b, p+b, ..., (q-1)p+b} for b = 1..p, 1-based.
struct BlockSystem {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::vector<std::vector<Point>> blocks;

  static BlockSystem standard(std::uint64_t p, std::uint64_t q);
  // 1-based block index of a 0-based point.
  std::size_t block_of(Point x) const { return x % p + 1; }
};

struct SigmaTau {
  Permutation sigma;  // order p, G = H<sigma>
  Permutation tau;    // in H \ N, H = N<tau>
};
SigmaTau find_sigma_tau(const CoverTower& t);

struct Relabeled {
  // The tower acting on the right cosets of N, coset N tau^(a-1) sigma^(b-1)
  // numbered (a-1)p + b.
  CoverTower tower;
  Permutation sigma;
  Permutation tau;
  // Point map from the given labeling, when the given action is equivalent
  // to the coset action (N is then a point stabilizer). Conjugating the
  // given generators by it yields the relabeled ones.
  std::optional<Permutation> relabeling;
  // Carries an element of the given G to the relabeled coordinates.
  std::function<Permutation(const Permutation&)> image;
};
Relabeled relabel_to_blocks(const CoverTower& t, const SigmaTau& st);

struct EpsilonData {
  std::vector<Permutation> epsilon_b;  // epsilon_b = (b, p+b, ..., (q-1)p+b)
  Permutation epsilon;                 // epsilon_1 ... epsilon_p
  PermutationGroup R = PermutationGroup::trivial(1);
  PermutationGroup J = PermutationGroup::trivial(1);
};
EpsilonData build_epsilon(std::uint64_t p, std::uint64_t q);

// Diagonal lift of a permutation of the p blocks: jp + b -> jp + pi(b).
Permutation diagonal_lift(const Permutation& pi, std::uint64_t q);

// J extended by the diagonal copy of A_p.
PermutationGroup build_T(std::uint64_t p, std::uint64_t q);

// Parity, commutation with epsilon, G <= T, K <= J and K = G n J.
// G is the relabeled group and K its core of H.
CheckList verify_containments(const PermutationGroup& G, const EpsilonData& eps,
                              const PermutationGroup& T, const PermutationGroup& K);

struct StructureWitness {
  PermutationGroup K = PermutationGroup::trivial(1);
  unsigned s = 0;
  Permutation sigma;
  Permutation tau;
  EpsilonData eps;
  PermutationGroup T = PermutationGroup::trivial(1);
  // Block action of each vector element, as permutations of degree p.
  std::vector<Permutation> pi_images;
  PermutationGroup U_image = PermutationGroup::trivial(1);
  // Diagonal lift of U_image; lies in <J, G> and meets J trivially.
  PermutationGroup U_lift = PermutationGroup::trivial(1);
  CheckList checks;
};

// Runs every structural check on a relabeled tower. Failed checks are
// recorded in the witness rather than thrown.
StructureWitness decompose(const Relabeled& r);

// Internal complements of K in G, found by trying every lift k_i g_i of the
// generators. nullopt if |K|^(#generators) exceeds `budget`.
std::optional<std::vector<PermutationGroup>> complements(const PermutationGroup& G,
                                                         const PermutationGroup& K,
                                                         std::uint64_t budget = 100'000);

}  // namespace towerkit
