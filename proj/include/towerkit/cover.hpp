#pragma once

// Branched covers seen through their monodromy: Riemann-Hurwitz arithmetic,
// generating vectors, and the validated tower Z -> Y -> X -> P^1.

#include <cstdint>
#include <vector>

#include "towerkit/group.hpp"

namespace towerkit {

// Signature (gamma; m_1, ..., m_r).
struct BranchingData {
  std::uint64_t gamma = 0;
  std::vector<std::uint64_t> periods;
};

// Genus g with 2(g - 1)/|G| = 2(gamma - 1) + sum(1 - 1/m_j), in exact
// arithmetic. Throws InvariantError when g is not a non-negative integer.
BigInt rh_genus(const BigInt& group_order, const BranchingData& data);

// Hyperbolic pairs a_1, b_1, ..., a_gamma, b_gamma followed by the elliptic
// elements c_1, ..., c_r.
struct GeneratingVector {
  std::vector<Permutation> hyperbolic;
  std::vector<Permutation> elliptic;

  std::vector<Permutation> elements() const;
};

// Generation, the long relation prod [a_i, b_i] prod c_j = 1, and |c_j| = m_j.
CheckList validate_vector(const PermutationGroup& g, const GeneratingVector& v,
                          const BranchingData& type);

// Raw tower data before validation. G is the group the user claims; the
// tower itself works with the group generated by the vector.
struct TowerData {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  PermutationGroup G = PermutationGroup::trivial(1);
  PermutationGroup H = PermutationGroup::trivial(1);
  PermutationGroup N = PermutationGroup::trivial(1);
  GeneratingVector vector;
};

struct TowerEvidence {
  BigInt order_G;
  BigInt order_H;
  BigInt order_N;
  BigInt core_N_order;
  bool given_labeling_transitive = false;
  // Images of the elliptic elements acting on the right cosets of N.
  std::vector<Permutation> monodromy;
};

// A tower that passed every structural check. The constructor re-runs the
// checks and throws InvariantError naming the first failure.
class CoverTower {
 public:
  explicit CoverTower(TowerData data);

  // Every check the constructor performs, without throwing.
  static CheckList assess(const TowerData& data, TowerEvidence* evidence = nullptr);

  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }
  std::size_t degree() const { return G_.degree(); }
  // Generated by the vector elements, in vector order.
  const PermutationGroup& G() const { return G_; }
  const PermutationGroup& H() const { return H_; }
  const PermutationGroup& N() const { return N_; }
  const GeneratingVector& vector() const { return vector_; }
  BranchingData signature() const;
  const TowerEvidence& evidence() const { return evidence_; }

 private:
  std::uint64_t p_, q_;
  PermutationGroup G_, H_, N_;
  GeneratingVector vector_;
  TowerEvidence evidence_;
};

struct Genera {
  BigInt gX, gY, gZ;
};
Genera tower_genera(const CoverTower& t);

// K meets no cyclic group <c_j>.
bool check_etale_condition(const CoverTower& t, const PermutationGroup& K);

}  // namespace towerkit
