#pragma once

// Finite permutation groups given by generators.
//
// A PermutationGroup owns an immutable stabilizer chain built eagerly at
// construction, so copies are cheap and objects can be shared across
// threads. Algorithms that fall back to element enumeration refuse to run
// past `Limits::enumeration`.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "towerkit/permutation.hpp"
#include "towerkit/schreier_sims.hpp"

namespace towerkit {

struct Limits {
  std::uint64_t enumeration = 1'000'000;
  std::uint64_t simplicity = 100'000'000;
  std::uint64_t coset_index = 1'000'000;
};

class PermutationGroup {
 public:
  // Generators must share `degree`; an empty list gives the trivial group.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::span<const Point> base_prefix = {});

  static PermutationGroup trivial(std::size_t degree) { return {degree, {}}; }

  std::size_t degree() const { return chain_->degree(); }
  const std::vector<Permutation>& generators() const { return *generators_; }
  const StabilizerChain& chain() const { return *chain_; }

  BigInt order() const { return chain_->order(); }
  bool is_trivial() const { return chain_->levels().empty(); }
  bool contains(const Permutation& g) const { return chain_->contains(g); }
  bool contains(const PermutationGroup& sub) const;

  // Every element exactly once, in rank order. Throws BudgetError above `limit`.
  void for_each_element(const std::function<void(const Permutation&)>& fn,
                        std::uint64_t limit = Limits{}.enumeration) const;
  std::vector<Permutation> elements(std::uint64_t limit = Limits{}.enumeration) const;

  // Pointwise stabilizer of the first `depth` base points.
  PermutationGroup stabilizer_at_depth(std::size_t depth) const;

 private:
  std::shared_ptr<const StabilizerChain> chain_;
  std::shared_ptr<const std::vector<Permutation>> generators_;
};

// A group together with the ambient group it was taken from.
struct Subgroup {
  PermutationGroup group;
  PermutationGroup parent;

  // Throws InvariantError unless every generator of `group` lies in `parent`.
  Subgroup(PermutationGroup group, PermutationGroup parent);

  BigInt index() const { return parent.order() / group.order(); }
  BigInt order() const { return group.order(); }
};

PermutationGroup generate(std::span<const Permutation> gens);
PermutationGroup generate(std::size_t degree, std::span<const Permutation> gens);

bool same_group(const PermutationGroup& a, const PermutationGroup& b);

std::vector<std::vector<Point>> orbits(const PermutationGroup& g);  // 1-based, sorted
std::vector<Point> orbit_of(const PermutationGroup& g, Point point);  // 0-based
bool is_transitive(const PermutationGroup& g);
bool is_abelian(const PermutationGroup& g);

// Pointwise stabilizer of a 1-based point.
Subgroup stabilizer(const PermutationGroup& g, Point point);
// Setwise stabilizer of a set of 1-based points.
Subgroup block_stabilizer(const PermutationGroup& g, std::span<const Point> block,
                          const Limits& limits = {});

// Image of each generator of `g` acting on the right cosets of `h`, cosets
// numbered breadth-first from h*1 (coset 1). Degree is |g : h|.
struct CosetAction {
  PermutationGroup image;
  std::vector<Permutation> generator_images;
  std::vector<Permutation> representatives;  // representatives[i] lies in coset i+1
};
CosetAction coset_action(const PermutationGroup& g, const PermutationGroup& h,
                         const Limits& limits = {});

// Canonical element of the right coset h*x: the unique member whose images of
// h's base points are lexicographically least.
Permutation canonical_coset_rep(const PermutationGroup& h, const Permutation& x);

// Kernel of the homomorphism sending generators()[i] to images[i].
PermutationGroup kernel_of_action(const PermutationGroup& g,
                                  std::span<const Permutation> images);

Subgroup core(const PermutationGroup& g, const PermutationGroup& h,
              const Limits& limits = {});
Subgroup normal_closure(const PermutationGroup& g, std::span<const Permutation> s);
Subgroup derived_subgroup(const PermutationGroup& g);
bool is_normal(const PermutationGroup& g, const PermutationGroup& h);

PermutationGroup intersect(const PermutationGroup& a, const PermutationGroup& b,
                           const Limits& limits = {});
// Chain-based backtrack; used directly above the enumeration threshold.
PermutationGroup intersect_backtrack(const PermutationGroup& a, const PermutationGroup& b);

// s with |g| = q^s if g is elementary abelian of exponent q.
std::optional<unsigned> is_elementary_abelian(const PermutationGroup& g, std::uint64_t q);

bool is_simple(const PermutationGroup& g, const Limits& limits = {});

}  // namespace towerkit
