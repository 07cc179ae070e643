#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "towerkit/permutation.hpp"

namespace towerkit {

// Base and strong generating set built by deterministic incremental
// Schreier-Sims. New base points are the smallest point moved by the element
// that forced them; an optional prefix pins the first base points.
class StabilizerChain {
 public:
  struct Level {
    Point base;
    std::vector<Permutation> strong;   // generators of G^(i) (fix earlier base points)
    std::vector<Point> orbit;          // orbit of `base`, discovery order
    std::vector<std::int32_t> index;   // point -> position in orbit, -1 if absent
    std::vector<Permutation> transversal;      // u maps base to orbit[j]
    std::vector<Permutation> inv_transversal;  // u^-1
    std::vector<std::size_t> verified;         // Schreier pairs checked per orbit point
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where sifting stopped; levels().size() if it went through
  };

  explicit StabilizerChain(std::size_t degree, std::span<const Point> base_prefix = {});

  // Adds a generator and restores the strong generating property.
  void extend(const Permutation& g);

  std::size_t degree() const { return degree_; }
  std::span<const Level> levels() const { return levels_; }
  std::vector<Point> base() const;

  SiftResult sift(Permutation g, std::size_t from_level = 0) const;
  bool contains(const Permutation& g) const;
  BigInt order() const;
  // Order of the stabilizer of the first `depth` base points.
  BigInt order_from(std::size_t depth) const;

  // Mixed-radix rank in [0, order) and its inverse. Only valid when order()
  // fits in 64 bits.
  std::uint64_t rank_of(const Permutation& g) const;
  Permutation unrank(std::uint64_t rank) const;

 private:
  void add_level(Point base);
  void add_strong(std::size_t level, const Permutation& h);
  void grow_orbit(Level& level, std::size_t first_new_gen);
  void run_from(std::size_t level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace towerkit
