#pragma once

// Permutations of {1..n}.
//
// Points are 1-based in every textual form and 0-based in memory. Products
// use the right action: x^(p*q) = (x^p)^q, so `p * q` applies p first.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "towerkit/common.hpp"
#include "towerkit/kernels.hpp"

namespace towerkit {

using Point = kernels::Point;

class Permutation {
 public:
  Permutation() = default;
  // Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  // 0-based image list; throws InvariantError unless it is a bijection.
  static Permutation from_images(std::vector<Point> images);
  static Permutation from_images_1based(std::span<const Point> images);
  // Cycles given as 1-based point lists.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  // Image of the 0-based point x.
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  // Smallest 0-based point moved, or degree() if none.
  Point first_moved() const;
  std::size_t support_size() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation& a, const Permutation& b);
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<Point> images, int) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

// Multiset of cycle lengths, fixed points counted as length 1.
using CycleType = std::map<std::size_t, std::size_t>;

Permutation identity(std::size_t degree);
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// g^-1 p g
Permutation conjugate(const Permutation& p, const Permutation& g);
Permutation power(const Permutation& p, std::int64_t k);
// x^-1 y^-1 x y
Permutation commutator(const Permutation& x, const Permutation& y);
BigInt order_of(const Permutation& p);

// Disjoint cycles of length >= 2, each starting at its smallest point; 1-based.
std::vector<std::vector<Point>> cycles(const Permutation& p);
CycleType cycle_type(const Permutation& p);
bool is_even(const Permutation& p);
std::string format_cycle_type(const CycleType& ct);

// Grammar:  perm := cycle+ | "()" ;  cycle := "(" int ("," int)+ ")"
// Whitespace is ignored. Throws ParseError.
Permutation parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(const Permutation& p);

}  // namespace towerkit

template <>
struct std::hash<towerkit::Permutation> {
  std::size_t operator()(const towerkit::Permutation& p) const noexcept;
};
