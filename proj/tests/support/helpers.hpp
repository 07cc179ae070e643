#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "towerkit/group.hpp"

namespace testing {

inline towerkit::Permutation P(const std::string& cycles, std::size_t degree) {
  return towerkit::parse_cycles(cycles, degree);
}

inline towerkit::Permutation from_oracle(const oracle::Perm& p) {
  std::vector<towerkit::Point> img(p.begin(), p.end());
  return towerkit::Permutation::from_images(std::move(img));
}

inline oracle::Perm to_oracle(const towerkit::Permutation& p) {
  return oracle::Perm(p.images().begin(), p.images().end());
}

inline std::set<oracle::Perm> element_set(const towerkit::PermutationGroup& g) {
  std::set<oracle::Perm> out;
  g.for_each_element([&](const towerkit::Permutation& x) { out.insert(to_oracle(x)); });
  return out;
}

inline towerkit::PermutationGroup group_of(const std::vector<std::string>& cycles, std::size_t degree) {
  std::vector<towerkit::Permutation> gens;
  for (const auto& c : cycles) gens.push_back(P(c, degree));
  return towerkit::PermutationGroup(degree, gens);
}

// The fixed element a shared by every degree-14 example.
inline const char* const kA14 = "(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)";

}  // namespace testing
