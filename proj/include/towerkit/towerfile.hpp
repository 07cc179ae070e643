#pragma once

// Text format for towers.
//
//   # comment
//   title  = free text
//   p      = 7
//   q      = 2
//   degree = 14
//   a      = (1,2,3,4,5,6,7)(8,9,10,11,12,13,14)      named permutation
//   G      = a, b                                     names or inline cycles
//   H      = [ (3,10)(5,12) ; (1,8)(3,10) ]           bracketed, ';'-separated
//   N      = [ ... ]
//   U      = [ a ; u ]                                optional complement
//   vector = [ c1 ; c2 ; c3 ]                         optional; default is
//                                                     G's generators followed
//                                                     by the inverse of their product
//   expect.order / expect.s / expect.U / expect.gX / expect.gY / expect.gZ /
//   expect.label / expect.galois                      optional golden values
//
// Names are identifiers other than the reserved keys and may be used before
// they are defined. Errors are reported as ParseError("line N: ...").

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "towerkit/cover.hpp"

namespace towerkit {

// A permutation as written: either a name or inline cycle notation.
struct PermRef {
  std::string text;
  Permutation value;
  friend bool operator==(const PermRef&, const PermRef&) = default;
};

struct Expectations {
  std::optional<BigInt> order;
  std::optional<unsigned> s;
  std::optional<std::string> U;
  std::optional<BigInt> gX, gY, gZ;
  std::optional<std::string> label;
  std::optional<bool> galois;
  friend bool operator==(const Expectations&, const Expectations&) = default;
};

struct TowerFile {
  std::string title;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t degree = 0;
  std::vector<std::pair<std::string, Permutation>> named;
  std::vector<PermRef> G, H, N;
  std::optional<std::vector<PermRef>> U;
  std::optional<std::vector<PermRef>> vector;
  Expectations expect;
  friend bool operator==(const TowerFile&, const TowerFile&) = default;
};

TowerFile parse_tower_file(std::string_view text);
std::string serialize_tower_file(const TowerFile& f);

std::vector<Permutation> values(const std::vector<PermRef>& refs);
TowerData to_tower_data(const TowerFile& f);

}  // namespace towerkit
