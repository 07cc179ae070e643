#pragma once

#include <string_view>

#include "towerkit/fixtures.hpp"
#include "towerkit/structure.hpp"
#include "towerkit/towerfile.hpp"

namespace testing {

inline towerkit::TowerFile fixture_file(std::string_view name) {
  for (const auto& f : towerkit::fixtures())
    if (f.name == name) return towerkit::parse_tower_file(f.text);
  throw towerkit::Error("no fixture named " + std::string(name));
}

inline towerkit::CoverTower fixture_tower(std::string_view name) {
  return towerkit::CoverTower(towerkit::to_tower_data(fixture_file(name)));
}

inline towerkit::Relabeled fixture_relabeled(std::string_view name) {
  const auto t = fixture_tower(name);
  return towerkit::relabel_to_blocks(t, towerkit::find_sigma_tau(t));
}

inline const char* const kDegree14Fixtures[] = {"tower14_1", "tower14_2", "tower14_3", "tower14_4",
                                                "tower14_5", "tower14_6", "tower14_7"};

}  // namespace testing
