#pragma once

// Tower files shipped with the library (the contents of fixtures/).

#include <string_view>
#include <vector>

namespace towerkit {

struct Fixture {
  std::string_view name;  // file name without extension
  std::string_view text;
};

// Sorted by name.
const std::vector<Fixture>& fixtures();

}  // namespace towerkit
