#pragma once

// End-to-end verification of one tower: validation, relabeling,
// containments, decomposition, classification, genera and expectations.

#include <optional>
#include <string>

#include "towerkit/classify.hpp"
#include "towerkit/towerfile.hpp"

namespace towerkit {

struct VerifyOptions {
  std::uint64_t complement_budget = 100'000;
};

struct VerifyReport {
  std::string title;
  CheckList checks;
  std::optional<BigInt> order;
  std::optional<ClassificationReport> classification;
  std::optional<Permutation> sigma, tau, relabeling;
  bool relabeled = false;

  bool passed() const { return all_passed(checks); }
  // One key=value pair per line, deterministic for a given input.
  std::string machine() const;
  std::string human() const;
};

VerifyReport verify_tower(const TowerFile& file, const VerifyOptions& options = {});

// Same pipeline for a tower built in memory.
VerifyReport verify_tower(const TowerData& data, const std::optional<std::vector<Permutation>>& U,
                          const Expectations& expect, std::string title,
                          const VerifyOptions& options = {});

}  // namespace towerkit
