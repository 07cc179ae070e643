#include "towerkit/schreier_sims.hpp"

#include <algorithm>
#include <limits>

namespace towerkit {

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Point> base_prefix)
    : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw InvariantError("base point out of range");
    add_level(b);
  }
}

void StabilizerChain::add_level(Point base) {
  Level level;
  level.base = base;
  level.orbit = {base};
  level.index.assign(degree_, -1);
  level.index[base] = 0;
  level.transversal.emplace_back(degree_);
  level.inv_transversal.emplace_back(degree_);
  level.verified.push_back(0);
  levels_.push_back(std::move(level));
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    const std::int32_t j = l.index[g[l.base]];
    if (j < 0) return {std::move(g), i};
    g = g * l.inv_transversal[static_cast<std::size_t>(j)];
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw InvariantError("contains: degree mismatch");
  auto r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

BigInt StabilizerChain::order() const { return order_from(0); }

BigInt StabilizerChain::order_from(std::size_t depth) const {
  BigInt n = 1;
  for (std::size_t i = depth; i < levels_.size(); ++i) n *= levels_[i].orbit.size();
  return n;
}

std::uint64_t StabilizerChain::rank_of(const Permutation& g) const {
  std::uint64_t rank = 0;
  std::uint64_t radix = 1;
  Permutation h = g;
  for (const Level& l : levels_) {
    const std::int32_t j = l.index[h[l.base]];
    if (j < 0) throw InvariantError("rank_of: element not in group");
    rank += radix * static_cast<std::uint64_t>(j);
    radix *= l.orbit.size();
    h = h * l.inv_transversal[static_cast<std::size_t>(j)];
  }
  if (!h.is_identity()) throw InvariantError("rank_of: element not in group");
  return rank;
}

Permutation StabilizerChain::unrank(std::uint64_t rank) const {
  // g = u_k ... u_2 u_1 where u_i is chosen at level i.
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto size = levels_[i].orbit.size();
    digits[i] = static_cast<std::size_t>(rank % size);
    rank /= size;
  }
  Permutation g(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) g = g * levels_[i].transversal[digits[i]];
  return g;
}

void StabilizerChain::grow_orbit(Level& level, std::size_t first_new_gen) {
  // Old orbit points only need the new generators; new points need all of them.
  const std::size_t old_size = level.orbit.size();
  for (std::size_t j = 0; j < level.orbit.size(); ++j) {
    const std::size_t from_gen = j < old_size ? first_new_gen : 0;
    for (std::size_t s = from_gen; s < level.strong.size(); ++s) {
      const Permutation& x = level.strong[s];
      const Point img = x[level.orbit[j]];
      if (level.index[img] >= 0) continue;
      level.index[img] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(img);
      Permutation u = level.transversal[j] * x;
      level.inv_transversal.push_back(inverse(u));
      level.transversal.push_back(std::move(u));
      level.verified.push_back(0);
    }
  }
}

void StabilizerChain::add_strong(std::size_t i, const Permutation& h) {
  Level& level = levels_[i];
  level.strong.push_back(h);
  grow_orbit(level, level.strong.size() - 1);
}

void StabilizerChain::extend(const Permutation& g) {
  if (g.degree() != degree_) throw InvariantError("extend: degree mismatch");
  auto [h, stop] = sift(g);
  if (stop == levels_.size() && h.is_identity()) return;
  if (stop == levels_.size()) add_level(h.first_moved());
  for (std::size_t l = 0; l <= stop; ++l) add_strong(l, h);
  run_from(stop);
}

void StabilizerChain::run_from(std::size_t start) {
  std::size_t i = start;
  while (true) {
    bool restarted = false;
    Level* level = &levels_[i];
    for (std::size_t j = 0; j < level->orbit.size() && !restarted; ++j) {
      while (level->verified[j] < level->strong.size()) {
        const Permutation& x = level->strong[level->verified[j]];
        const Permutation ux = level->transversal[j] * x;
        const std::int32_t k = level->index[ux[level->base]];
        const Permutation& target = level->transversal[static_cast<std::size_t>(k)];
        if (ux == target) {
          ++level->verified[j];
          continue;
        }
        auto [h, stop] = sift(ux * level->inv_transversal[static_cast<std::size_t>(k)], i + 1);
        if (stop == levels_.size() && h.is_identity()) {
          ++level->verified[j];
          continue;
        }
        if (stop == levels_.size()) add_level(h.first_moved());
        for (std::size_t l = i + 1; l <= stop; ++l) add_strong(l, h);
        i = stop;
        restarted = true;
        break;
      }
    }
    if (restarted) continue;
    if (i == 0) break;
    --i;
  }
}

}  // namespace towerkit
