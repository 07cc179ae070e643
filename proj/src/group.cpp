#include "towerkit/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace towerkit {

namespace {

void require_degree(const PermutationGroup& g, const Permutation& x, const char* what) {
  if (x.degree() != g.degree())
    throw InvariantError(std::string(what) + ": degree mismatch (" + std::to_string(x.degree()) +
                         " vs " + std::to_string(g.degree()) + ")");
}

void require_subgroup(const PermutationGroup& g, const PermutationGroup& h, const char* what) {
  if (h.degree() != g.degree()) throw InvariantError(std::string(what) + ": degree mismatch");
  if (!g.contains(h)) throw InvariantError(std::string(what) + ": subgroup not contained in group");
}

std::uint64_t checked_u64(const BigInt& v, std::uint64_t limit, const char* what) {
  if (v > limit)
    throw BudgetError(std::string(what) + ": " + v.str() + " exceeds limit " + std::to_string(limit));
  return v.convert_to<std::uint64_t>();
}

// Grows a group one generator at a time, skipping elements already inside.
class GroupBuilder {
 public:
  explicit GroupBuilder(std::size_t degree, std::span<const Point> prefix = {})
      : degree_(degree), chain_(degree, prefix) {}

  bool add(const Permutation& x) {
    if (x.is_identity() || chain_.contains(x)) return false;
    chain_.extend(x);
    gens_.push_back(x);
    return true;
  }
  BigInt order() const { return chain_.order(); }
  bool contains(const Permutation& x) const { return chain_.contains(x); }
  const std::vector<Permutation>& generators() const { return gens_; }
  PermutationGroup build() const { return PermutationGroup(degree_, gens_); }

 private:
  std::size_t degree_;
  StabilizerChain chain_;
  std::vector<Permutation> gens_;
};

}  // namespace

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   std::span<const Point> base_prefix) {
  auto chain = std::make_shared<StabilizerChain>(degree, base_prefix);
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw InvariantError("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " + std::to_string(degree));
    chain->extend(g);
  }
  chain_ = std::move(chain);
  generators_ = std::make_shared<const std::vector<Permutation>>(std::move(generators));
}

bool PermutationGroup::contains(const PermutationGroup& sub) const {
  if (sub.degree() != degree()) return false;
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Permutation& x) { return contains(x); });
}

void PermutationGroup::for_each_element(const std::function<void(const Permutation&)>& fn,
                                        std::uint64_t limit) const {
  const std::uint64_t n = checked_u64(order(), limit, "element enumeration");
  for (std::uint64_t r = 0; r < n; ++r) fn(chain_->unrank(r));
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t limit) const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& x) { out.push_back(x); }, limit);
  std::sort(out.begin(), out.end());
  return out;
}

PermutationGroup PermutationGroup::stabilizer_at_depth(std::size_t depth) const {
  const auto levels = chain_->levels();
  if (depth >= levels.size()) return trivial(degree());
  std::vector<Point> prefix;
  for (std::size_t i = depth; i < levels.size(); ++i) prefix.push_back(levels[i].base);
  return PermutationGroup(degree(), levels[depth].strong, prefix);
}

Subgroup::Subgroup(PermutationGroup g, PermutationGroup p) : group(std::move(g)), parent(std::move(p)) {
  require_subgroup(parent, group, "subgroup");
}

PermutationGroup generate(std::span<const Permutation> gens) {
  if (gens.empty()) throw InvariantError("generate: empty generator list needs an explicit degree");
  return generate(gens.front().degree(), gens);
}

PermutationGroup generate(std::size_t degree, std::span<const Permutation> gens) {
  return PermutationGroup(degree, std::vector<Permutation>(gens.begin(), gens.end()));
}

bool same_group(const PermutationGroup& a, const PermutationGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.contains(b);
}

std::vector<Point> orbit_of(const PermutationGroup& g, Point point) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> orb{point};
  seen[point] = true;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (const auto& x : g.generators()) {
      const Point y = x[orb[i]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  }
  return orb;
}

std::vector<std::vector<Point>> orbits(const PermutationGroup& g) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(g.degree(), false);
  for (Point x = 0; x < g.degree(); ++x) {
    if (seen[x]) continue;
    auto orb = orbit_of(g, x);
    for (Point& y : orb) {
      seen[y] = true;
      ++y;
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(const PermutationGroup& g) {
  return g.degree() <= 1 || orbit_of(g, 0).size() == g.degree();
}

bool is_abelian(const PermutationGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

Subgroup stabilizer(const PermutationGroup& g, Point point) {
  if (point < 1 || point > g.degree()) throw InvariantError("stabilizer: point out of range");
  const Point prefix[] = {point - 1};
  PermutationGroup rebased(g.degree(), g.generators(), prefix);
  return Subgroup(rebased.stabilizer_at_depth(1), g);
}

Subgroup block_stabilizer(const PermutationGroup& g, std::span<const Point> block,
                          const Limits& limits) {
  if (block.empty()) throw InvariantError("block_stabilizer: empty block");
  std::vector<Point> start;
  for (Point x : block) {
    if (x < 1 || x > g.degree()) throw InvariantError("block_stabilizer: point out of range");
    start.push_back(x - 1);
  }
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());

  auto image = [](const std::vector<Point>& set, const Permutation& x) {
    std::vector<Point> out;
    out.reserve(set.size());
    for (Point p : set) out.push_back(x[p]);
    std::sort(out.begin(), out.end());
    return out;
  };

  std::map<std::vector<Point>, std::size_t> index{{start, 0}};
  std::vector<std::vector<Point>> orbit{start};
  std::vector<Permutation> transversal{identity(g.degree())};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& x : g.generators()) {
      auto img = image(orbit[i], x);
      if (index.count(img)) continue;
      if (orbit.size() >= limits.coset_index) throw BudgetError("block_stabilizer: set orbit too large");
      index.emplace(img, orbit.size());
      orbit.push_back(std::move(img));
      transversal.push_back(transversal[i] * x);
    }
  }

  const BigInt target = g.order() / orbit.size();
  GroupBuilder stab(g.degree());
  for (std::size_t i = 0; i < orbit.size() && stab.order() < target; ++i) {
    for (const auto& x : g.generators()) {
      const std::size_t j = index.at(image(orbit[i], x));
      stab.add(transversal[i] * x * inverse(transversal[j]));
      if (stab.order() == target) break;
    }
  }
  return Subgroup(stab.build(), g);
}

Permutation canonical_coset_rep(const PermutationGroup& h, const Permutation& x) {
  Permutation rep = x;
  for (const auto& level : h.chain().levels()) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < level.orbit.size(); ++j)
      if (rep[level.orbit[j]] < rep[level.orbit[best]]) best = j;
    if (best != 0) rep = level.transversal[best] * rep;
  }
  return rep;
}

CosetAction coset_action(const PermutationGroup& g, const PermutationGroup& h, const Limits& limits) {
  require_subgroup(g, h, "coset_action");
  const std::uint64_t index = checked_u64(g.order() / h.order(), limits.coset_index, "coset_action index");

  std::unordered_map<Permutation, Point> label;
  std::vector<Permutation> reps{canonical_coset_rep(h, identity(g.degree()))};
  label.emplace(reps.front(), 0);
  const auto& gens = g.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto next = canonical_coset_rep(h, reps[i] * gens[s]);
      auto [it, inserted] = label.emplace(next, static_cast<Point>(reps.size()));
      if (inserted) reps.push_back(std::move(next));
      images[s].push_back(it->second);
    }
  }
  if (reps.size() != index) throw InvariantError("coset_action: coset count does not match index");

  std::vector<Permutation> gen_images;
  for (auto& img : images) gen_images.push_back(Permutation::from_images(std::move(img)));
  PermutationGroup image(reps.size(), gen_images);
  return {std::move(image), std::move(gen_images), std::move(reps)};
}

PermutationGroup kernel_of_action(const PermutationGroup& g, std::span<const Permutation> images) {
  const auto& gens = g.generators();
  if (images.size() != gens.size()) throw InvariantError("kernel_of_action: one image per generator");
  const std::size_t n = g.degree();
  const std::size_t m = images.empty() ? 0 : images.front().degree();

  // Embed g diagonally in S_n x S_m; the kernel is the pointwise stabilizer
  // of the m extra points.
  std::vector<Permutation> combined;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (images[i].degree() != m) throw InvariantError("kernel_of_action: image degree mismatch");
    std::vector<Point> img(n + m);
    for (Point x = 0; x < n; ++x) img[x] = gens[i][x];
    for (Point x = 0; x < m; ++x) img[n + x] = static_cast<Point>(n) + images[i][x];
    combined.push_back(Permutation::from_images(std::move(img)));
  }
  std::vector<Point> prefix(m);
  for (std::size_t x = 0; x < m; ++x) prefix[x] = static_cast<Point>(n + x);
  PermutationGroup diag(n + m, combined, prefix);
  if (diag.order() != g.order()) throw InvariantError("kernel_of_action: images do not define a homomorphism");

  const auto levels = diag.chain().levels();
  std::vector<Permutation> kernel_gens;
  if (levels.size() > m) {
    for (const auto& x : levels[m].strong) {
      std::vector<Point> img(x.images().begin(), x.images().begin() + static_cast<std::ptrdiff_t>(n));
      kernel_gens.push_back(Permutation::from_images(std::move(img)));
    }
  }
  return PermutationGroup(n, std::move(kernel_gens));
}

Subgroup core(const PermutationGroup& g, const PermutationGroup& h, const Limits& limits) {
  require_subgroup(g, h, "core");
  if (h.order() == g.order()) return Subgroup(g, g);
  const auto action = coset_action(g, h, limits);
  return Subgroup(kernel_of_action(g, action.generator_images), g);
}

Subgroup normal_closure(const PermutationGroup& g, std::span<const Permutation> s) {
  GroupBuilder closure(g.degree());
  std::vector<Permutation> queue;
  for (const auto& x : s) {
    require_degree(g, x, "normal_closure");
    if (!g.contains(x)) throw InvariantError("normal_closure: element not in group");
    if (closure.add(x)) queue.push_back(x);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& y : g.generators()) {
      auto c = conjugate(queue[i], y);
      if (closure.add(c)) queue.push_back(std::move(c));
    }
  }
  return Subgroup(closure.build(), g);
}

Subgroup derived_subgroup(const PermutationGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

bool is_normal(const PermutationGroup& g, const PermutationGroup& h) {
  require_subgroup(g, h, "is_normal");
  for (const auto& x : h.generators())
    for (const auto& y : g.generators())
      if (!h.contains(conjugate(x, y))) return false;
  return true;
}

PermutationGroup intersect(const PermutationGroup& a, const PermutationGroup& b, const Limits& limits) {
  if (a.degree() != b.degree()) throw InvariantError("intersect: degree mismatch");
  const bool a_smaller = a.order() <= b.order();
  const PermutationGroup& small = a_smaller ? a : b;
  const PermutationGroup& large = a_smaller ? b : a;
  if (small.order() > limits.enumeration) return intersect_backtrack(a, b);

  GroupBuilder result(a.degree());
  small.for_each_element(
      [&](const Permutation& x) {
        if (!result.contains(x) && large.contains(x)) result.add(x);
      },
      limits.enumeration);
  return result.build();
}

namespace {

class IntersectionSearch {
 public:
  IntersectionSearch(const PermutationGroup& a, const PermutationGroup& b)
      : a_(a), b_(b.degree(), b.generators(), a.chain().base()), levels_(a_.chain().levels()) {}

  PermutationGroup run() {
    std::vector<Permutation> found;
    const std::size_t n = a_.degree();
    for (std::size_t i = levels_.size(); i-- > 0;) {
      const Point alpha = levels_[i].base;
      auto orbit = orbit_under(found, alpha, n);
      const auto& b_level = b_.chain().levels()[i];
      for (std::size_t j = 1; j < levels_[i].orbit.size(); ++j) {
        const Point gamma = levels_[i].orbit[j];
        if (orbit[gamma]) continue;
        if (b_level.index[gamma] < 0) continue;
        auto x = find_element(i, j);
        if (!x) continue;
        found.push_back(std::move(*x));
        orbit = orbit_under(found, alpha, n);
      }
    }
    return PermutationGroup(n, std::move(found));
  }

 private:
  static std::vector<bool> orbit_under(const std::vector<Permutation>& gens, Point start, std::size_t n) {
    std::vector<bool> seen(n, false);
    std::vector<Point> queue{start};
    seen[start] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& g : gens)
        if (!seen[g[queue[k]]]) {
          seen[g[queue[k]]] = true;
          queue.push_back(g[queue[k]]);
        }
    return seen;
  }

  // x in A^(i) with base_i^x = orbit_i[j], also lying in B.
  std::optional<Permutation> find_element(std::size_t i, std::size_t j) {
    const Permutation& suffix = levels_[i].transversal[j];
    // B-side state: any b in B mapping base_i to gamma is b' v with v = u^B(gamma).
    const auto& b_level = b_.chain().levels()[i];
    const auto vb = static_cast<std::size_t>(b_level.index[suffix[levels_[i].base]]);
    return descend(i + 1, suffix, b_level.inv_transversal[vb]);
  }

  std::optional<Permutation> descend(std::size_t depth, const Permutation& suffix, const Permutation& winv) {
    if (depth == levels_.size()) {
      if (b_.contains(suffix)) return suffix;
      return std::nullopt;
    }
    const auto& level = levels_[depth];
    const auto& b_level = b_.chain().levels()[depth];
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      const Point img = suffix[level.orbit[k]];
      const std::int32_t vb = b_level.index[winv[img]];
      if (vb < 0) continue;
      auto found = descend(depth + 1, level.transversal[k] * suffix,
                           winv * b_level.inv_transversal[static_cast<std::size_t>(vb)]);
      if (found) return found;
    }
    return std::nullopt;
  }

  const PermutationGroup& a_;
  PermutationGroup b_;
  std::span<const StabilizerChain::Level> levels_;
};

}  // namespace

PermutationGroup intersect_backtrack(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) throw InvariantError("intersect: degree mismatch");
  if (a.is_trivial() || b.is_trivial()) return PermutationGroup::trivial(a.degree());
  return IntersectionSearch(a, b).run();
}

std::optional<unsigned> is_elementary_abelian(const PermutationGroup& g, std::uint64_t q) {
  if (!is_prime(q)) throw InvariantError("is_elementary_abelian: q = " + std::to_string(q) + " is not prime");
  if (!is_abelian(g)) return std::nullopt;
  for (const auto& x : g.generators())
    if (!power(x, static_cast<std::int64_t>(q)).is_identity()) return std::nullopt;
  BigInt n = g.order();
  unsigned s = 0;
  while (n > 1) {
    if (n % q != 0) return std::nullopt;
    n /= q;
    ++s;
  }
  return s;
}

bool is_simple(const PermutationGroup& g, const Limits& limits) {
  const BigInt order = g.order();
  if (order == 1) return false;
  const std::uint64_t n = checked_u64(order, limits.simplicity, "is_simple");
  if (is_abelian(g)) return is_prime(n);

  const StabilizerChain& chain = g.chain();
  std::vector<bool> covered(n, false);
  covered[0] = true;  // rank 0 is the identity
  for (std::uint64_t r = 1; r < n; ++r) {
    if (covered[r]) continue;
    const Permutation rep = chain.unrank(r);
    std::vector<Permutation> cls{rep};
    covered[r] = true;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (const auto& y : g.generators()) {
        auto c = conjugate(cls[k], y);
        const auto rc = chain.rank_of(c);
        if (!covered[rc]) {
          covered[rc] = true;
          cls.push_back(std::move(c));
        }
      }
    }
    const Permutation reps[] = {rep};
    if (normal_closure(g, reps).group.order() != order) return false;
  }
  return true;
}

}  // namespace towerkit
