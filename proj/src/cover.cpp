#include "towerkit/cover.hpp"

#include <sstream>

namespace towerkit {

BigInt rh_genus(const BigInt& group_order, const BranchingData& data) {
  if (group_order < 1) throw InvariantError("rh_genus: group order must be positive");
  Rational curvature = 2 * (Rational(BigInt(data.gamma)) - 1);
  for (auto m : data.periods) {
    if (m < 2) throw InvariantError("rh_genus: periods must be at least 2");
    curvature += 1 - Rational(1, BigInt(m));
  }
  const Rational g = 1 + Rational(group_order) / 2 * curvature;
  if (denominator(g) != 1)
    throw InvariantError("rh_genus: genus " + g.str() + " is not an integer");
  if (g < 0) throw InvariantError("rh_genus: genus " + g.str() + " is negative");
  return numerator(g);
}

std::vector<Permutation> GeneratingVector::elements() const {
  std::vector<Permutation> out = hyperbolic;
  out.insert(out.end(), elliptic.begin(), elliptic.end());
  return out;
}

CheckList validate_vector(const PermutationGroup& g, const GeneratingVector& v,
                          const BranchingData& type) {
  CheckList out;
  const auto elems = v.elements();
  for (const auto& x : elems) {
    if (x.degree() != g.degree()) {
      out.push_back({"vector.degree", false, "element degree differs from group degree"});
      return out;
    }
  }

  const bool shape = v.hyperbolic.size() == 2 * type.gamma && v.elliptic.size() == type.periods.size();
  out.push_back({"vector.shape", shape,
                 std::to_string(v.hyperbolic.size()) + " hyperbolic, " +
                     std::to_string(v.elliptic.size()) + " elliptic"});

  const PermutationGroup generated(g.degree(), elems);
  const bool generates = same_group(generated, g);
  out.push_back({"vector.generates", generates,
                 "order " + to_string(generated.order()) + " vs " + to_string(g.order())});

  Permutation product = identity(g.degree());
  for (std::size_t i = 0; i + 1 < v.hyperbolic.size(); i += 2) {
    const auto& a = v.hyperbolic[i];
    const auto& b = v.hyperbolic[i + 1];
    product = product * (a * b * inverse(a) * inverse(b));
  }
  for (const auto& c : v.elliptic) product = product * c;
  out.push_back({"vector.relation", product.is_identity(), ""});

  bool periods = shape;
  std::ostringstream orders;
  for (std::size_t j = 0; j < v.elliptic.size(); ++j) {
    const BigInt o = order_of(v.elliptic[j]);
    orders << (j ? "," : "") << o;
    if (j < type.periods.size() && o != type.periods[j]) periods = false;
  }
  out.push_back({"vector.periods", periods, orders.str()});
  return out;
}

namespace {

bool has_cycle_type(const Permutation& x, std::uint64_t p, std::uint64_t q) {
  return cycle_type(x) == CycleType{{static_cast<std::size_t>(p), static_cast<std::size_t>(q)}};
}

}  // namespace

CheckList CoverTower::assess(const TowerData& d, TowerEvidence* evidence) {
  CheckList out;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };

  const bool primes = is_prime(d.p) && is_prime(d.q) && d.p != d.q && d.p % 2 == 1;
  if (!add("tower.primes", primes, "p=" + std::to_string(d.p) + " q=" + std::to_string(d.q))) return out;
  const std::size_t n = d.p * d.q;
  bool degrees = d.G.degree() == n && d.H.degree() == n && d.N.degree() == n;
  for (const auto& x : d.vector.elements()) degrees = degrees && x.degree() == n;
  if (!add("tower.degree", degrees, "expected " + std::to_string(n))) return out;
  if (!add("tower.genus_zero_base", d.vector.hyperbolic.empty() && d.vector.elliptic.size() >= 2,
           std::to_string(d.vector.elliptic.size()) + " branch points"))
    return out;

  const BranchingData type{0, std::vector<std::uint64_t>(d.vector.elliptic.size(), d.p)};
  const PermutationGroup G(n, d.vector.elliptic);
  for (auto& c : validate_vector(G, d.vector, type)) out.push_back(std::move(c));
  add("vector.generates_claimed_G", same_group(G, d.G),
      "order " + to_string(G.order()) + " vs claimed " + to_string(d.G.order()));
  if (!all_passed(out)) return out;

  if (!add("H.subgroup_of_G", G.contains(d.H))) return out;
  const BigInt gh = G.order() / d.H.order();
  add("H.index_p", gh == d.p, "|G:H| = " + to_string(gh));
  if (!add("N.subgroup_of_H", d.H.contains(d.N))) return out;
  const BigInt hn = d.H.order() / d.N.order();
  add("N.index_q", hn == d.q, "|H:N| = " + to_string(hn));
  add("N.normal_in_H", is_normal(d.H, d.N));
  const auto core_n = core(G, d.N);
  add("N.core_trivial", core_n.group.is_trivial(), "|core| = " + to_string(core_n.order()));
  if (!all_passed(out)) return out;

  const auto action = coset_action(G, d.N);
  bool types = true, even = true;
  for (const auto& c : action.generator_images) {
    types = types && has_cycle_type(c, d.p, d.q);
    even = even && is_even(c);
  }
  for (const auto& c : d.vector.elliptic) even = even && is_even(c);
  add("monodromy.degree_pq", action.image.degree() == n, std::to_string(action.image.degree()));
  add("monodromy.transitive", is_transitive(action.image));
  add("monodromy.cycle_type", types,
      "each c_j is " + std::to_string(d.q) + " disjoint " + std::to_string(d.p) + "-cycles");
  add("monodromy.even", even);

  if (evidence) {
    evidence->order_G = G.order();
    evidence->order_H = d.H.order();
    evidence->order_N = d.N.order();
    evidence->core_N_order = core_n.order();
    evidence->given_labeling_transitive = is_transitive(G);
    evidence->monodromy = action.generator_images;
  }
  return out;
}

CoverTower::CoverTower(TowerData data)
    : p_(data.p), q_(data.q), G_(data.G), H_(data.H), N_(data.N), vector_(data.vector) {
  for (const auto& c : assess(data, &evidence_)) {
    if (!c.passed)
      throw InvariantError("tower check " + c.name + " failed" + (c.detail.empty() ? "" : ": " + c.detail));
  }
  G_ = PermutationGroup(p_ * q_, vector_.elliptic);
}

BranchingData CoverTower::signature() const {
  return {0, std::vector<std::uint64_t>(vector_.elliptic.size(), p_)};
}

Genera tower_genera(const CoverTower& t) {
  const auto sig = t.signature();
  Genera g;
  // X -> P^1 has degree p and is totally ramified over each branch point.
  g.gX = rh_genus(t.p(), sig);
  // Y -> X is unramified of degree q.
  g.gY = 1 + BigInt(t.q()) * (g.gX - 1);
  g.gZ = rh_genus(t.G().order(), sig);
  return g;
}

bool check_etale_condition(const CoverTower& t, const PermutationGroup& K) {
  for (const auto& c : t.vector().elliptic) {
    Permutation x = c;
    while (!x.is_identity()) {
      if (K.contains(x)) return false;
      x = x * c;
    }
  }
  return true;
}

}  // namespace towerkit
