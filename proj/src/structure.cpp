#include "towerkit/structure.hpp"

#include <memory>
#include <unordered_map>

namespace towerkit {

BlockSystem BlockSystem::standard(std::uint64_t p, std::uint64_t q) {
  BlockSystem bs{p, q, {}};
  for (std::uint64_t b = 1; b <= p; ++b) {
    std::vector<Point> block;
    for (std::uint64_t j = 0; j < q; ++j) block.push_back(static_cast<Point>(j * p + b));
    bs.blocks.push_back(std::move(block));
  }
  return bs;
}

SigmaTau find_sigma_tau(const CoverTower& t) {
  const auto& G = t.G();
  const auto& H = t.H();
  const auto& N = t.N();

  std::optional<Permutation> sigma;
  std::vector<Permutation> pool = t.vector().elliptic;
  pool.insert(pool.end(), G.generators().begin(), G.generators().end());
  for (const auto& x : pool) {
    const BigInt o = order_of(x);
    if (o % t.p() != 0) continue;
    auto candidate = power(x, static_cast<std::int64_t>(o / t.p()));
    if (H.contains(candidate)) continue;
    sigma = std::move(candidate);
    break;
  }
  if (!sigma) throw InvariantError("find_sigma_tau: no element of order p outside H");

  std::optional<Permutation> tau;
  for (const auto& x : H.generators()) {
    if (!N.contains(x)) {
      tau = x;
      break;
    }
  }
  if (!tau) {
    for (const auto& x : coset_action(H, N).representatives) {
      if (!N.contains(x)) {
        tau = x;
        break;
      }
    }
  }
  if (!tau) throw InvariantError("find_sigma_tau: H has no element outside N");
  if (!N.contains(power(*tau, static_cast<std::int64_t>(t.q()))))
    throw InvariantError("find_sigma_tau: tau^q is not in N");

  std::vector<Permutation> nt = N.generators();
  nt.push_back(*tau);
  if (PermutationGroup(t.degree(), nt).order() != H.order())
    throw InvariantError("find_sigma_tau: N<tau> is not H");
  std::vector<Permutation> hs = H.generators();
  hs.push_back(*sigma);
  if (PermutationGroup(t.degree(), hs).order() != G.order())
    throw InvariantError("find_sigma_tau: H<sigma> is not G");
  return {*sigma, *tau};
}

namespace {

// Labels right cosets of N by the transversal tau^(a-1) sigma^(b-1).
class CosetLabeling {
 public:
  CosetLabeling(const CoverTower& t, const SigmaTau& st) : N_(t.N()), n_(t.degree()) {
    Permutation tau_power = identity(n_);
    for (std::uint64_t a = 0; a < t.q(); ++a) {
      Permutation x = tau_power;
      for (std::uint64_t b = 0; b < t.p(); ++b) {
        auto canon = canonical_coset_rep(N_, x);
        if (!labels_.emplace(canon, static_cast<Point>(reps_.size())).second)
          throw InvariantError("relabel_to_blocks: transversal repeats a coset");
        reps_.push_back(x);
        x = x * st.sigma;
      }
      tau_power = tau_power * st.tau;
    }
  }

  Permutation image(const Permutation& g) const {
    std::vector<Point> img(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      auto it = labels_.find(canonical_coset_rep(N_, reps_[k] * g));
      if (it == labels_.end()) throw InvariantError("relabel_to_blocks: coset outside the transversal");
      img[k] = it->second;
    }
    return Permutation::from_images(std::move(img));
  }

  std::vector<Permutation> images(const std::vector<Permutation>& gs) const {
    std::vector<Permutation> out;
    for (const auto& g : gs) out.push_back(image(g));
    return out;
  }

  const std::vector<Permutation>& reps() const { return reps_; }

 private:
  PermutationGroup N_;
  std::size_t n_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, Point> labels_;
};

std::optional<Permutation> point_relabeling(const CoverTower& t, const CosetLabeling& lab,
                                            const std::vector<Permutation>& relabeled_vector) {
  if (!t.evidence().given_labeling_transitive) return std::nullopt;
  const auto& N = t.N();
  const std::size_t n = t.degree();
  for (Point x0 = 0; x0 < n; ++x0) {
    bool fixed = true;
    for (const auto& g : N.generators()) fixed = fixed && g[x0] == x0;
    if (!fixed) continue;
    std::vector<Point> img(n, static_cast<Point>(n));
    for (std::size_t k = 0; k < n; ++k) {
      const Point y = lab.reps()[k][x0];
      if (img[y] != n) return std::nullopt;
      img[y] = static_cast<Point>(k);
    }
    auto pi = Permutation::from_images(std::move(img));
    for (std::size_t j = 0; j < relabeled_vector.size(); ++j)
      if (!(conjugate(t.vector().elliptic[j], pi) == relabeled_vector[j])) return std::nullopt;
    return pi;
  }
  return std::nullopt;
}

}  // namespace

Relabeled relabel_to_blocks(const CoverTower& t, const SigmaTau& st) {
  if (t.G().order() / t.N().order() != t.degree())
    throw InvariantError("relabel_to_blocks: |G:N| differs from pq");
  auto shared = std::make_shared<const CosetLabeling>(t, st);
  const CosetLabeling& lab = *shared;
  const std::size_t n = t.degree();

  TowerData d;
  d.p = t.p();
  d.q = t.q();
  d.vector.elliptic = lab.images(t.vector().elliptic);
  d.G = PermutationGroup(n, d.vector.elliptic);
  d.H = PermutationGroup(n, lab.images(t.H().generators()));
  d.N = PermutationGroup(n, lab.images(t.N().generators()));
  auto relabeling = point_relabeling(t, lab, d.vector.elliptic);
  return {CoverTower(std::move(d)), lab.image(st.sigma), lab.image(st.tau), std::move(relabeling),
          [shared](const Permutation& g) { return shared->image(g); }};
}

EpsilonData build_epsilon(std::uint64_t p, std::uint64_t q) {
  const std::size_t n = p * q;
  EpsilonData e;
  for (const auto& block : BlockSystem::standard(p, q).blocks)
    e.epsilon_b.push_back(Permutation::from_cycles(n, {block}));
  e.epsilon = identity(n);
  for (const auto& x : e.epsilon_b) e.epsilon = e.epsilon * x;
  e.R = PermutationGroup(n, e.epsilon_b);
  std::vector<Permutation> j;
  for (std::size_t b = 0; b + 1 < p; ++b) j.push_back(e.epsilon_b[b] * inverse(e.epsilon_b[b + 1]));
  e.J = PermutationGroup(n, j);
  return e;
}

Permutation diagonal_lift(const Permutation& pi, std::uint64_t q) {
  const std::size_t p = pi.degree();
  std::vector<Point> img(p * q);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t b = 0; b < p; ++b) img[j * p + b] = static_cast<Point>(j * p + pi[static_cast<Point>(b)]);
  return Permutation::from_images(std::move(img));
}

PermutationGroup build_T(std::uint64_t p, std::uint64_t q) {
  auto gens = build_epsilon(p, q).J.generators();
  std::vector<Point> cycle(p);
  for (std::size_t b = 0; b < p; ++b) cycle[b] = static_cast<Point>(b + 1);
  gens.push_back(diagonal_lift(Permutation::from_cycles(p, {cycle}), q));
  gens.push_back(diagonal_lift(Permutation::from_cycles(p, {{1, 2, 3}}), q));
  return PermutationGroup(p * q, gens);
}

CheckList verify_containments(const PermutationGroup& G, const EpsilonData& eps, const PermutationGroup& T,
                              const PermutationGroup& K) {
  CheckList out;
  const auto& gens = G.generators();
  bool even = true, commute = true, in_t = true;
  for (const auto& g : gens) {
    even = even && is_even(g);
    commute = commute && g * eps.epsilon == eps.epsilon * g;
    in_t = in_t && T.contains(g);
  }
  out.push_back({"relabeled.G_even", even, ""});
  out.push_back({"relabeled.G_commutes_with_epsilon", commute, ""});
  out.push_back({"relabeled.G_in_T", in_t, ""});
  out.push_back({"K.in_R", eps.R.contains(K), ""});
  out.push_back({"K.in_J", eps.J.contains(K), ""});
  const auto meet = intersect(G, eps.J);
  out.push_back({"K.equals_G_meet_J", same_group(meet, K),
                 "|G n J| = " + to_string(meet.order()) + ", |K| = " + to_string(K.order())});
  return out;
}

StructureWitness decompose(const Relabeled& r) {
  const auto& t = r.tower;
  const auto& G = t.G();
  const std::uint64_t p = t.p(), q = t.q();
  const std::size_t n = t.degree();
  StructureWitness w;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    w.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  w.sigma = r.sigma;
  w.tau = r.tau;
  w.K = core(G, t.H()).group;
  const auto s = is_elementary_abelian(w.K, q);
  w.s = s.value_or(0);
  add("K.elementary_abelian", s.has_value() && *s <= p - 1,
      "|K| = " + to_string(w.K.order()) + (s ? ", s = " + std::to_string(*s) : ""));

  w.eps = build_epsilon(p, q);
  w.T = build_T(p, q);
  add("R.order", w.eps.R.order() == boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(p)));
  add("J.order", w.eps.J.order() == boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(p - 1)));

  std::vector<Point> cycle(p);
  for (std::size_t b = 0; b < p; ++b) cycle[b] = static_cast<Point>(b + 1);
  const auto block_cycle = Permutation::from_cycles(p, {cycle});
  add("sigma.standard", r.sigma == diagonal_lift(block_cycle, q));
  bool shift = true;
  for (std::size_t b = 0; b < p; ++b)
    shift = shift && conjugate(w.eps.epsilon_b[b], r.sigma) == w.eps.epsilon_b[(b + 1) % p];
  add("epsilon.sigma_shift", shift);

  const auto blocks = BlockSystem::standard(p, q);
  bool nb_trivial = true;
  Permutation sigma_power = identity(n);
  for (std::size_t b = 0; b < p; ++b) {
    for (const auto& x : t.N().generators()) {
      const auto y = conjugate(x, sigma_power);
      for (Point pt : blocks.blocks[b]) nb_trivial = nb_trivial && y[pt - 1] == pt - 1;
    }
    sigma_power = sigma_power * r.sigma;
  }
  add("N_b.trivial_on_block_b", nb_trivial);

  for (auto& c : verify_containments(G, w.eps, w.T, w.K)) w.checks.push_back(std::move(c));

  bool preserved = true;
  for (const auto& x : t.vector().elliptic) {
    std::vector<Point> img(p);
    for (Point pt = 0; pt < n; ++pt) {
      const Point target = static_cast<Point>(blocks.block_of(x[pt]) - 1);
      if (pt < p) img[pt] = target;
      else preserved = preserved && img[pt % p] == target;
    }
    w.pi_images.push_back(Permutation::from_images(std::move(img)));
  }
  add("blocks.preserved", preserved);
  if (!preserved) return w;

  const auto stab = block_stabilizer(G, blocks.blocks[0]);
  add("H.is_block_stabilizer", same_group(stab.group, t.H()));

  w.U_image = PermutationGroup(p, w.pi_images);
  const auto kernel = kernel_of_action(G, w.pi_images);
  add("projection.kernel_is_K", same_group(kernel, w.K));
  add("U.order", w.U_image.order() * w.K.order() == G.order(),
      "|U| = " + to_string(w.U_image.order()));
  add("U.transitive", is_transitive(w.U_image));
  add("U.simple_or_cyclic_p", w.U_image.order() == p || is_simple(w.U_image));

  std::vector<Permutation> lifts;
  for (const auto& x : w.pi_images) lifts.push_back(diagonal_lift(x, q));
  w.U_lift = PermutationGroup(n, lifts);
  std::vector<Permutation> jg = w.eps.J.generators();
  jg.insert(jg.end(), G.generators().begin(), G.generators().end());
  const PermutationGroup JG(n, jg);
  add("U_lift.in_JG", JG.contains(w.U_lift) && w.U_lift.order() == w.U_image.order());
  return w;
}

std::optional<std::vector<PermutationGroup>> complements(const PermutationGroup& G, const PermutationGroup& K,
                                                         std::uint64_t budget) {
  const std::size_t n = G.degree();
  if (K.is_trivial()) return std::vector<PermutationGroup>{G};

  // A generating subset of G, kept as short as possible.
  std::vector<Permutation> gens;
  BigInt reached = 1;
  for (const auto& g : G.generators()) {
    std::vector<Permutation> trial = gens;
    trial.push_back(g);
    const BigInt o = PermutationGroup(n, trial).order();
    if (o > reached) {
      gens = std::move(trial);
      reached = o;
    }
  }

  BigInt combos = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) combos *= K.order();
  if (combos > budget) return std::nullopt;

  const auto kel = K.elements();
  const BigInt target = G.order() / K.order();
  std::vector<PermutationGroup> found;
  std::vector<std::size_t> idx(gens.size(), 0);
  while (true) {
    std::vector<Permutation> lifted;
    for (std::size_t i = 0; i < gens.size(); ++i) lifted.push_back(kel[idx[i]] * gens[i]);
    PermutationGroup u(n, lifted);
    if (u.order() == target) {
      bool seen = false;
      for (const auto& f : found) seen = seen || f.contains(u);
      if (!seen) found.push_back(std::move(u));
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == kel.size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return found;
}

}  // namespace towerkit
