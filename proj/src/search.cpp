#include "towerkit/search.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "towerkit/structure.hpp"

namespace towerkit {

namespace {

// Candidate ranks in [begin, end), in increasing order.
std::vector<std::uint64_t> scan(const PermutationGroup& T, const Permutation& a, std::uint64_t p,
                                std::uint64_t q, std::uint64_t begin, std::uint64_t end) {
  const CycleType want{{static_cast<std::size_t>(p), static_cast<std::size_t>(q)}};
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = begin; r < end; ++r) {
    const auto b = T.chain().unrank(r);
    if (cycle_type(b) != want) continue;
    if (order_of(a * b) != p) continue;
    out.push_back(r);
  }
  return out;
}

// Subgroups of index q in H with elementary abelian quotient: kernels of the
// nonzero functionals on H / H'H^q, one per line.
std::vector<PermutationGroup> index_q_subgroups(const PermutationGroup& H, std::uint64_t q) {
  const std::size_t n = H.degree();
  std::vector<Permutation> seeds = derived_subgroup(H).group.generators();
  for (const auto& h : H.generators()) seeds.push_back(power(h, static_cast<std::int64_t>(q)));
  const auto M = normal_closure(H, seeds).group;

  std::vector<Permutation> basis;
  std::vector<Permutation> span = M.generators();
  BigInt reached = M.order();
  for (const auto& h : H.generators()) {
    auto trial = span;
    trial.push_back(h);
    const BigInt o = PermutationGroup(n, trial).order();
    if (o > reached) {
      span = std::move(trial);
      reached = o;
      basis.push_back(h);
    }
  }

  const std::size_t d = basis.size();
  std::vector<PermutationGroup> out;
  std::vector<std::uint64_t> f(d, 0);
  while (true) {
    std::size_t i = 0;
    while (i < d && ++f[i] == q) f[i++] = 0;
    if (i == d) break;
    std::size_t lead = d;
    for (std::size_t j = 0; j < d && lead == d; ++j)
      if (f[j] != 0) lead = j;
    if (f[lead] != 1) continue;  // one representative per line
    std::vector<Permutation> gens = M.generators();
    gens.push_back(power(basis[lead], static_cast<std::int64_t>(q)));
    for (std::size_t j = 0; j < d; ++j) {
      if (j == lead) continue;
      gens.push_back(basis[j] * power(basis[lead], static_cast<std::int64_t>((q - f[j]) % q)));
    }
    out.emplace_back(n, gens);
  }
  return out;
}

}  // namespace

TowerFile SearchHit::to_file(const Permutation& a, std::uint64_t p, std::uint64_t q) const {
  TowerFile f;
  f.p = p;
  f.q = q;
  f.degree = p * q;
  f.title = "search hit b#" + std::to_string(b_rank);
  f.named = {{"a", a}, {"b", b}};
  f.G = {{"a", a}, {"b", b}};
  for (const auto& h : H.generators()) f.H.push_back({format_cycles(h), h});
  for (const auto& x : N.generators()) f.N.push_back({format_cycles(x), x});
  if (f.N.empty()) f.N.push_back({"()", identity(p * q)});
  if (report.order) f.expect.order = *report.order;
  if (const auto& c = report.classification) {
    f.expect.s = c->s;
    f.expect.U = c->U.name();
    f.expect.gX = c->genera.gX;
    f.expect.gY = c->genera.gY;
    f.expect.gZ = c->genera.gZ;
    f.expect.label = c->label;
  }
  return f;
}

SearchResult search_towers(const SearchOptions& o) {
  const std::uint64_t p = o.p, q = o.q;
  if (!is_prime(p) || p % 2 == 0 || !is_prime(q) || p == q)
    throw InvariantError("search: p must be an odd prime and q a different prime");
  const std::size_t n = p * q;
  if (o.a.degree() != n) throw InvariantError("search: a must have degree p*q");
  if (cycle_type(o.a) != CycleType{{static_cast<std::size_t>(p), static_cast<std::size_t>(q)}})
    throw InvariantError("search: a is not a product of q disjoint p-cycles");
  const auto T = build_T(p, q);
  if (!T.contains(o.a)) throw InvariantError("search: a does not lie in T");
  if (T.order() > o.budget)
    throw BudgetError("search: |T| = " + to_string(T.order()) + " exceeds budget " + std::to_string(o.budget));
  const std::uint64_t size = T.order().convert_to<std::uint64_t>();

  SearchResult result;
  result.scanned = size;
  std::vector<std::uint64_t> ranks;
  const unsigned workers = std::max(1u, o.threads);
  if (workers == 1) {
    ranks = scan(T, o.a, p, q, 0, size);
  } else {
    std::vector<std::vector<std::uint64_t>> parts(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        parts[w] = scan(T, o.a, p, q, size * w / workers, size * (w + 1) / workers);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& part : parts) ranks.insert(ranks.end(), part.begin(), part.end());
  }
  result.b_candidates = ranks.size();

  // Distinct groups <a, b>, keyed by order; the first b found represents each.
  struct Found {
    PermutationGroup G;
    std::uint64_t rank;
  };
  std::map<BigInt, std::vector<Found>> groups;
  for (auto r : ranks) {
    const auto b = T.chain().unrank(r);
    PermutationGroup G(n, {o.a, b});
    auto& bucket = groups[G.order()];
    bool seen = false;
    for (const auto& f : bucket) seen = seen || f.G.contains(b);
    if (!seen) bucket.push_back({std::move(G), r});
  }

  const auto delta1 = BlockSystem::standard(p, q).blocks.front();
  for (const auto& [order, bucket] : groups) {
    for (const auto& found : bucket) {
      ++result.distinct_groups;
      const auto& G = found.G;
      const auto H = block_stabilizer(G, delta1).group;
      if (G.order() != H.order() * p) continue;
      const auto b = T.chain().unrank(found.rank);
      for (const auto& N : index_q_subgroups(H, q)) {
        if (!core(G, N).group.is_trivial()) continue;
        TowerData d;
        d.p = p;
        d.q = q;
        d.G = G;
        d.H = H;
        d.N = N;
        d.vector.elliptic = {o.a, b, inverse(o.a * b)};
        SearchHit hit{b, found.rank, H, N, verify_tower(d, std::nullopt, {}, "", o.verify)};
        hit.report.title = "b#" + std::to_string(found.rank);
        result.hits.push_back(std::move(hit));
      }
    }
  }

  auto key = [](const SearchHit& h) {
    const auto& c = h.report.classification;
    return std::make_tuple(h.report.order.value_or(0), c ? c->s : 0u, c ? c->U.name() : std::string(),
                           c ? c->label : std::string(), h.b_rank);
  };
  std::stable_sort(result.hits.begin(), result.hits.end(),
                   [&](const SearchHit& x, const SearchHit& y) { return key(x) < key(y); });
  return result;
}

}  // namespace towerkit
