#include "towerkit/classify.hpp"

#include <algorithm>
#include <numeric>

namespace towerkit {

namespace {

void require_odd_prime(std::uint64_t p, const char* what) {
  if (p % 2 == 0 || !is_prime(p))
    throw InvariantError(std::string(what) + ": " + std::to_string(p) + " is not an odd prime");
}

BigInt factorial_half(std::uint64_t p) {
  BigInt f = 1;
  for (std::uint64_t i = 3; i <= p; ++i) f *= i;
  return f;
}

SimpleGroupId fixed_id(SimpleTag tag, std::uint64_t p, std::uint64_t order) {
  return {tag, p, BigInt(order), 0, 0};
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::string SimpleGroupId::name() const {
  switch (tag) {
    case SimpleTag::cyclic: return "Z" + std::to_string(degree);
    case SimpleTag::alternating: return "A" + std::to_string(degree);
    case SimpleTag::psl2_11: return "PSL(2,11)";
    case SimpleTag::m11: return "M11";
    case SimpleTag::m23: return "M23";
    case SimpleTag::psl: return "PSL(" + std::to_string(n) + "," + std::to_string(fq) + ")";
  }
  return "?";
}

SimpleGroupId cyclic_id(std::uint64_t p) { return fixed_id(SimpleTag::cyclic, p, p); }

SimpleGroupId alternating_id(std::uint64_t p) {
  return {SimpleTag::alternating, p, factorial_half(p), 0, 0};
}

BigInt psl_order(unsigned n, std::uint64_t fq) {
  BigInt order = boost::multiprecision::pow(BigInt(fq), n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) order *= boost::multiprecision::pow(BigInt(fq), i) - 1;
  return order / std::gcd<std::uint64_t>(n, fq - 1);
}

SimpleGroupId psl_id(unsigned n, std::uint64_t fq) {
  const BigInt p = (boost::multiprecision::pow(BigInt(fq), n) - 1) / (fq - 1);
  return {SimpleTag::psl, p.convert_to<std::uint64_t>(), psl_order(n, fq), n, fq};
}

std::vector<SimpleGroupId> guralnick_candidates(std::uint64_t p) {
  require_odd_prime(p, "guralnick_candidates");
  std::vector<SimpleGroupId> out;
  if (p >= 5) out.push_back(alternating_id(p));
  if (p == 11) {
    out.push_back(fixed_id(SimpleTag::psl2_11, 11, 660));
    out.push_back(fixed_id(SimpleTag::m11, 11, 7920));
  }
  if (p == 23) out.push_back(fixed_id(SimpleTag::m23, 23, 10200960));

  // (fq^n - 1)/(fq - 1) > fq for n >= 2, so fq < p.
  for (std::uint64_t fq = 2; fq < p; ++fq) {
    if (prime_power(fq).first == 0) continue;
    std::uint64_t value = 1 + fq;  // n = 2
    for (unsigned n = 2; value <= p; ++n, value = value * fq + 1) {
      if (value != p || !is_prime(n)) continue;
      if (n == 2 && fq <= 3) continue;  // PSL(2,2), PSL(2,3) are solvable
      if (n == 2 && fq == 4) continue;  // PSL(2,4) is A5
      out.push_back(psl_id(n, fq));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].order == out[i - 1].order)
      throw InvariantError("guralnick_candidates: " + out[i - 1].name() + " and " + out[i].name() +
                           " share an order at p = " + std::to_string(p));
  return out;
}

std::vector<std::pair<std::uint64_t, SimpleGroupId>> admissible_pairs(std::uint64_t p) {
  std::vector<std::pair<std::uint64_t, SimpleGroupId>> out;
  for (const auto& c : guralnick_candidates(p)) {
    if (c.tag == SimpleTag::alternating && p == 5) out.emplace_back(3, c);  // A5 = PSL(2,4)
    if (c.tag == SimpleTag::m11) out.emplace_back(2, c);
    if (c.tag != SimpleTag::psl) continue;
    if (c.fq > 2) {
      for (auto q : prime_divisors(c.fq - 1)) out.emplace_back(q, c);
    } else if (c.n == 3 && p == 7) {
      out.emplace_back(2, c);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second.order < b.second.order;
  });
  return out;
}

std::optional<SolvableCase> solvable_case(const CoverTower& t, const StructureWitness& w) {
  if (!is_normal(t.G(), t.H())) return std::nullopt;
  const std::uint64_t p = t.p(), q = t.q();
  SolvableCase sc;
  sc.s = w.s;
  sc.checks.push_back({"solvable.H_equals_K", same_group(t.H(), w.K), ""});
  sc.checks.push_back({"solvable.s_range", sc.s >= 1 && sc.s <= p - 1, "s = " + std::to_string(sc.s)});
  sc.galois = t.N().is_trivial();
  sc.checks.push_back({"galois.iff_order_pq", sc.galois == (t.G().order() == p * q),
                       "|G| = " + to_string(t.G().order())});
  if (!sc.galois) return sc;

  sc.checks.push_back({"galois.p_divides_q_minus_1", (q - 1) % p == 0, ""});
  const Permutation& a = w.K.generators().front();
  const auto conj = conjugate(a, w.sigma);
  Permutation ar = a;
  for (std::uint64_t r = 1; r < q; ++r, ar = ar * a) {
    if (ar == conj) {
      sc.r = r;
      break;
    }
  }
  bool primitive = false;
  if (sc.r) {
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < p; ++i) x = x * *sc.r % q;
    primitive = *sc.r != 1 && x == 1;
  }
  sc.checks.push_back({"galois.r_primitive_root", primitive,
                       sc.r ? "r = " + std::to_string(*sc.r) : "no exponent found"});
  return sc;
}

SimpleGroupId identify_U(const StructureWitness& w, std::uint64_t p) {
  const auto& u = w.U_image;
  if (u.degree() != p || !is_transitive(u))
    throw InvariantError("identify_U: U is not transitive of degree " + std::to_string(p));
  if (u.order() == p) return cyclic_id(p);
  for (const auto& c : guralnick_candidates(p)) {
    if (c.order != u.order()) continue;
    if (!is_simple(u)) throw InvariantError("identify_U: order matches " + c.name() + " but U is not simple");
    return c;
  }
  throw InvariantError("identify_U: no simple group of degree " + std::to_string(p) + " has order " +
                       to_string(u.order()));
}

std::string_view permute_source_name(PermuteSource s) {
  switch (s) {
    case PermuteSource::supplied_U: return "supplied_U";
    case PermuteSource::complement_search: return "complement_search";
    case PermuteSource::undetermined: return "undetermined";
    case PermuteSource::not_needed: return "not_needed";
  }
  return "?";
}

namespace {

bool product_is_G(const PermutationGroup& G, const PermutationGroup& N, const PermutationGroup& U) {
  return N.order() * U.order() == G.order() * intersect(N, U).order();
}

std::string h_meets_u_text(const SimpleGroupId& uid) {
  switch (uid.tag) {
    case SimpleTag::cyclic: return "H = K";
    case SimpleTag::alternating: return "A" + std::to_string(uid.degree - 1);
    case SimpleTag::psl2_11: return "A5";
    case SimpleTag::m11: return "M10";
    case SimpleTag::m23: return "M22";
    case SimpleTag::psl:
      return "stabilizer of a point or hyperplane of F_" + std::to_string(uid.fq) + "^" + std::to_string(uid.n);
  }
  return "?";
}

char base_letter(SimpleTag tag) {
  switch (tag) {
    case SimpleTag::alternating: return 'a';
    case SimpleTag::psl2_11: return 'b';
    case SimpleTag::m11: return 'c';
    case SimpleTag::m23: return 'd';
    default: return 'e';
  }
}

}  // namespace

ClassificationReport case_label(const CoverTower& t, const StructureWitness& w, const SimpleGroupId& uid,
                                const std::optional<PermutationGroup>& supplied_U,
                                std::uint64_t complement_budget) {
  const std::uint64_t p = t.p(), q = t.q();
  const auto& G = t.G();
  ClassificationReport rep;
  rep.U = uid;
  rep.s = w.s;
  rep.genera = tower_genera(t);
  rep.h_meets_u = h_meets_u_text(uid);
  rep.solvable = uid.tag == SimpleTag::cyclic;
  rep.notes.push_back("N is maximal in H since |H:N| = q is prime");

  const auto sc = solvable_case(t, w);
  rep.checks.push_back({"solvable.iff_H_normal", rep.solvable == sc.has_value(), ""});
  if (rep.solvable) {
    if (sc) {
      for (const auto& c : sc->checks) rep.checks.push_back(c);
      rep.galois = sc->galois;
      rep.r = sc->r;
    }
    rep.label = rep.galois ? "i-galois" : "i-general";
    return rep;
  }

  const BigInt hu = t.H().order() / w.K.order();
  rep.checks.push_back({"H_meets_U.index_p", hu * p == w.U_image.order(), "|H n U| = " + to_string(hu)});

  if (w.s == 0) {
    rep.n_permutes_with_u = true;
    rep.permute_source = PermuteSource::not_needed;
  } else if (supplied_U) {
    const auto& U = *supplied_U;
    const bool complement = G.contains(U) && U.order() * w.K.order() == G.order() &&
                            intersect(U, w.K).is_trivial();
    rep.checks.push_back({"U.supplied_is_complement", complement, "|U| = " + to_string(U.order())});
    rep.n_permutes_with_u = product_is_G(G, t.N(), U);
    rep.permute_source = PermuteSource::supplied_U;
  } else if (auto comps = complements(G, w.K, complement_budget)) {
    bool any = false;
    for (const auto& U : *comps) any = any || product_is_G(G, t.N(), U);
    rep.n_permutes_with_u = any;
    rep.permute_source = PermuteSource::complement_search;
    rep.notes.push_back(std::to_string(comps->size()) + " complements of K searched");
  } else {
    rep.permute_source = PermuteSource::undetermined;
    rep.notes.push_back("complement search over budget; G = NU not decided");
  }

  const bool flagged = rep.n_permutes_with_u.value_or(false);
  if (!flagged) {
    rep.label = std::string("ii-") + base_letter(uid.tag);
    if (rep.n_permutes_with_u) rep.notes.push_back("N does not permute with U");
    return rep;
  }

  bool admissible = false;
  for (const auto& [aq, aid] : admissible_pairs(p)) admissible = admissible || (aq == q && aid == uid);
  rep.checks.push_back({"flagged.admissible_pair", admissible,
                        "(q, U) = (" + std::to_string(q) + ", " + uid.name() + ")"});
  char letter = base_letter(uid.tag);
  if (uid.tag == SimpleTag::alternating && p == 5) letter = 'f';
  if (uid.tag == SimpleTag::m11) letter = 'g';
  if (uid.tag == SimpleTag::psl) letter = 'h';
  rep.label = std::string("ii-") + letter;
  rep.notes.push_back(w.s == 0 ? "K is trivial, so G = U" : "N permutes with U, so G = NU");
  return rep;
}

}  // namespace towerkit
