#include "towerkit/pipeline.hpp"

#include <iomanip>
#include <sstream>

namespace towerkit {

namespace {

void append(CheckList& out, const CheckList& more) { out.insert(out.end(), more.begin(), more.end()); }

template <typename T, typename U>
void expect_eq(CheckList& out, const std::string& name, const std::optional<T>& want, const U& got) {
  if (!want) return;
  std::ostringstream d;
  d << "expected " << *want << ", got " << got;
  out.push_back({"expect." + name, *want == got, d.str()});
}

}  // namespace

VerifyReport verify_tower(const TowerFile& file, const VerifyOptions& options) {
  std::optional<std::vector<Permutation>> U;
  if (file.U) U = values(*file.U);
  return verify_tower(to_tower_data(file), U, file.expect, file.title, options);
}

VerifyReport verify_tower(const TowerData& data, const std::optional<std::vector<Permutation>>& U,
                          const Expectations& expect, std::string title, const VerifyOptions& options) {
  VerifyReport rep;
  rep.title = std::move(title);
  auto& checks = rep.checks;
  auto fail = [&](const std::string& name, const std::exception& e) {
    checks.push_back({name, false, e.what()});
    return rep;
  };

  append(checks, CoverTower::assess(data));
  if (!rep.passed()) return rep;
  const CoverTower tower(data);
  rep.order = tower.G().order();

  std::optional<Relabeled> relabeled;
  try {
    const auto st = find_sigma_tau(tower);
    relabeled.emplace(relabel_to_blocks(tower, st));
  } catch (const InvariantError& e) {
    return fail("relabel.blocks", e);
  }
  checks.push_back({"relabel.blocks", true, ""});
  rep.relabeled = true;
  rep.sigma = relabeled->sigma;
  rep.tau = relabeled->tau;
  rep.relabeling = relabeled->relabeling;
  const auto& t = relabeled->tower;

  const auto w = decompose(*relabeled);
  append(checks, w.checks);
  checks.push_back({"etale.K_meets_no_c_j", check_etale_condition(t, w.K), ""});
  if (!rep.passed()) return rep;

  SimpleGroupId uid;
  try {
    uid = identify_U(w, t.p());
  } catch (const InvariantError& e) {
    return fail("U.identified", e);
  }
  checks.push_back({"U.identified", true, uid.name()});

  std::optional<PermutationGroup> supplied;
  if (U) {
    const PermutationGroup given(tower.degree(), *U);
    const bool inside = tower.G().contains(given);
    checks.push_back({"U.subgroup_of_G", inside, "|U| = " + to_string(given.order())});
    if (!inside) return rep;
    std::vector<Permutation> moved;
    for (const auto& x : *U) moved.push_back(relabeled->image(x));
    supplied.emplace(t.degree(), moved);
  }

  try {
    rep.classification = case_label(t, w, uid, supplied, options.complement_budget);
  } catch (const InvariantError& e) {
    return fail("classification", e);
  }
  const auto& c = *rep.classification;
  append(checks, c.checks);

  expect_eq(checks, "order", expect.order, *rep.order);
  expect_eq(checks, "s", expect.s, c.s);
  expect_eq(checks, "U", expect.U, c.U.name());
  expect_eq(checks, "gX", expect.gX, c.genera.gX);
  expect_eq(checks, "gY", expect.gY, c.genera.gY);
  expect_eq(checks, "gZ", expect.gZ, c.genera.gZ);
  expect_eq(checks, "label", expect.label, c.label);
  expect_eq(checks, "galois", expect.galois, c.galois);
  return rep;
}

std::string VerifyReport::machine() const {
  std::ostringstream out;
  out << "title=" << title << "\n";
  for (const auto& c : checks) out << "check." << c.name << "=" << (c.passed ? "pass" : "fail") << "\n";
  if (order) out << "result.order=" << *order << "\n";
  if (sigma) out << "result.sigma=" << format_cycles(*sigma) << "\n";
  if (tau) out << "result.tau=" << format_cycles(*tau) << "\n";
  if (relabeled) out << "result.relabeling=" << (relabeling ? format_cycles(*relabeling) : "none") << "\n";
  if (classification) {
    const auto& c = *classification;
    out << "result.s=" << c.s << "\n";
    out << "result.U=" << c.U.name() << "\n";
    out << "result.label=" << c.label << "\n";
    out << "result.solvable=" << (c.solvable ? "true" : "false") << "\n";
    out << "result.galois=" << (c.galois ? "true" : "false") << "\n";
    if (c.r) out << "result.r=" << *c.r << "\n";
    out << "result.H_meets_U=" << c.h_meets_u << "\n";
    out << "result.N_permutes_with_U="
        << (c.n_permutes_with_u ? (*c.n_permutes_with_u ? "true" : "false") : "undetermined") << "\n";
    out << "result.permute_source=" << permute_source_name(c.permute_source) << "\n";
    out << "result.gX=" << c.genera.gX << "\nresult.gY=" << c.genera.gY << "\nresult.gZ=" << c.genera.gZ << "\n";
    for (std::size_t i = 0; i < c.notes.size(); ++i) out << "note." << i << "=" << c.notes[i] << "\n";
  }
  out << "status=" << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string VerifyReport::human() const {
  std::ostringstream out;
  out << (title.empty() ? "tower" : title) << "\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    out << "  " << (c.passed ? "ok  " : "FAIL") << "  ";
    if (c.detail.empty()) out << c.name << "\n";
    else out << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << c.detail << "\n";
  }
  if (classification) {
    const auto& c = *classification;
    out << "  |G| = " << *order << ", s = " << c.s << ", U = " << c.U.name() << ", case " << c.label
        << ", (gX, gY, gZ) = (" << c.genera.gX << ", " << c.genera.gY << ", " << c.genera.gZ << ")\n";
    for (const auto& n : c.notes) out << "  note: " << n << "\n";
  }
  out << "  " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace towerkit
