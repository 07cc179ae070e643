// Command-line front end: verify, genus, admissible, search, examples.
//
// Exit status: 0 success, 1 a check failed, 2 parse or usage error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "towerkit/fixtures.hpp"
#include "towerkit/search.hpp"

namespace {

using namespace towerkit;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Output {
  bool machine = false;
  std::string report_path;
  std::ostringstream report;

  void emit(const VerifyReport& r) {
    std::cout << (machine ? r.machine() : r.human());
    report << r.machine();
  }

  void flush() const {
    if (report_path.empty()) return;
    std::ofstream out(report_path);
    if (!out) throw ParseError("cannot write report file " + report_path);
    out << report.str();
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_verify(const std::vector<std::string>& files, Output& out, const VerifyOptions& options) {
  bool ok = true;
  for (const auto& path : files) {
    TowerFile f;
    try {
      f = parse_tower_file(read_file(path));
    } catch (const ParseError& e) {
      std::cerr << path << ": " << e.what() << "\n";
      return kUsage;
    }
    if (f.title.empty()) f.title = path;
    const auto r = verify_tower(f, options);
    out.emit(r);
    ok = ok && r.passed();
  }
  out.flush();
  return ok ? kOk : kCheckFailed;
}

int run_examples(Output& out, const VerifyOptions& options) {
  bool ok = true;
  for (const auto& fx : fixtures()) {
    auto f = parse_tower_file(fx.text);
    const auto r = verify_tower(f, options);
    out.emit(r);
    ok = ok && r.passed();
  }
  out.flush();
  std::cout << (ok ? "all fixtures PASS" : "some fixtures FAIL") << "\n";
  return ok ? kOk : kCheckFailed;
}

int run_genus(const std::string& order, std::uint64_t gamma, const std::vector<std::uint64_t>& periods) {
  if (order.empty() || order.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("group order must be a positive integer");
  std::cout << rh_genus(BigInt(order), {gamma, periods}) << "\n";
  return kOk;
}

int run_admissible(std::uint64_t p) {
  std::cout << "candidates for p = " << p << ":\n";
  for (const auto& c : guralnick_candidates(p)) std::cout << "  " << std::left << std::setw(12) << c.name() << c.order << "\n";
  std::cout << "admissible (q, U):\n";
  const auto pairs = admissible_pairs(p);
  if (pairs.empty()) std::cout << "  none\n";
  for (const auto& [q, u] : pairs) std::cout << "  q=" << q << "  " << u.name() << "\n";
  return kOk;
}

int run_search(SearchOptions options, const std::string& a_text, const std::string& out_dir, Output& out) {
  options.a = parse_cycles(a_text, options.p * options.q);
  const auto result = search_towers(options);
  std::cout << "scanned " << result.scanned << " elements of T, " << result.b_candidates << " admissible b, "
            << result.distinct_groups << " distinct groups, " << result.hits.size() << " towers\n";
  bool ok = true;
  std::size_t index = 0;
  for (const auto& hit : result.hits) {
    ok = ok && hit.report.passed();
    if (out.machine) {
      std::cout << hit.report.machine();
    } else {
      const auto& c = hit.report.classification;
      std::cout << std::left << std::setw(10) << to_string(hit.report.order.value_or(0));
      if (c) std::cout << " s=" << c->s << " U=" << std::setw(9) << c->U.name() << " " << std::setw(10) << c->label
                       << " gZ=" << c->genera.gZ;
      std::cout << " " << (hit.report.passed() ? "PASS" : "FAIL") << " b=" << format_cycles(hit.b) << "\n";
    }
    out.report << hit.report.machine();
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      std::ostringstream name;
      name << "tower_" << std::setw(4) << std::setfill('0') << index << ".tower";
      std::ofstream file(std::filesystem::path(out_dir) / name.str());
      file << serialize_tower_file(hit.to_file(options.a, options.p, options.q));
    }
    ++index;
  }
  out.flush();
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monodromy towers of composite covers: verification and classification"};
  app.require_subcommand(1);

  Output out;
  VerifyOptions verify_options;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--machine", out.machine, "Print key=value reports");
    cmd->add_option("--report", out.report_path, "Write key=value reports to this file");
    cmd->add_option("--complement-budget", verify_options.complement_budget,
                    "Largest number of lifts tried when searching complements of K");
  };

  std::vector<std::string> files;
  auto* verify = app.add_subcommand("verify", "Verify and classify tower files");
  verify->add_option("files", files, "Tower files")->required()->check(CLI::ExistingFile);
  add_common(verify);

  std::string order;
  std::uint64_t gamma = 0;
  std::vector<std::uint64_t> periods;
  auto* genus = app.add_subcommand("genus", "Riemann-Hurwitz genus: ORDER GAMMA [PERIODS...]");
  genus->add_option("order", order, "Group order")->required();
  genus->add_option("gamma", gamma, "Genus of the quotient")->required();
  genus->add_option("periods", periods, "Branch periods");

  std::uint64_t adm_p = 0;
  auto* admissible = app.add_subcommand("admissible", "Simple groups of degree p and admissible (q, U)");
  admissible->add_option("p", adm_p, "Odd prime")->required();

  SearchOptions search_options;
  std::string a_text, out_dir;
  auto* search = app.add_subcommand("search", "Enumerate towers <a, b> inside T");
  search->add_option("--p", search_options.p, "Odd prime p")->required();
  search->add_option("--q", search_options.q, "Prime q")->required();
  search->add_option("--a", a_text, "First generator in cycle notation")->required();
  search->add_option("--budget", search_options.budget, "Largest |T| to enumerate")->capture_default_str();
  search->add_option("--threads", search_options.threads, "Worker threads for the scan")->capture_default_str();
  search->add_option("--out-dir", out_dir, "Write each tower found as a file here");
  add_common(search);

  auto* examples = app.add_subcommand("examples", "Verify every built-in fixture");
  add_common(examples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    search_options.verify = verify_options;
    if (*verify) return run_verify(files, out, verify_options);
    if (*genus) return run_genus(order, gamma, periods);
    if (*admissible) return run_admissible(adm_p);
    if (*search) return run_search(search_options, a_text, out_dir, out);
    if (*examples) return run_examples(out, verify_options);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
