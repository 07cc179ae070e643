#include "towerkit/towerfile.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace towerkit {

namespace {

const std::set<std::string, std::less<>> kReserved{"title", "p", "q", "degree", "G", "H", "N", "U", "vector"};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_uint(std::size_t line, const std::string& v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) fail(line, "expected a non-negative integer, got '" + v + "'");
  return out;
}

BigInt parse_big(std::size_t line, const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    fail(line, "expected a non-negative integer, got '" + v + "'");
  return BigInt(v);
}

// Splits on `sep` outside parentheses.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

struct RawLine {
  std::size_t line;
  std::string value;
};

class Resolver {
 public:
  Resolver(const std::map<std::string, RawLine>& names, std::size_t degree) : names_(names), degree_(degree) {}

  Permutation resolve(std::size_t line, const std::string& text) {
    if (is_identifier(text)) {
      auto it = names_.find(text);
      if (it == names_.end()) fail(line, "undefined permutation name '" + text + "'");
      if (auto c = cache_.find(text); c != cache_.end()) return c->second;
      const auto p = parse_cycles_at(it->second.line, it->second.value);
      cache_.emplace(text, p);
      return p;
    }
    return parse_cycles_at(line, text);
  }

  std::vector<PermRef> resolve_list(std::size_t line, const std::vector<std::string>& items) {
    std::vector<PermRef> out;
    for (const auto& item : items) {
      if (item.empty()) fail(line, "empty list entry");
      out.push_back({item, resolve(line, item)});
    }
    return out;
  }

 private:
  Permutation parse_cycles_at(std::size_t line, const std::string& text) {
    try {
      return parse_cycles(text, degree_);
    } catch (const ParseError& e) {
      fail(line, e.what());
    }
  }

  const std::map<std::string, RawLine>& names_;
  std::size_t degree_;
  std::map<std::string, Permutation> cache_;
};

std::vector<std::string> bracket_items(std::size_t line, const std::string& v) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') fail(line, "expected a list in [ ... ; ... ]");
  const auto inner = trim(std::string_view(v).substr(1, v.size() - 2));
  if (inner.empty()) return {};
  return split_top(inner, ';');
}

}  // namespace

TowerFile parse_tower_file(std::string_view text) {
  std::map<std::string, RawLine> keys;
  std::map<std::string, RawLine> names;
  std::vector<std::string> name_order;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto body = trim(raw.substr(0, raw.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    const auto key = trim(std::string_view(body).substr(0, eq));
    const auto value = trim(std::string_view(body).substr(eq + 1));
    if (value.empty()) fail(line, "empty value for '" + key + "'");
    const bool expect_key = key.rfind("expect.", 0) == 0;
    if (!expect_key && !kReserved.count(key) && !is_identifier(key)) fail(line, "invalid key '" + key + "'");
    if (keys.count(key) || names.count(key)) fail(line, "duplicate key '" + key + "'");
    if (expect_key || kReserved.count(key)) {
      keys.emplace(key, RawLine{line, value});
    } else {
      names.emplace(key, RawLine{line, value});
      name_order.push_back(key);
    }
  }

  auto need = [&](const char* key) -> const RawLine& {
    auto it = keys.find(key);
    if (it == keys.end()) throw ParseError(std::string("missing required key '") + key + "'");
    return it->second;
  };

  TowerFile f;
  if (auto it = keys.find("title"); it != keys.end()) f.title = it->second.value;
  const auto& pl = need("p");
  const auto& ql = need("q");
  const auto& dl = need("degree");
  f.p = parse_uint(pl.line, pl.value);
  f.q = parse_uint(ql.line, ql.value);
  f.degree = parse_uint(dl.line, dl.value);
  if (!is_prime(f.p) || f.p % 2 == 0) fail(pl.line, "p must be an odd prime");
  if (!is_prime(f.q)) fail(ql.line, "q must be prime");
  if (f.p == f.q) fail(ql.line, "p and q must be different primes");
  if (f.degree != f.p * f.q) fail(dl.line, "degree must equal p*q = " + std::to_string(f.p * f.q));

  Resolver resolver(names, f.degree);
  for (const auto& name : name_order) f.named.emplace_back(name, resolver.resolve(names.at(name).line, name));

  const auto& gl = need("G");
  const auto g_items = gl.value.front() == '[' ? bracket_items(gl.line, gl.value) : split_top(gl.value, ',');
  f.G = resolver.resolve_list(gl.line, g_items);
  const auto& hl = need("H");
  f.H = resolver.resolve_list(hl.line, bracket_items(hl.line, hl.value));
  const auto& nl = need("N");
  f.N = resolver.resolve_list(nl.line, bracket_items(nl.line, nl.value));
  if (auto it = keys.find("U"); it != keys.end())
    f.U = resolver.resolve_list(it->second.line, bracket_items(it->second.line, it->second.value));
  if (auto it = keys.find("vector"); it != keys.end())
    f.vector = resolver.resolve_list(it->second.line, bracket_items(it->second.line, it->second.value));

  for (const auto& [key, rl] : keys) {
    if (key.rfind("expect.", 0) != 0) continue;
    const auto field = key.substr(7);
    if (field == "order") f.expect.order = parse_big(rl.line, rl.value);
    else if (field == "s") f.expect.s = static_cast<unsigned>(parse_uint(rl.line, rl.value));
    else if (field == "U") f.expect.U = rl.value;
    else if (field == "gX") f.expect.gX = parse_big(rl.line, rl.value);
    else if (field == "gY") f.expect.gY = parse_big(rl.line, rl.value);
    else if (field == "gZ") f.expect.gZ = parse_big(rl.line, rl.value);
    else if (field == "label") f.expect.label = rl.value;
    else if (field == "galois") {
      if (rl.value != "true" && rl.value != "false") fail(rl.line, "expect.galois must be true or false");
      f.expect.galois = rl.value == "true";
    } else {
      fail(rl.line, "unknown expectation '" + key + "'");
    }
  }
  return f;
}

std::string serialize_tower_file(const TowerFile& f) {
  std::ostringstream out;
  auto list = [](const std::vector<PermRef>& refs) {
    std::string s = "[ ";
    for (std::size_t i = 0; i < refs.size(); ++i) s += (i ? " ; " : "") + refs[i].text;
    return s + " ]";
  };
  if (!f.title.empty()) out << "title = " << f.title << "\n";
  out << "p = " << f.p << "\nq = " << f.q << "\ndegree = " << f.degree << "\n";
  for (const auto& [name, perm] : f.named) out << name << " = " << format_cycles(perm) << "\n";
  out << "G = ";
  for (std::size_t i = 0; i < f.G.size(); ++i) out << (i ? ", " : "") << f.G[i].text;
  out << "\nH = " << list(f.H) << "\nN = " << list(f.N) << "\n";
  if (f.U) out << "U = " << list(*f.U) << "\n";
  if (f.vector) out << "vector = " << list(*f.vector) << "\n";
  const auto& e = f.expect;
  if (e.order) out << "expect.order = " << *e.order << "\n";
  if (e.s) out << "expect.s = " << *e.s << "\n";
  if (e.U) out << "expect.U = " << *e.U << "\n";
  if (e.gX) out << "expect.gX = " << *e.gX << "\n";
  if (e.gY) out << "expect.gY = " << *e.gY << "\n";
  if (e.gZ) out << "expect.gZ = " << *e.gZ << "\n";
  if (e.label) out << "expect.label = " << *e.label << "\n";
  if (e.galois) out << "expect.galois = " << (*e.galois ? "true" : "false") << "\n";
  return out.str();
}

std::vector<Permutation> values(const std::vector<PermRef>& refs) {
  std::vector<Permutation> out;
  for (const auto& r : refs) out.push_back(r.value);
  return out;
}

TowerData to_tower_data(const TowerFile& f) {
  TowerData d;
  d.p = f.p;
  d.q = f.q;
  const auto n = static_cast<std::size_t>(f.degree);
  d.G = PermutationGroup(n, values(f.G));
  d.H = PermutationGroup(n, values(f.H));
  d.N = PermutationGroup(n, values(f.N));
  if (f.vector) {
    d.vector.elliptic = values(*f.vector);
  } else {
    d.vector.elliptic = values(f.G);
    Permutation product = identity(n);
    for (const auto& x : d.vector.elliptic) product = product * x;
    d.vector.elliptic.push_back(inverse(product));
  }
  return d;
}

}  // namespace towerkit
