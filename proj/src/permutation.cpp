#include "towerkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace towerkit {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b, const char* what) {
  if (a.degree() != b.degree()) {
    throw InvariantError(std::string(what) + ": degree mismatch (" +
                         std::to_string(a.degree()) + " vs " + std::to_string(b.degree()) + ")");
  }
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw InvariantError("image list is not a bijection of {1.." + std::to_string(images.size()) + "}");
    seen[x] = true;
  }
  return Permutation(std::move(images), 0);
}

Permutation Permutation::from_images_1based(std::span<const Point> images) {
  std::vector<Point> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0) throw InvariantError("point 0 in a 1-based image list");
    zero[i] = images[i] - 1;
  }
  return from_images(std::move(zero));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cyc) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cyc) {
    for (Point x : c) {
      if (x < 1 || x > degree)
        throw InvariantError("point " + std::to_string(x) + " out of range 1.." + std::to_string(degree));
      if (used[x - 1]) throw InvariantError("point " + std::to_string(x) + " repeated");
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  }
  return Permutation(std::move(img), 0);
}

bool Permutation::is_identity() const {
  return kernels::active().is_identity(images_.data(), images_.size());
}

Point Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::size_t Permutation::support_size() const {
  return kernels::active().moved_count(images_.data(), images_.size());
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "compose");
  std::vector<Point> out(p.degree());
  kernels::active().compose(p.images_.data(), q.images_.data(), out.data(), out.size());
  return Permutation(std::move(out), 0);
}

bool operator==(const Permutation& a, const Permutation& b) {
  return a.degree() == b.degree() &&
         kernels::active().equal(a.images_.data(), b.images_.data(), a.degree());
}

Permutation identity(std::size_t degree) { return Permutation(degree); }

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

Permutation inverse(const Permutation& p) {
  std::vector<Point> out(p.degree());
  kernels::active().invert(p.images().data(), out.data(), out.size());
  return Permutation::from_images(std::move(out));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  require_same_degree(p, g, "conjugate");
  // g^-1 p g maps x^g to (x^p)^g.
  std::vector<Point> out(p.degree());
  for (Point x = 0; x < p.degree(); ++x) out[g[x]] = g[p[x]];
  return Permutation::from_images(std::move(out));
}

Permutation power(const Permutation& p, std::int64_t k) {
  Permutation base = k < 0 ? inverse(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Permutation result(p.degree());
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Permutation commutator(const Permutation& x, const Permutation& y) {
  return inverse(x) * inverse(y) * x * y;
}

BigInt order_of(const Permutation& p) {
  BigInt result = 1;
  for (const auto& [len, mult] : cycle_type(p)) {
    (void)mult;
    const BigInt l = len;
    result = result / boost::multiprecision::gcd(result, l) * l;
  }
  return result;
}

std::vector<std::vector<Point>> cycles(const Permutation& p) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) continue;
    std::vector<Point> c;
    for (Point x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      c.push_back(x + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

CycleType cycle_type(const Permutation& p) {
  CycleType ct;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    ++ct[len];
  }
  return ct;
}

bool is_even(const Permutation& p) {
  std::size_t transpositions = 0;
  for (const auto& [len, mult] : cycle_type(p)) transpositions += (len - 1) * mult;
  return transpositions % 2 == 0;
}

std::string format_cycle_type(const CycleType& ct) {
  std::ostringstream out;
  bool first = true;
  for (auto it = ct.rbegin(); it != ct.rend(); ++it) {
    if (!first) out << ' ';
    first = false;
    out << it->first << '^' << it->second;
  }
  return out.str();
}

namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

  Permutation parse() {
    skip_ws();
    if (at_end()) fail("empty permutation (use \"()\" for the identity)");
    std::vector<std::vector<Point>> result;
    bool saw_identity = false;
    while (!at_end()) {
      expect('(');
      skip_ws();
      if (peek() == ')') {
        ++pos_;
        if (saw_identity || !result.empty()) fail("\"()\" must stand alone");
        saw_identity = true;
      } else {
        if (saw_identity) fail("\"()\" must stand alone");
        result.push_back(parse_cycle_body());
      }
      skip_ws();
    }
    try {
      return Permutation::from_cycles(degree_, result);
    } catch (const InvariantError& e) {
      fail(e.what());
    }
  }

 private:
  std::vector<Point> parse_cycle_body() {
    std::vector<Point> c{parse_int()};
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      c.push_back(parse_int());
      skip_ws();
    }
    expect(')');
    if (c.size() < 2) fail("a cycle needs at least two points");
    return c;
  }

  Point parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 0xFFFFFFFFull) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<Point>(v);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cycle notation \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  return CycleParser(text, degree).parse();
}

std::string format_cycles(const Permutation& p) {
  const auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace towerkit

std::size_t std::hash<towerkit::Permutation>::operator()(
    const towerkit::Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}
