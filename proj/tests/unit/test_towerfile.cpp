#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "towers.hpp"
#include "towerkit/towerfile.hpp"

using namespace towerkit;

namespace {

const char* const kMinimal = R"(p = 3
q = 2
degree = 6
G = (1,2,3)(4,5,6), (1,4)(2,5)
H = [ (1,4)(2,5) ; (1,4)(3,6) ]
N = [ (1,4)(2,5) ]
)";

std::string with_line(const std::string& text, const std::string& line) { return text + line + "\n"; }

std::string parse_error(const std::string& text) {
  try {
    parse_tower_file(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("every fixture round-trips through serialize and parse") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    const auto once = parse_tower_file(f.text);
    const auto text = serialize_tower_file(once);
    const auto twice = parse_tower_file(text);
    CHECK(twice == once);
    CHECK(serialize_tower_file(twice) == text);
  }
}

TEST_CASE("fixture fields are read as written") {
  const auto f = testing::fixture_file("tower14_1");
  CHECK(f.p == 7);
  CHECK(f.q == 2);
  CHECK(f.degree == 14);
  REQUIRE(f.G.size() == 2);
  CHECK(f.G[0].text == "a");
  CHECK(f.G[0].value == testing::P(testing::kA14, 14));
  CHECK(f.H.size() == 3);
  CHECK(f.N.size() == 2);
  CHECK_FALSE(f.U.has_value());
  CHECK(f.expect.order == BigInt(56));
  CHECK(f.expect.s == 3u);
  CHECK(f.expect.label == std::string("i-general"));
  CHECK(f.expect.gZ == BigInt(17));
}

TEST_CASE("default vector is G's generators closed by the inverse product") {
  const auto f = parse_tower_file(kMinimal);
  const auto d = to_tower_data(f);
  REQUIRE(d.vector.elliptic.size() == 3);
  CHECK(d.vector.hyperbolic.empty());
  auto prod = d.vector.elliptic[0] * d.vector.elliptic[1] * d.vector.elliptic[2];
  CHECK(prod.is_identity());
  CHECK(PermutationGroup(6, d.vector.elliptic).order() == 12);
  CHECK_THROWS_AS(CoverTower{d}, InvariantError);
}

TEST_CASE("comments, blank lines and forward references are accepted") {
  const std::string text = "# header\n\np = 3\nq = 2\ndegree = 6\nG = x, y  # trailing\n"
                           "x = (1,2,3)(4,5,6)\ny = (1,4)(2,5)\nH = [ y ; (1,4)(3,6) ]\nN = [ y ]\n";
  const auto f = parse_tower_file(text);
  CHECK(f.G[0].value == testing::P("(1,2,3)(4,5,6)", 6));
  CHECK(f.N[0].text == "y");
}

TEST_CASE("errors carry line numbers") {
  CHECK(parse_error(with_line(kMinimal, "G = (1,2")).rfind("line 7:", 0) == 0);
  CHECK(parse_error(with_line(kMinimal, "nonsense")).rfind("line 7:", 0) == 0);
  CHECK(parse_error(with_line(kMinimal, "expect.colour = red")).rfind("line 7:", 0) == 0);
  CHECK(parse_error(with_line(kMinimal, "expect.s = many")).rfind("line 7:", 0) == 0);
  CHECK(parse_error(with_line(kMinimal, "x = (1,2)\nx = (2,3)")).rfind("line 8:", 0) == 0);
  CHECK(parse_error(with_line(kMinimal, "p = 5")).rfind("line 7:", 0) == 0);
  CHECK(parse_error(with_line(kMinimal, "U = [ zz ]")).find("zz") != std::string::npos);
}

TEST_CASE("structural rejections") {
  CHECK(parse_error("p = 3\nq = 2\ndegree = 6\nG = (1,2)\nH = [ () ]\n").find("missing required key") !=
        std::string::npos);
  CHECK_FALSE(parse_error("p = 3\nq = 3\ndegree = 9\nG = (1,2)\nH = [ () ]\nN = [ () ]\n").empty());
  CHECK_FALSE(parse_error("p = 3\nq = 2\ndegree = 7\nG = (1,2)\nH = [ () ]\nN = [ () ]\n").empty());
  CHECK_FALSE(parse_error("p = 3\nq = 2\ndegree = 6\nG = (1,7)\nH = [ () ]\nN = [ () ]\n").empty());
  CHECK_FALSE(parse_error("p = 4\nq = 2\ndegree = 8\nG = (1,2)\nH = [ () ]\nN = [ () ]\n").empty());
  CHECK(parse_error(kMinimal).empty());
}
