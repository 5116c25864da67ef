#include <doctest.h>

#include <random>

#include "kfrob/errors.hpp"
#include "kfrob/groebner.hpp"

using namespace kfrob;

namespace {

FpPoly parse(const std::string& text, int p, std::vector<std::string> names) {
  return parse_fp_poly(text, p, names);
}

}  // namespace

TEST_CASE("fp polynomial basics") {
  std::vector<std::string> names;
  const auto f = parse_fp_poly("y^2 - x^3 - x", 3, names);
  CHECK(names == std::vector<std::string>{"x", "y"});
  CHECK(f.leading_monomial() == Monomial{3, 0});
  CHECK(f.leading_coefficient() == 2);
  CHECK(f.degree() == 3);
  // d/dx x^3 = 3x^2 = 0 over F_3.
  CHECK(parse("x^3", 3, {"x"}).derivative(0).is_zero());
  CHECK(parse("x + 1", 2, {"x"}).pow(2) == parse("x^2 + 1", 2, {"x"}));
  const std::vector<long> pt{2, 1};
  CHECK(f.evaluate(pt) == 0);
  CHECK(inverse_mod(2, 5) == 3);
  CHECK_THROWS_AS(parse_fp_poly("x^", 3, names), ParseError);
}

TEST_CASE("degrevlex order") {
  DegRevLexGreater gt;
  CHECK(gt({2, 0}, {1, 0}));
  CHECK(gt({1, 1, 0}, {1, 0, 1}));  // x y > x z
  CHECK(gt({0, 2, 0}, {1, 0, 1}));  // y^2 > x z in degrevlex
  CHECK_FALSE(gt({1, 0}, {1, 0}));
}

TEST_CASE("groebner basis of a principal ideal is the monic generator") {
  const auto f = parse("2*x^2 + x", 3, {"x"});
  const auto g = groebner_basis({f});
  REQUIRE(g.size() == 1);
  CHECK(g[0] == f.monic());
}

TEST_CASE("x^2 - y, y^2 - x over F_3") {
  const std::vector<std::string> xy{"x", "y"};
  const auto g = groebner_basis({parse("x^2 - y", 3, xy), parse("y^2 - x", 3, xy)});
  CHECK(in_ideal(parse("x^4 - x", 3, xy), g));
  CHECK_FALSE(in_ideal(parse("x - 1", 3, xy), g));
  // x^4 = x, so the variety is the 4 points with x^4 = x and y = x^2.
  CHECK(quotient_dimension(g, 2) == 4);
  CHECK_FALSE(quotient_dimension(groebner_basis({parse("x^2 - y", 3, xy)}), 2).has_value());
}

TEST_CASE("normal form of ideal elements is zero") {
  const std::vector<std::string> xyz{"x", "y", "z"};
  const std::vector<FpPoly> gens{parse("x^2 - y*z", 5, xyz), parse("y^2 - x*z + 1", 5, xyz),
                                 parse("x*y - z^2", 5, xyz)};
  const auto g = groebner_basis(gens);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    FpPoly combo(5, 3);
    for (const auto& f : gens) {
      FpPoly mult(5, 3);
      for (int k = 0; k < 3; ++k) {
        mult.add_term({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)},
                      static_cast<long>(rng() % 5));
      }
      combo += mult * f;
    }
    CHECK(normal_form(combo, g).is_zero());
  }
}

TEST_CASE("budget exhaustion is reported, not silently truncated") {
  const std::vector<std::string> xyz{"x", "y", "z"};
  const std::vector<FpPoly> gens{parse("x^3 - y*z + 1", 7, xyz), parse("y^3 - x*z", 7, xyz),
                                 parse("z^3 - x*y + 2", 7, xyz)};
  CHECK_THROWS_AS(groebner_basis(gens, GroebnerBudget{2, 400}), BudgetExceeded);
}
