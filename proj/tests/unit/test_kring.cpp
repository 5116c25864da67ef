#include <doctest.h>

#include <vector>

#include "kfrob/errors.hpp"
#include "kfrob/generators.hpp"
#include "kfrob/kring.hpp"
#include "kfrob/serialize.hpp"
#include "oracles.hpp"

using namespace kfrob;

namespace {

KElement t_power(const RingDescriptor& ring, std::vector<int> e, Rational c = 1) {
  return KElement::monomial(ring, BasisIndex{std::move(e), 0}, c);
}

KElement line(const RingDescriptor& ring, std::vector<int> a) {
  return line_class(ring, a);
}

// Compares a single-factor element with an oracle polynomial in t.
void check_against(const KElement& x, const oracle::TruncPoly& poly) {
  const int n = x.ring().factors.at(0);
  for (int i = 0; i <= n; ++i) {
    CHECK(x.coefficient(BasisIndex{{i}, 0}) == poly.c[static_cast<std::size_t>(i)]);
  }
}

}  // namespace

TEST_CASE("ring operations on small examples") {
  const auto p1 = RingDescriptor::projective(1);
  const auto t = t_power(p1, {1});
  const auto one = KElement::one(p1);
  CHECK((one + t) * (one - t) == one);
  CHECK((t * t).is_zero());

  const auto p2 = RingDescriptor::projective(2);
  CHECK(t_power(p2, {1}) * t_power(p2, {1}) == t_power(p2, {2}));
  CHECK((t_power(p2, {1}) * t_power(p2, {2})).is_zero());

  const auto c2 = RingDescriptor::point().with_cyclic_order(2);
  const auto sigma = KElement::monomial(c2, BasisIndex{{}, 1}, 1);
  CHECK(sigma * sigma == KElement::one(c2));
}

TEST_CASE("rank examples") {
  const auto p2 = RingDescriptor::projective(2);
  CHECK(rank(KElement::one(p2)) == 1);
  for (int a = -3; a <= 3; ++a) CHECK(rank(line(p2, {a})) == 1);
  CHECK(rank(t_power(p2, {1}, 7)) == 0);
}

TEST_CASE("line classes match the binomial oracle") {
  for (int n = 0; n <= 3; ++n) {
    const auto ring = RingDescriptor::projective(n);
    for (int a = -5; a <= 5; ++a) check_against(line(ring, {a}), oracle::line_power(n, a));
  }
  const auto p1 = RingDescriptor::projective(1);
  CHECK(line(p1, {-2}) == KElement::one(p1) - t_power(p1, {1}, 2));
  // h^2 * h^{-2} = 1 through the oracle as well.
  CHECK(oracle::line_power(1, 2) * oracle::line_power(1, -2) == oracle::TruncPoly::one(1));
}

TEST_CASE("line classes are multiplicative, including products") {
  for (const auto& ring : {RingDescriptor::projective(2), RingDescriptor::product(1, 2)}) {
    const int f = static_cast<int>(ring.factors.size());
    for (int a = -3; a <= 3; ++a) {
      for (int b = -3; b <= 3; ++b) {
        std::vector<int> ea(static_cast<std::size_t>(f), a), eb(static_cast<std::size_t>(f), b),
            es(static_cast<std::size_t>(f), a + b);
        if (f == 2) {
          ea[1] = b;
          eb[1] = a;
          es[1] = a + b;
        }
        CHECK(line(ring, ea) * line(ring, eb) == line(ring, es));
      }
    }
  }
}

TEST_CASE("nilpotency of h^a - 1") {
  for (int n = 0; n <= 3; ++n) {
    const auto ring = RingDescriptor::projective(n);
    for (int a = -5; a <= 5; ++a) {
      const auto x = line(ring, {a}) - KElement::one(ring);
      CHECK(x.pow(static_cast<unsigned long>(n + 1)).is_zero());
    }
  }
}

TEST_CASE("invert examples") {
  const auto pt = RingDescriptor::point().with_inverted_prime(3);
  CHECK(invert(KElement::constant(pt, 3), 3) == KElement::constant(pt, Rational(1, 3)));

  const auto p1 = RingDescriptor::projective(1).with_inverted_prime(2);
  const auto x = KElement::constant(p1, 2) - t_power(p1, {1}, 2);
  CHECK(invert(x, 2) == KElement::constant(p1, Rational(1, 2)) + t_power(p1, {1}, Rational(1, 2)));

  const auto p2 = RingDescriptor::projective(2).with_inverted_prime(2);
  const auto y = KElement::one(p2) + t_power(p2, {1});
  const auto inv = invert(y, 2);
  CHECK(inv == KElement::one(p2) - t_power(p2, {1}) + t_power(p2, {2}));
  CHECK(y * inv == KElement::one(p2));
}

TEST_CASE("invert rejects non-units") {
  const auto p1 = RingDescriptor::projective(1).with_inverted_prime(2);
  CHECK_THROWS_AS(invert(KElement::constant(p1, 3), 2), NonUnitRank);
  CHECK_THROWS_AS(invert(t_power(p1, {1}), 2), NonUnitRank);
  // sigma - 1 is not nilpotent in Z[1/2][sigma]/(sigma^2 - 1) and 2 - 2sigma is a zero divisor.
  const auto eq = RingDescriptor::point().with_cyclic_order(2).with_inverted_prime(2);
  const auto s = KElement::monomial(eq, BasisIndex{{}, 1}, 1);
  CHECK_THROWS_AS(invert(KElement::constant(eq, 3) - s, 2), NonUnitRank);
}

TEST_CASE("descriptor and denominator contracts") {
  const auto p1 = RingDescriptor::projective(1);
  const auto p2 = RingDescriptor::projective(2);
  CHECK_THROWS_AS(KElement::one(p1) + KElement::one(p2), DescriptorMismatch);
  CHECK_THROWS_AS(KElement::constant(p1, Rational(1, 2)), DenominatorContract);
  const auto p1_2 = p1.with_inverted_prime(2);
  CHECK_NOTHROW(KElement::constant(p1_2, Rational(3, 8)));
  CHECK_THROWS_AS(KElement::constant(p1_2, Rational(1, 3)), DenominatorContract);
  CHECK_THROWS_AS(RingDescriptor::projective(1).with_inverted_prime(4).validate(), InvalidArgument);
}

TEST_CASE("ring axioms on seeded random elements") {
  ClassGenerator gen(20240611);
  for (const auto& ring : {RingDescriptor::projective(3), RingDescriptor::product(1, 2),
                           RingDescriptor::projective(1).with_cyclic_order(3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto x = gen.split_class(ring, 3, 3, 3, false).evaluate();
      const auto y = gen.split_class(ring, 3, 3, 3, false).evaluate();
      const auto z = gen.split_class(ring, 3, 3, 3, false).evaluate();
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + (-x) == KElement::zero(ring));
      CHECK(rank(x * y) == rank(x) * rank(y));
      CHECK(rank(x + y) == rank(x) + rank(y));
    }
  }
}

TEST_CASE("adams_substitution is a ring endomorphism") {
  ClassGenerator gen(7);
  const auto ring = RingDescriptor::product(2, 1).with_cyclic_order(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = gen.split_class(ring, 3, 3, 2, false).evaluate();
    const auto y = gen.split_class(ring, 3, 3, 2, false).evaluate();
    for (int k : {2, 3}) {
      CHECK(adams_substitution(k, x * y) == adams_substitution(k, x) * adams_substitution(k, y));
      CHECK(adams_substitution(k, x + y) == adams_substitution(k, x) + adams_substitution(k, y));
    }
  }
}

TEST_CASE("KElement JSON round trip") {
  const auto ring = RingDescriptor::product(1, 2).with_inverted_prime(3);
  const auto x = KElement::constant(ring, Rational(5, 9)) + t_power(ring, {1, 2}, -4) +
                 t_power(ring, {0, 1}, Rational(Integer("123456789012345678901234567890"), 27));
  const auto j = to_json(x);
  CHECK(j.at("factors") == nlohmann::json::array({1, 2}));
  CHECK(j.at("k") == 3);
  CHECK(kelement_from_json(j) == x);
  CHECK(kelement_from_json(nlohmann::json::parse(j.dump())) == x);
}
