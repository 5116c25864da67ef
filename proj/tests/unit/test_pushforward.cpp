#include <doctest.h>

#include "kfrob/errors.hpp"
#include "kfrob/generators.hpp"
#include "kfrob/lambda_ops.hpp"
#include "kfrob/pushforward.hpp"
#include "oracles.hpp"

using namespace kfrob;

TEST_CASE("chi matches the Cech monomial count") {
  for (int n = 1; n <= 3; ++n) {
    for (long a = -6; a <= 6; ++a) {
      INFO("n = " << n << ", a = " << a);
      CHECK(chi(n, a) == oracle::chi_cech(n, a));
    }
  }
  CHECK(chi(1, 3) == 4);
  CHECK(chi(2, -3) == 1);
  CHECK(chi(2, -1) == 0);
  CHECK(chi(3, -5) == -4);
}

TEST_CASE("pushforward of lines is chi, and differences obey Pascal") {
  for (int n = 1; n <= 3; ++n) {
    const auto ring = RingDescriptor::projective(n);
    for (int a = -6; a <= 6; ++a) {
      const std::vector<int> e{a};
      const std::vector<int> e1{a + 1};
      CHECK(pushforward_point(n, line_class(ring, e)) == Rational(oracle::chi_cech(n, a)));
      const auto diff = line_class(ring, e1) - line_class(ring, e);
      CHECK(pushforward_point(n, diff) == Rational(oracle::chi_cech(n - 1, a + 1)));
    }
  }
}

TEST_CASE("pushforward respects relation-perturbed presentations") {
  ClassGenerator gen(55);
  for (int n = 1; n <= 3; ++n) {
    const auto ring = RingDescriptor::projective(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = gen.split_class(ring, 4, 4, 3, false);
      const auto y = gen.perturb_by_relation(x, 3);
      Rational by_lines = 0;
      for (const auto& [l, m] : y.terms()) by_lines += Rational(m * oracle::chi_cech(n, l.exponents[0]));
      CHECK(pushforward_point(n, x.evaluate()) == by_lines);
    }
  }
}

TEST_CASE("relative pushforward and projection formula") {
  const auto p11 = RingDescriptor::product(1, 1);
  const std::vector<int> e{1, 1};
  // f_*(h1 h2) = h1 * chi(1, 1) = 2 h1.
  const std::vector<int> h1{1};
  CHECK(pushforward_relative(1, 1, line_class(p11, e)) ==
        line_class(RingDescriptor::projective(1), h1) * Rational(2));

  ClassGenerator gen(808);
  for (int m = 1; m <= 2; ++m) {
    for (int n = 1; n <= 2; ++n) {
      const auto total = RingDescriptor::product(m, n);
      const auto base = RingDescriptor::projective(m);
      for (int trial = 0; trial < 15; ++trial) {
        const auto x = gen.split_class(total, 3, 3, 3, false).evaluate();
        const auto y = gen.split_class(base, 3, 3, 3, false).evaluate();
        CHECK(pushforward_relative(m, n, x * pullback_relative(n, y)) ==
              pushforward_relative(m, n, x) * y);
      }
    }
  }
  CHECK_THROWS_AS(pushforward_relative(1, 2, line_class(p11, e)), DescriptorMismatch);
}

TEST_CASE("omega classes") {
  const auto p1 = RingDescriptor::projective(1);
  CHECK(omega_class(1, p1).evaluate() == line_class(p1, std::vector<int>{-2}));
  CHECK(omega_class(2, RingDescriptor::projective(2)).rank() == 2);
  CHECK(omega_class_relative(1, 2, RingDescriptor::product(1, 2)).rank() == 2);
}

TEST_CASE("ARR worked anchors") {
  const auto p1 = RingDescriptor::projective(1);
  const auto trivial = verify_arr(1, 2, SplitClass::trivial(p1, 1));
  CHECK(trivial.passed());
  CHECK(trivial.lhs.dump() == trivial.rhs.dump());

  const auto h = verify_arr(1, 2, SplitClass::line(p1, {1}));
  CHECK(h.passed());
  CHECK(h.trace.dump().find("2") != std::string::npos);

  CHECK(verify_arr(2, 2, SplitClass::trivial(RingDescriptor::projective(2), 1)).passed());
  // theta^2(Omega_{P^2})^{-1} = 1/4 + 3/8 t.
  const auto p2 = RingDescriptor::projective(2).with_inverted_prime(2);
  CHECK(invert(theta(2, omega_class(2, p2)), 2) ==
        KElement::constant(p2, Rational(1, 4)) + KElement::monomial(p2, BasisIndex{{1}, 0}, Rational(3, 8)));
}

TEST_CASE("ARR over a point, lines and random classes") {
  ClassGenerator gen(12345);
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      const auto ring = RingDescriptor::projective(n);
      for (int a = -3; a <= 3; ++a) CHECK(verify_arr(n, p, SplitClass::line(ring, {a})).passed());
      for (int trial = 0; trial < 10; ++trial) {
        CHECK(verify_arr(n, p, gen.split_class(ring, 4, 3, 3, false)).passed());
      }
    }
  }
  CHECK_THROWS_AS(verify_arr(1, 4, SplitClass::trivial(RingDescriptor::projective(1), 1)), InvalidArgument);
}

TEST_CASE("ARR over P^m") {
  for (int p : {2, 3}) {
    const auto ring = RingDescriptor::product(1, 1);
    for (int a = -2; a <= 2; ++a) {
      for (int b = -2; b <= 2; ++b) {
        CHECK(verify_arr_relative(1, 1, p, SplitClass::line(ring, {a, b})).passed());
      }
    }
  }
}
