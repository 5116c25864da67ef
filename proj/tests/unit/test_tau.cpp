#include <doctest.h>

#include "kfrob/generators.hpp"
#include "kfrob/lambda_ops.hpp"
#include "kfrob/tau.hpp"
#include "oracles.hpp"

using namespace kfrob;

TEST_CASE("tau basis examples") {
  const auto b = tau_basis(2, 2);
  CHECK(b.monomials == std::vector<ExponentVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(b.degrees == std::vector<int>{0, 1, 1, 2});
  CHECK(tau_basis(1, 5).monomials.size() == 5);
  CHECK(tau_basis(0, 3).monomials.size() == 1);
  CHECK(tau_graded_dims(2, 3) == std::vector<long>{1, 2, 3, 2, 1});
}

TEST_CASE("tau basis counts and graded dimensions match enumeration") {
  for (int p : {2, 3, 5}) {
    for (int r = 0; r <= 5; ++r) {
      CHECK(static_cast<long>(tau_basis(r, p).monomials.size()) == ipow(p, static_cast<unsigned long>(r)));
      CHECK(tau_graded_dims(r, p) == oracle::box_degree_counts(r, p));
    }
  }
}

TEST_CASE("tau multiplication truncates p-th powers") {
  CHECK(tau_multiply({1, 0}, {0, 1}, 2) == ExponentVector{1, 1});
  CHECK_FALSE(tau_multiply({1, 0}, {1, 0}, 2).has_value());
  CHECK(tau_multiply({1, 2}, {1, 0}, 3) == ExponentVector{2, 2});
  CHECK_FALSE(tau_multiply({2}, {1}, 3).has_value());

  const TauAlgebra alg(2, 3);
  const auto e1 = alg.generator(0);
  CHECK(alg.power(e1, 3).empty());
  // (e1 + e2)^3 = e1^3 + e2^3 = 0 in characteristic 3.
  CHECK(alg.power(alg.add(e1, alg.generator(1)), 3).empty());
  CHECK_FALSE(alg.power(alg.add(e1, alg.generator(1)), 2).empty());
}

TEST_CASE("tau of a direct sum is the tensor product") {
  for (int p : {2, 3}) {
    for (int r1 = 0; r1 <= 2; ++r1) {
      for (int r2 = 0; r2 <= 2; ++r2) {
        const auto report = tau_sum_isomorphism_check(r1, r2, p);
        INFO(report.to_json().dump());
        CHECK(report.passed());
      }
    }
  }
}

TEST_CASE("tau k0 class examples") {
  const auto p1 = RingDescriptor::projective(1);
  // tau(h) for p = 2 is O + h = 2 + t.
  CHECK(tau_k0_class(SplitClass::line(p1, {1}), 2) ==
        KElement::constant(p1, 2) + KElement::monomial(p1, BasisIndex{{1}, 0}, 1));
  const auto pt = RingDescriptor::point();
  CHECK(tau_k0_class(SplitClass::trivial(pt, 3), 3) == KElement::constant(pt, 27));
}

TEST_CASE("tau k0 class equals theta^p on effective classes") {
  ClassGenerator gen(1729);
  for (const auto& ring : {RingDescriptor::projective(2), RingDescriptor::product(1, 1)}) {
    for (int p : {2, 3}) {
      for (int trial = 0; trial < 8; ++trial) {
        const auto e = gen.effective_of_rank(ring, gen.uniform(1, 3), 3);
        CHECK(tau_k0_class(e, p) == theta(p, e));
      }
    }
  }
}
