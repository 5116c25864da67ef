#include "kfrob/lambda_ops.hpp"

#include <algorithm>

#include "kfrob/errors.hpp"

namespace kfrob {

namespace {

std::vector<int> scaled(const std::vector<int>& a, int k) {
  std::vector<int> out(a);
  for (int& e : out) e *= k;
  return out;
}

// 1 + L + ... + L^{k-1}
KElement bott_line(const RingDescriptor& ring, const LineIndex& line, int k) {
  KElement out(ring);
  for (int j = 0; j < k; ++j) {
    out += line_class(ring, scaled(line.exponents, j), j * line.chi);
  }
  return out;
}

}  // namespace

KElement adams(int k, const SplitClass& x) {
  if (k < 1) throw InvalidArgument("adams degree must be >= 1");
  const auto& ring = x.ring();
  KElement out(ring);
  for (const auto& [line, m] : x.terms()) {
    out += line_class(ring, scaled(line.exponents, k), k * line.chi) *
           Rational(m);
  }
  return out;
}

KElement theta(int k, const SplitClass& x) {
  if (k < 2) throw InvalidArgument("theta degree must be >= 2");
  const auto& ring = x.ring();
  if (!x.effective() && ring.inverted_prime != k) {
    throw InvalidArgument("theta^" + std::to_string(k) +
                          " of a virtual class needs coefficients in Z[1/" +
                          std::to_string(k) + "], ring is " + ring.describe());
  }
  KElement out = KElement::one(ring);
  for (const auto& [line, m] : x.terms()) {
    const KElement base = bott_line(ring, line, k);
    if (m > 0) {
      out *= base.pow(static_cast<unsigned long>(m));
    } else {
      out *= invert(base, k).pow(static_cast<unsigned long>(-m));
    }
  }
  return out;
}

KElement theta_inverse(int k, const SplitClass& x) {
  if (x.ring().inverted_prime != k) {
    throw InvalidArgument("theta_inverse needs coefficients in Z[1/" +
                          std::to_string(k) + "]");
  }
  return invert(theta(k, x), k);
}

std::vector<KElement> lambda_series(const SplitClass& x, int max_degree) {
  if (max_degree < 0) throw InvalidArgument("negative lambda degree");
  const auto& ring = x.ring();
  const auto degree = static_cast<std::size_t>(max_degree);
  std::vector<KElement> out(degree + 1, KElement::zero(ring));
  out[0] = KElement::one(ring);
  for (const auto& [line, m] : x.terms()) {
    // (1 + L u)^m = sum_j C(m, j) L^j u^j, valid for negative m as a series.
    const KElement l = line_class(ring, line.exponents, line.chi);
    std::vector<KElement> factor;
    KElement l_power = KElement::one(ring);
    for (std::size_t j = 0; j <= degree; ++j) {
      factor.push_back(l_power * Rational(binomial(m, static_cast<long>(j))));
      l_power *= l;
    }
    std::vector<KElement> next(degree + 1, KElement::zero(ring));
    for (std::size_t a = 0; a <= degree; ++a) {
      if (out[a].is_zero()) continue;
      for (std::size_t b = 0; a + b <= degree; ++b) {
        if (!factor[b].is_zero()) next[a + b] += out[a] * factor[b];
      }
    }
    out = std::move(next);
  }
  return out;
}

KElement lambda_op(int i, const SplitClass& x) {
  if (i < 0) throw InvalidArgument("negative lambda degree");
  return lambda_series(x, i)[static_cast<std::size_t>(i)];
}

KElement lambda_minus_one(const SplitClass& x) {
  if (!x.effective()) {
    throw InvalidArgument("lambda_{-1} needs an effective presentation, got " +
                          x.to_string());
  }
  const auto& ring = x.ring();
  KElement out = KElement::one(ring);
  for (const auto& [line, m] : x.terms()) {
    const KElement factor =
        KElement::one(ring) - line_class(ring, line.exponents, line.chi);
    out *= factor.pow(static_cast<unsigned long>(m));
  }
  return out;
}

KElement apply(const OperationTag& tag, const SplitClass& x) {
  switch (tag.kind) {
    case OperationKind::adams:
      return adams(tag.degree, x);
    case OperationKind::theta:
      return theta(tag.degree, x);
    case OperationKind::lambda_i:
      return lambda_op(tag.degree, x);
    case OperationKind::lambda_minus_one:
      return lambda_minus_one(x);
  }
  throw InvalidArgument("unknown operation");
}

}  // namespace kfrob
