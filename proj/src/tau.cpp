#include "kfrob/tau.hpp"

#include <numeric>
#include <set>

#include "kfrob/errors.hpp"
#include "kfrob/serialize.hpp"

namespace kfrob {

namespace {

void require_prime(int p) {
  if (!is_prime(p)) {
    throw InvalidArgument("expected a prime, got " + std::to_string(p));
  }
}

int degree(const ExponentVector& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

}  // namespace

TauBasis tau_basis(int r, int p) {
  require_prime(p);
  if (r < 0) throw InvalidArgument("rank must be >= 0");
  TauBasis basis{r, p, {}, {}};
  ExponentVector v(static_cast<std::size_t>(r), 0);
  while (true) {
    basis.monomials.push_back(v);
    basis.degrees.push_back(degree(v));
    // odometer, last coordinate fastest
    int j = r - 1;
    while (j >= 0 && v[static_cast<std::size_t>(j)] == p - 1) {
      v[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++v[static_cast<std::size_t>(j)];
  }
  return basis;
}

std::optional<ExponentVector> tau_multiply(const ExponentVector& a,
                                           const ExponentVector& b, int p) {
  if (a.size() != b.size()) throw InvalidArgument("monomial rank mismatch");
  ExponentVector out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < 0 || a[j] >= p || b[j] < 0 || b[j] >= p) {
      throw InvalidArgument("monomial exponent out of range");
    }
    out[j] = a[j] + b[j];
    if (out[j] >= p) return std::nullopt;
  }
  return out;
}

std::vector<long> tau_graded_dims(int r, int p) {
  const TauBasis basis = tau_basis(r, p);
  std::vector<long> dims(static_cast<std::size_t>(r * (p - 1) + 1), 0);
  for (int d : basis.degrees) ++dims[static_cast<std::size_t>(d)];
  return dims;
}

TauAlgebra::TauAlgebra(int r, int p) : basis_(tau_basis(r, p)) {}

TauAlgebra::Element TauAlgebra::generator(int i) const {
  if (i < 0 || i >= basis_.rank) throw InvalidArgument("generator index");
  ExponentVector v(static_cast<std::size_t>(basis_.rank), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return {{v, 1}};
}

TauAlgebra::Element TauAlgebra::add(const Element& a, const Element& b) const {
  Element out = a;
  const int p = prime();
  for (const auto& [m, c] : b) {
    int& slot = out[m];
    slot = (slot + c) % p;
    if (slot == 0) out.erase(m);
  }
  return out;
}

TauAlgebra::Element TauAlgebra::scale(const Element& a, int c) const {
  const int p = prime();
  c = ((c % p) + p) % p;
  Element out;
  if (c == 0) return out;
  for (const auto& [m, v] : a) out.emplace(m, (v * c) % p);
  return out;
}

TauAlgebra::Element TauAlgebra::multiply(const Element& a,
                                         const Element& b) const {
  const int p = prime();
  Element out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      auto m = tau_multiply(ma, mb, p);
      if (!m) continue;
      int& slot = out[*m];
      slot = (slot + ca * cb) % p;
      if (slot == 0) out.erase(*m);
    }
  }
  return out;
}

TauAlgebra::Element TauAlgebra::power(const Element& a, int e) const {
  Element out{{ExponentVector(static_cast<std::size_t>(basis_.rank), 0), 1}};
  for (int i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

VerificationReport tau_sum_isomorphism_check(int r1, int r2, int p) {
  VerificationReport report;
  report.kind = "tau-sum";
  report.id = "tau-sum-" + std::to_string(r1) + "-" + std::to_string(r2) +
              "-p" + std::to_string(p);
  report.params = {{"r1", r1}, {"r2", r2}, {"p", p}};

  const TauAlgebra whole(r1 + r2, p);
  const TauBasis left = tau_basis(r1, p);
  const TauBasis right = tau_basis(r2, p);
  const auto split = [&](const ExponentVector& v) {
    return std::pair{ExponentVector(v.begin(), v.begin() + r1),
                     ExponentVector(v.begin() + r1, v.end())};
  };

  report.lhs = whole.basis().monomials.size();
  report.rhs = left.monomials.size() * right.monomials.size();
  report.status = Status::pass;
  const auto fail = [&](std::string why) {
    if (report.status == Status::pass) {
      report.status = Status::fail;
      report.message = std::move(why);
    }
  };

  // Bijection of bases, preserving degree.
  std::set<std::pair<ExponentVector, ExponentVector>> image;
  const std::set<ExponentVector> left_set(left.monomials.begin(),
                                          left.monomials.end());
  const std::set<ExponentVector> right_set(right.monomials.begin(),
                                           right.monomials.end());
  for (const auto& v : whole.basis().monomials) {
    auto [a, b] = split(v);
    if (!left_set.contains(a) || !right_set.contains(b)) {
      fail("basis element leaves tau(E') x tau(E'')");
    }
    if (degree(v) != degree(a) + degree(b)) fail("degree not preserved");
    image.emplace(std::move(a), std::move(b));
  }
  if (image.size() != left.monomials.size() * right.monomials.size()) {
    fail("basis map is not a bijection");
  }

  // Multiplicativity on all pairs of basis elements.
  long products = 0;
  for (const auto& u : whole.basis().monomials) {
    for (const auto& v : whole.basis().monomials) {
      ++products;
      const auto uv = tau_multiply(u, v, p);
      const auto [u1, u2] = split(u);
      const auto [v1, v2] = split(v);
      const auto a = tau_multiply(u1, v1, p);
      const auto b = tau_multiply(u2, v2, p);
      const bool tensor_zero = !a || !b;
      if (uv.has_value() == tensor_zero ||
          (uv && split(*uv) != std::pair{*a, *b})) {
        nlohmann::json offending = {{"u", u}, {"v", v}};
        fail("product mismatch: " + offending.dump());
      }
    }
  }

  // Middle binomials C(p, i) vanish mod p, so (a e' + b e'')^p = 0 and the
  // ideal of p-th powers is independent of the chosen basis.
  std::vector<long> middle;
  for (int i = 1; i < p; ++i) {
    const Integer c = binomial(p, i);
    middle.push_back(mpz_class(c % p).get_si());
    if (c % p != 0) fail("C(p," + std::to_string(i) + ") != 0 mod p");
  }
  long freshman_checks = 0;
  for (int i = 0; i < r1; ++i) {
    for (int j = 0; j < r2; ++j) {
      for (int a = 0; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
          const auto x = whole.add(whole.scale(whole.generator(i), a),
                                   whole.scale(whole.generator(r1 + j), b));
          ++freshman_checks;
          if (!whole.power(x, p).empty()) fail("(a e' + b e'')^p != 0");
        }
      }
    }
  }
  if (report.lhs != report.rhs) fail("rank mismatch");
  report.trace = {{"basis_products_checked", products},
                  {"middle_binomials_mod_p", middle},
                  {"freshman_checks", freshman_checks}};
  return report;
}

KElement tau_k0_class(const SplitClass& e, int p) {
  require_prime(p);
  if (!e.effective()) {
    throw InvalidArgument("tau(E) needs an effective presentation");
  }
  // One basis vector per copy of each line.
  std::vector<const LineIndex*> lines;
  for (const auto& [line, m] : e.terms()) {
    for (long i = 0; i < m; ++i) lines.push_back(&line);
  }
  const auto& ring = e.ring();
  const TauBasis basis = tau_basis(static_cast<int>(lines.size()), p);
  // The monomial e^v spans the line prod L_i^{v_i}; collect multiplicities
  // before expanding.
  std::map<LineIndex, long> summands;
  for (const auto& v : basis.monomials) {
    LineIndex target{std::vector<int>(ring.factors.size(), 0), 0};
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = 0; j < target.exponents.size(); ++j) {
        target.exponents[j] += v[i] * lines[i]->exponents[j];
      }
      target.chi += v[i] * lines[i]->chi;
    }
    target.chi %= ring.characters();
    ++summands[target];
  }
  KElement out(ring);
  for (const auto& [line, count] : summands) {
    out += line_class(ring, line.exponents, line.chi) * Rational(count);
  }
  return out;
}

}  // namespace kfrob
