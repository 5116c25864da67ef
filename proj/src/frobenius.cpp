#include "kfrob/frobenius.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "kfrob/errors.hpp"

namespace kfrob {

namespace {

std::vector<ExponentVector> box_monomials(int r, int p) {
  std::vector<ExponentVector> out;
  ExponentVector v(static_cast<std::size_t>(r), 0);
  while (true) {
    out.push_back(v);
    int j = r - 1;
    while (j >= 0 && v[static_cast<std::size_t>(j)] == p - 1) {
      v[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++v[static_cast<std::size_t>(j)];
  }
  return out;
}

int degree(const ExponentVector& v) { return total_degree(v); }

std::string name_of(const AffineModel& m, std::size_t i) {
  return i < m.variables.size() ? m.variables[i] : "x" + std::to_string(i + 1);
}

}  // namespace

AffineModel AffineModel::affine_space(int r, int p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (r < 0) throw InvalidArgument("r must be >= 0");
  AffineModel m;
  m.prime = p;
  for (int i = 0; i < r; ++i) m.variables.push_back("x" + std::to_string(i + 1));
  return m;
}

AffineModel AffineModel::hypersurface_model(const std::string& equation, int p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  AffineModel m;
  m.prime = p;
  m.hypersurface = parse_fp_poly(equation, p, m.variables);
  if (m.variables.empty()) {
    throw InvalidArgument("hypersurface equation has no variables");
  }
  if (m.hypersurface->is_zero()) {
    throw InvalidArgument("hypersurface equation is zero mod p");
  }
  return m;
}

int AffineModel::dimension() const {
  const int n = static_cast<int>(variables.size());
  return hypersurface ? n - 1 : n;
}

std::vector<ExponentVector> frobenius_pushforward_basis(int r, int p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (r < 0) throw InvalidArgument("r must be >= 0");
  return box_monomials(r, p);
}

std::pair<ExponentVector, ExponentVector> frobenius_decompose(
    const ExponentVector& a, int p) {
  ExponentVector q(a.size());
  ExponentVector e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw InvalidArgument("negative exponent");
    q[i] = a[i] / p;
    e[i] = a[i] % p;
  }
  return {q, e};
}

FrobAlgebra::FrobAlgebra(int r, int p) : r_(r), p_(p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (r < 0) throw InvalidArgument("r must be >= 0");
}

FrobAlgebra::Element FrobAlgebra::constant(const FpPoly& c) const {
  Element out;
  if (!c.is_zero()) out.emplace(ExponentVector(static_cast<std::size_t>(r_), 0), c);
  return out;
}

FrobAlgebra::Element FrobAlgebra::t(int i) const {
  ExponentVector v(static_cast<std::size_t>(r_), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return {{v, FpPoly::constant(p_, r_, 1)}};
}

FrobAlgebra::Element FrobAlgebra::x_left(int i) const {
  return constant(FpPoly::variable(p_, r_, i));
}

FrobAlgebra::Element FrobAlgebra::x_right(int i) const {
  return sub(x_left(i), t(i));
}

FrobAlgebra::Element FrobAlgebra::add(const Element& a, const Element& b) const {
  Element out = a;
  for (const auto& [m, c] : b) {
    auto [it, inserted] = out.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

FrobAlgebra::Element FrobAlgebra::sub(const Element& a, const Element& b) const {
  Element neg;
  for (const auto& [m, c] : b) neg.emplace(m, -c);
  return add(a, neg);
}

FrobAlgebra::Element FrobAlgebra::multiply(const Element& a,
                                           const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      auto m = tau_multiply(ma, mb, p_);
      if (!m) continue;  // t_i^p = 0
      out = add(out, Element{{*m, ca * cb}});
    }
  }
  return out;
}

FrobAlgebra::Element FrobAlgebra::power(const Element& a, int e) const {
  Element out = constant(FpPoly::constant(p_, r_, 1));
  for (int i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

FrobAlgebra::Element FrobAlgebra::diagonal_difference(const FpPoly& s) const {
  Element right;
  for (const auto& [m, c] : s.terms()) {
    Element term = constant(FpPoly::constant(p_, r_, c));
    for (int i = 0; i < r_; ++i) {
      term = multiply(term, power(x_right(i), m[static_cast<std::size_t>(i)]));
    }
    right = add(right, term);
  }
  return sub(constant(s), right);
}

FrobAlgebra::Element FrobAlgebra::truncate(const Element& a, int k) const {
  Element out;
  for (const auto& [m, c] : a) {
    if (degree(m) < k) out.emplace(m, c);
  }
  return out;
}

std::vector<ExponentVector> FrobAlgebra::ideal_power(int k) const {
  // Products of k generators, then closed under multiplication by A.
  std::set<ExponentVector> generated{ExponentVector(static_cast<std::size_t>(r_), 0)};
  for (int step = 0; step < k; ++step) {
    std::set<ExponentVector> next;
    for (const auto& m : generated) {
      for (int i = 0; i < r_; ++i) {
        for (const auto& [mono, c] : multiply(Element{{m, FpPoly::constant(p_, r_, 1)}}, t(i))) {
          next.insert(mono);
        }
      }
    }
    generated = std::move(next);
  }
  std::set<ExponentVector> span;
  for (const auto& g : generated) {
    for (const auto& m : box_monomials(r_, p_)) {
      if (auto prod = tau_multiply(g, m, p_)) span.insert(*prod);
    }
  }
  return {span.begin(), span.end()};
}

FrobAlgebra build_frob_algebra(const AffineModel& model) {
  if (model.hypersurface) {
    throw InvalidArgument("build_frob_algebra needs a model without equation");
  }
  const int r = model.dimension();
  const int p = model.prime;
  // In F_p[x_1..x_r, y_1..y_r]: (x_i - y_i)^p == x_i^p - y_i^p.
  for (int i = 0; i < r; ++i) {
    const FpPoly x = FpPoly::variable(p, 2 * r, i);
    const FpPoly y = FpPoly::variable(p, 2 * r, r + i);
    if (!((x - y).pow(static_cast<unsigned>(p)) ==
          x.pow(static_cast<unsigned>(p)) - y.pow(static_cast<unsigned>(p)))) {
      throw Error("freshman's dream failed for variable " + name_of(model, static_cast<std::size_t>(i)));
    }
  }
  return FrobAlgebra(r, p);
}

VerificationReport diagonal_conormal(const FrobAlgebra& algebra) {
  const int r = algebra.rank();
  const int p = algebra.prime();
  VerificationReport report;
  report.kind = "conormal";
  report.id = "conormal-r" + std::to_string(r) + "-p" + std::to_string(p);
  report.params = {{"r", r}, {"p", p}};
  report.status = Status::pass;
  const auto fail = [&](const std::string& why) {
    if (report.status == Status::pass) {
      report.status = Status::fail;
      report.message = why;
    }
  };

  // I/I^2 basis: monomials of I not in I^2.
  const auto i1 = algebra.ideal_power(1);
  const auto i2 = algebra.ideal_power(2);
  const std::set<ExponentVector> i2_set(i2.begin(), i2.end());
  std::vector<ExponentVector> conormal_basis;
  for (const auto& m : i1) {
    if (!i2_set.contains(m)) conormal_basis.push_back(m);
  }
  std::vector<ExponentVector> expected;
  for (int i = 0; i < r; ++i) {
    ExponentVector v(static_cast<std::size_t>(r), 0);
    v[static_cast<std::size_t>(i)] = 1;
    expected.push_back(v);
  }
  std::sort(expected.begin(), expected.end());
  if (conormal_basis != expected) fail("I/I^2 is not free on t_1..t_r");

  // Test polynomials for the derivation s -> class of (s (x) 1 - 1 (x) s).
  std::vector<std::pair<std::string, FpPoly>> tests;
  for (int i = 0; i < r; ++i) {
    const FpPoly x = FpPoly::variable(p, r, i);
    const std::string name = "x" + std::to_string(i + 1);
    tests.emplace_back(name, x);
    tests.emplace_back(name + "^2", x.pow(2));
    tests.emplace_back(name + "^" + std::to_string(p), x.pow(static_cast<unsigned>(p)));
    tests.emplace_back(name + "^" + std::to_string(p + 1), x.pow(static_cast<unsigned>(p + 1)));
    for (int j = i + 1; j < r; ++j) {
      tests.emplace_back(name + "*x" + std::to_string(j + 1),
                         x * FpPoly::variable(p, r, j));
    }
  }
  if (r >= 1) {
    FpPoly mixed = FpPoly::constant(p, r, 1);
    for (int i = 0; i < r; ++i) {
      mixed = mixed * (FpPoly::variable(p, r, i) + FpPoly::constant(p, r, i + 1));
    }
    tests.emplace_back("prod(x_i + i)", mixed + FpPoly::variable(p, r, 0).pow(3));
  }

  nlohmann::json checks = nlohmann::json::array();
  for (const auto& [name, s] : tests) {
    const auto lhs = algebra.truncate(algebra.diagonal_difference(s), 2);
    FrobAlgebra::Element rhs;
    for (int i = 0; i < r; ++i) {
      rhs = algebra.add(rhs, algebra.multiply(algebra.constant(s.derivative(i)),
                                              algebra.t(i)));
    }
    const bool ok = lhs == rhs;
    checks.push_back({{"s", name}, {"ok", ok}});
    if (!ok) fail("ds != class of s(x)1 - 1s(x) for s = " + name);
  }
  // p-th power differentials die.
  nlohmann::json killed = nlohmann::json::array();
  for (int i = 0; i < r; ++i) {
    const auto image = algebra.truncate(
        algebra.diagonal_difference(FpPoly::variable(p, r, i).pow(static_cast<unsigned>(p))), 2);
    killed.push_back(image.empty());
    if (!image.empty()) fail("d(x_i^p) does not vanish in I/I^2");
  }

  report.lhs = conormal_basis;
  report.rhs = expected;
  report.trace = {{"derivation_checks", checks},
                  {"p_th_powers_killed", killed},
                  {"omega_basis", [&] {
                     std::vector<std::string> dx;
                     for (int i = 0; i < r; ++i) dx.push_back("dx" + std::to_string(i + 1));
                     return dx;
                   }()}};
  return report;
}

VerificationReport check_gr_iso(int r, int p) {
  VerificationReport report;
  report.kind = "gr-iso";
  report.id = "gr-iso-r" + std::to_string(r) + "-p" + std::to_string(p);
  report.params = {{"r", r}, {"p", p}};
  report.status = Status::pass;
  const auto fail = [&](const std::string& why) {
    if (report.status == Status::pass) {
      report.status = Status::fail;
      report.message = why;
    }
  };

  const FrobAlgebra algebra = build_frob_algebra(AffineModel::affine_space(r, p));
  const int top = r * (p - 1);

  // Filtration I^0 = A > I^1 > ... > I^{top+1}.
  std::vector<std::set<ExponentVector>> powers;
  for (int k = 0; k <= top + 1; ++k) {
    const auto span = algebra.ideal_power(k);
    powers.emplace_back(span.begin(), span.end());
  }
  if (!powers.back().empty()) fail("I^{r(p-1)+1} != 0");

  std::vector<std::set<ExponentVector>> graded(static_cast<std::size_t>(top + 1));
  std::vector<long> gr_dims;
  for (int k = 0; k <= top; ++k) {
    for (const auto& m : powers[static_cast<std::size_t>(k)]) {
      if (!powers[static_cast<std::size_t>(k) + 1].contains(m)) {
        graded[static_cast<std::size_t>(k)].insert(m);
      }
    }
    gr_dims.push_back(static_cast<long>(graded[static_cast<std::size_t>(k)].size()));
  }

  // rho-bar on the tau basis: e^v -> prod t_i^{v_i} computed in A.
  const TauBasis tau = tau_basis(r, p);
  std::vector<std::set<ExponentVector>> images(static_cast<std::size_t>(top + 1));
  const FpPoly one = FpPoly::constant(p, r, 1);
  for (std::size_t b = 0; b < tau.monomials.size(); ++b) {
    const auto& v = tau.monomials[b];
    const int k = tau.degrees[b];
    auto image = algebra.constant(one);
    for (int i = 0; i < r; ++i) {
      image = algebra.multiply(image, algebra.power(algebra.t(i), v[static_cast<std::size_t>(i)]));
    }
    if (image.size() != 1 || !(image.begin()->second == one)) {
      fail("rho-bar image of a basis monomial is not a basis monomial");
      continue;
    }
    const auto& m = image.begin()->first;
    if (!graded[static_cast<std::size_t>(k)].contains(m)) {
      fail("rho-bar does not land in Gr_" + std::to_string(k));
    }
    if (!images[static_cast<std::size_t>(k)].insert(m).second) {
      fail("rho-bar is not injective in degree " + std::to_string(k));
    }
  }
  for (int k = 0; k <= top; ++k) {
    if (images[static_cast<std::size_t>(k)] != graded[static_cast<std::size_t>(k)]) {
      fail("rho-bar is not surjective in degree " + std::to_string(k));
    }
  }

  const std::vector<long> tau_dims = tau_graded_dims(r, p);
  if (tau_dims != gr_dims) fail("graded dimensions differ");
  long total = 0;
  for (long d : gr_dims) total += d;
  const auto pushforward_rank =
      static_cast<long>(frobenius_pushforward_basis(r, p).size());
  long pr = 1;
  for (int i = 0; i < r; ++i) pr *= p;
  if (total != pr || pushforward_rank != pr) fail("total rank is not p^r");

  report.lhs = tau_dims;
  report.rhs = gr_dims;
  report.trace = {{"total", total},
                  {"p_to_r", pr},
                  {"frobenius_degree", pushforward_rank},
                  {"nilpotency_index", top + 1}};
  return report;
}

std::vector<SamplePoint> parse_samples(const std::string& text) {
  std::vector<SamplePoint> out;
  std::size_t i = 0;
  const auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip();
    if (i >= text.size()) break;
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    SamplePoint point;
    while (true) {
      skip();
      std::size_t used = 0;
      try {
        point.coordinates.push_back(std::stol(text.substr(i), &used));
      } catch (const std::exception&) {
        throw ParseError("expected integer coordinate", i);
      }
      i += used;
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size() || text[i] != ')') throw ParseError("expected ')'", i);
      ++i;
      break;
    }
    out.push_back(std::move(point));
    skip();
    if (i < text.size()) {
      if (text[i] != ';') throw ParseError("expected ';'", i);
      ++i;
    }
  }
  return out;
}

VerificationReport hypersurface_conormal_check(
    const AffineModel& model, const std::vector<SamplePoint>& samples,
    const GroebnerBudget& budget) {
  if (!model.hypersurface) {
    throw InvalidArgument("hypersurface_conormal_check needs an equation");
  }
  const FpPoly& f = *model.hypersurface;
  const int p = model.prime;
  const int n = static_cast<int>(model.variables.size());
  const int r = model.dimension();

  VerificationReport report;
  report.kind = "hypersurface";
  report.id = "hypersurface-p" + std::to_string(p);
  report.params = {{"p", p},
                   {"equation", f.to_string(model.variables)},
                   {"variables", model.variables}};
  report.status = Status::pass;
  std::vector<std::string> failures;
  std::vector<std::string> errors;

  std::vector<int> slot_u(static_cast<std::size_t>(n));
  std::vector<int> slot_v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    slot_u[static_cast<std::size_t>(i)] = i;
    slot_v[static_cast<std::size_t>(i)] = n + i;
  }
  const int nv = 2 * n;
  const auto var = [&](int i) { return FpPoly::variable(p, nv, i); };

  std::vector<FpPoly> frobenius_ideal{f.remap(nv, slot_u), f.remap(nv, slot_v)};
  std::vector<FpPoly> diagonal;
  for (int i = 0; i < n; ++i) {
    frobenius_ideal.push_back(var(i).pow(static_cast<unsigned>(p)) -
                              var(n + i).pow(static_cast<unsigned>(p)));
    diagonal.push_back(var(i) - var(n + i));
  }
  std::vector<FpPoly> diagonal_squared;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      diagonal_squared.push_back(diagonal[static_cast<std::size_t>(i)] *
                                 diagonal[static_cast<std::size_t>(j)]);
    }
  }
  const auto concat = [](std::vector<FpPoly> a, const std::vector<FpPoly>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  nlohmann::json sample_results = nlohmann::json::array();
  try {
    // sum_i (df/dx_i)(u) (u_i - v_i) lies in I^2 modulo the Frobenius relations.
    FpPoly linear_part(p, nv);
    for (int i = 0; i < n; ++i) {
      linear_part += f.derivative(i).remap(nv, slot_u) * diagonal[static_cast<std::size_t>(i)];
    }
    const auto gb = groebner_basis(concat(frobenius_ideal, diagonal_squared), budget);
    const FpPoly remainder = normal_form(linear_part, gb);
    std::vector<std::string> names = model.variables;
    for (const auto& v : model.variables) names.push_back(v + "'");
    report.lhs = linear_part.to_string(names);
    report.rhs = remainder.to_string(names);
    report.trace["groebner_basis_size"] = gb.size();
    if (!remainder.is_zero()) {
      failures.push_back("sum (df/dx_i)(x_i - y_i) is not in I^2");
    }

    for (const auto& sample : samples) {
      nlohmann::json entry = {{"point", sample.coordinates}};
      if (sample.coordinates.size() != static_cast<std::size_t>(n)) {
        entry["status"] = "ERROR";
        entry["message"] = "sample has wrong dimension";
        errors.push_back("sample dimension");
        sample_results.push_back(entry);
        continue;
      }
      std::vector<long> gradient;
      bool smooth = false;
      for (int i = 0; i < n; ++i) {
        gradient.push_back(f.derivative(i).evaluate(sample.coordinates));
        smooth = smooth || gradient.back() != 0;
      }
      entry["gradient"] = gradient;
      if (f.evaluate(sample.coordinates) != 0) {
        entry["status"] = "ERROR";
        entry["message"] = "precondition: point is not on the hypersurface";
        errors.push_back(entry["message"]);
        sample_results.push_back(entry);
        continue;
      }
      if (!smooth) {
        entry["status"] = "ERROR";
        entry["message"] = "precondition: Jacobian vanishes (singular point)";
        errors.push_back(entry["message"]);
        sample_results.push_back(entry);
        continue;
      }
      // B/I^2 -> B/I splits through the first factor, so the fiber of I/I^2
      // at P has dimension dim B/(I^2 + m_P) - dim B/(I + m_P).
      std::vector<FpPoly> point_ideal;
      for (int i = 0; i < n; ++i) {
        point_ideal.push_back(var(i) - FpPoly::constant(p, nv, sample.coordinates[static_cast<std::size_t>(i)]));
      }
      const auto big = quotient_dimension(
          groebner_basis(concat(concat(frobenius_ideal, diagonal_squared), point_ideal), budget), nv);
      const auto small = quotient_dimension(
          groebner_basis(concat(concat(frobenius_ideal, diagonal), point_ideal), budget), nv);
      if (!big || !small) {
        entry["status"] = "FAIL";
        failures.push_back("fiber quotient is not finite-dimensional");
      } else {
        const long fiber = *big - *small;
        entry["fiber_dimension"] = fiber;
        entry["status"] = fiber == r ? "PASS" : "FAIL";
        if (fiber != r) failures.push_back("fiber dimension " + std::to_string(fiber) + " != " + std::to_string(r));
      }
      sample_results.push_back(entry);
    }
  } catch (const BudgetExceeded& e) {
    errors.push_back(e.what());
  }

  report.trace["samples"] = sample_results;
  report.trace["expected_fiber_dimension"] = r;
  if (!errors.empty()) {
    report.status = Status::error;
    report.message = errors.front();
  } else if (!failures.empty()) {
    report.status = Status::fail;
    report.message = failures.front();
  }
  return report;
}

}  // namespace kfrob
