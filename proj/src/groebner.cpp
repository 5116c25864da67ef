#include "kfrob/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "kfrob/errors.hpp"

namespace kfrob {

namespace {

long env_or(const char* name, long fallback) {
  const char* value = std::getenv(name);
  if (!value || !*value) return fallback;
  try {
    return std::stol(value);
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("bad value for ") + name);
  }
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial quotient(const Monomial& num, const Monomial& den) {
  Monomial out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) out[i] = num[i] - den[i];
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

FpPoly s_polynomial(const FpPoly& f, const FpPoly& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const int p = f.prime();
  return f.times_monomial(quotient(l, f.leading_monomial()),
                          inverse_mod(f.leading_coefficient(), p)) -
         g.times_monomial(quotient(l, g.leading_monomial()),
                          inverse_mod(g.leading_coefficient(), p));
}

}  // namespace

GroebnerBudget GroebnerBudget::from_environment() {
  GroebnerBudget b;
  b.max_pairs = env_or("KFROB_GROEBNER_MAX_PAIRS", b.max_pairs);
  b.max_basis = env_or("KFROB_GROEBNER_MAX_BASIS", b.max_basis);
  return b;
}

FpPoly normal_form(const FpPoly& f, const std::vector<FpPoly>& basis) {
  FpPoly remainder(f.prime(), f.nvars());
  FpPoly rest = f;
  while (!rest.is_zero()) {
    const Monomial lm = rest.leading_monomial();
    const long lc = rest.leading_coefficient();
    const FpPoly* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.leading_monomial(), lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      const long factor = lc * inverse_mod(divisor->leading_coefficient(),
                                           f.prime());
      rest -= divisor->times_monomial(quotient(lm, divisor->leading_monomial()),
                                      factor);
    } else {
      remainder.add_term(lm, lc);
      rest.add_term(lm, -lc);
    }
  }
  return remainder;
}

bool in_ideal(const FpPoly& f, const std::vector<FpPoly>& basis) {
  return normal_form(f, basis).is_zero();
}

std::vector<FpPoly> groebner_basis(const std::vector<FpPoly>& generators,
                                   const GroebnerBudget& budget) {
  std::vector<FpPoly> basis;
  for (const auto& g : generators) {
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  long processed = 0;
  while (!pairs.empty()) {
    if (++processed > budget.max_pairs) {
      throw BudgetExceeded("Groebner basis: more than " +
                           std::to_string(budget.max_pairs) + " S-pairs");
    }
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    // Buchberger's first criterion.
    if (coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) {
      continue;
    }
    FpPoly r = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    if (static_cast<long>(basis.size()) > budget.max_basis) {
      throw BudgetExceeded("Groebner basis: more than " +
                           std::to_string(budget.max_basis) + " elements");
    }
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) {
      pairs.emplace_back(k, basis.size() - 1);
    }
  }

  // Minimalize, then inter-reduce.
  std::vector<FpPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = basis[j].leading_monomial();
      const auto& b = basis[i].leading_monomial();
      if (divides(a, b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<FpPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FpPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const FpPoly& a, const FpPoly& b) {
    return DegRevLexGreater{}(b.leading_monomial(), a.leading_monomial());
  });
  return reduced;
}

std::optional<long> quotient_dimension(const std::vector<FpPoly>& basis,
                                       int nvars) {
  const auto n = static_cast<std::size_t>(nvars);
  for (const auto& g : basis) {
    if (total_degree(g.leading_monomial()) == 0) return 0;  // unit ideal
  }
  // Finite iff every variable has a pure power among the leading monomials.
  std::vector<int> bound(n, -1);
  for (const auto& g : basis) {
    const auto& lm = g.leading_monomial();
    int support = -1;
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lm[i]) {
        support = static_cast<int>(i);
        ++count;
      }
    }
    if (count == 1) {
      int& b = bound[static_cast<std::size_t>(support)];
      const int e = lm[static_cast<std::size_t>(support)];
      if (b < 0 || e < b) b = e;
    }
  }
  for (int b : bound) {
    if (b < 0) return std::nullopt;
  }
  long count = 0;
  Monomial m(n, 0);
  while (true) {
    bool standard = true;
    for (const auto& g : basis) {
      if (divides(g.leading_monomial(), m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
    std::size_t i = 0;
    while (i < n && m[i] + 1 >= bound[i]) {
      m[i] = 0;
      ++i;
    }
    if (i == n) break;
    ++m[i];
  }
  return count;
}

}  // namespace kfrob
