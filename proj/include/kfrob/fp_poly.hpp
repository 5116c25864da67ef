#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kfrob {

using Monomial = std::vector<int>;

// Degree reverse lexicographic order, as a "greater than" so that the
// leading term of a polynomial comes first in its term map.
struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

bool divides(const Monomial& a, const Monomial& b);
int total_degree(const Monomial& m);

// Sparse multivariate polynomial over F_p.  Coefficients are kept in [1, p).
class FpPoly {
 public:
  using Terms = std::map<Monomial, long, DegRevLexGreater>;

  FpPoly(int p, int nvars);

  static FpPoly constant(int p, int nvars, long c);
  static FpPoly variable(int p, int nvars, int i);
  static FpPoly monomial(int p, int nvars, Monomial m, long c = 1);

  int prime() const noexcept { return p_; }
  int nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Monomial& leading_monomial() const;
  long leading_coefficient() const;
  int degree() const;

  FpPoly& operator+=(const FpPoly& other);
  FpPoly& operator-=(const FpPoly& other);
  FpPoly operator-() const;
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  FpPoly scaled(long c) const;
  FpPoly times_monomial(const Monomial& m, long c) const;
  FpPoly pow(unsigned e) const;
  FpPoly monic() const;

  FpPoly derivative(int i) const;
  long evaluate(std::span<const long> point) const;
  // Re-embeds into a ring with more variables; variable i goes to slot[i].
  FpPoly remap(int nvars, std::span<const int> slot) const;

  bool operator==(const FpPoly& other) const;

  std::string to_string(std::span<const std::string> names = {}) const;

  void add_term(const Monomial& m, long c);

 private:
  long reduce(long c) const;

  int p_;
  int nvars_;
  Terms terms_;
};

long inverse_mod(long a, int p);

// Parses e.g. "y^2 - x^3 - x" or "2*x*y + 1".  When names is empty the
// variables are collected from the text and sorted; they are returned
// through names.
FpPoly parse_fp_poly(std::string_view text, int p,
                     std::vector<std::string>& names);

}  // namespace kfrob
