#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kfrob/fp_poly.hpp"
#include "kfrob/groebner.hpp"
#include "kfrob/report.hpp"
#include "kfrob/tau.hpp"

namespace kfrob {

// An affine model over F_p: either A^r (no equation) or the hypersurface
// V(f) in A^{r+1}.  Over Spec F_p the relative Frobenius target X' is
// identified with X.
struct AffineModel {
  int prime = 2;
  std::vector<std::string> variables;
  std::optional<FpPoly> hypersurface;

  static AffineModel affine_space(int r, int p);
  // Variables are collected from the equation and sorted by name.
  static AffineModel hypersurface_model(const std::string& equation, int p);

  int dimension() const;
};

// Monomials x^e, 0 <= e_j < p: a basis of F_* O_X over O_{X'} for X = A^r.
std::vector<ExponentVector> frobenius_pushforward_basis(int r, int p);

// x^a = (x^p)^q * x^e with 0 <= e_j < p; returns (q, e).
std::pair<ExponentVector, ExponentVector> frobenius_decompose(
    const ExponentVector& a, int p);

// F^*F_* O_X = O_X[t_1..t_r]/(t_i^p) for X = A^r, t_i = x_i (x) 1 - 1 (x) x_i.
// Elements map t-monomials (exponents < p) to coefficients in O_X = F_p[x].
class FrobAlgebra {
 public:
  using Element = std::map<ExponentVector, FpPoly>;

  FrobAlgebra(int r, int p);

  int rank() const noexcept { return r_; }
  int prime() const noexcept { return p_; }

  Element zero() const { return {}; }
  Element constant(const FpPoly& c) const;
  Element t(int i) const;        // x_i (x) 1 - 1 (x) x_i
  Element x_left(int i) const;   // x_i (x) 1
  Element x_right(int i) const;  // 1 (x) x_i = x_i - t_i

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element multiply(const Element& a, const Element& b) const;
  Element power(const Element& a, int e) const;

  // s (x) 1 - 1 (x) s, the element whose class in I/I^2 is ds.
  Element diagonal_difference(const FpPoly& s) const;
  // Drops all t-monomials of degree >= k (the image in A/I^k).
  Element truncate(const Element& a, int k) const;

  // t-monomials spanning I^k as an O_X-module, from products of k
  // generators.  Empty once k > r(p-1).
  std::vector<ExponentVector> ideal_power(int k) const;

 private:
  FpPoly zero_poly() const { return FpPoly(p_, r_); }

  int r_;
  int p_;
};

// Builds A for a model without equation and checks (x_i - y_i)^p =
// x_i^p - y_i^p in F_p[x, y].  Throws Error if the check fails.
FrobAlgebra build_frob_algebra(const AffineModel& model);

// Verifies that dx_i -> t_i identifies Omega with I/I^2: the class of
// s (x) 1 - 1 (x) s mod I^2 equals sum (ds/dx_i) t_i for test polynomials s,
// d(x_i^p) -> 0, and I/I^2 is free on t_1..t_r.
VerificationReport diagonal_conormal(const FrobAlgebra& algebra);

// tau(I/I^2) -> Gr(F^*F_* O_X), e_i -> t_i, is a graded isomorphism.
VerificationReport check_gr_iso(int r, int p);

struct SamplePoint {
  std::vector<long> coordinates;
};

std::vector<SamplePoint> parse_samples(const std::string& text);

// Conormal check on a hypersurface model via Groebner normal forms in
// F_p[u, v]/(f(u), f(v), u_i^p - v_i^p).  A sample that is off the
// hypersurface or singular yields ERROR, not FAIL.
VerificationReport hypersurface_conormal_check(
    const AffineModel& model, const std::vector<SamplePoint>& samples,
    const GroebnerBudget& budget = GroebnerBudget::from_environment());

}  // namespace kfrob
