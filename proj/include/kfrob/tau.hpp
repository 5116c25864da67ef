#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kfrob/kring.hpp"
#include "kfrob/report.hpp"
#include "kfrob/split_class.hpp"

namespace kfrob {

using ExponentVector = std::vector<int>;

// Monomial basis e^v, 0 <= v_j < p, of Sym(E)/(e_1^p, ..., e_r^p) for E free
// of rank r.  Depends only on (r, p): no coefficient ring enters.
struct TauBasis {
  int rank = 0;
  int prime = 2;
  std::vector<ExponentVector> monomials;  // lexicographic
  std::vector<int> degrees;               // total degree per monomial
};

TauBasis tau_basis(int r, int p);

// e^a * e^b, or nullopt when some exponent reaches p.
std::optional<ExponentVector> tau_multiply(const ExponentVector& a,
                                           const ExponentVector& b, int p);

// Dimensions of the graded pieces in degrees 0 .. r(p-1).
std::vector<long> tau_graded_dims(int r, int p);

// The algebra tau(E) over F_p, elements as monomial -> coefficient in [0, p).
class TauAlgebra {
 public:
  using Element = std::map<ExponentVector, int>;

  TauAlgebra(int r, int p);

  const TauBasis& basis() const noexcept { return basis_; }
  int prime() const noexcept { return basis_.prime; }

  Element generator(int i) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, int c) const;
  Element multiply(const Element& a, const Element& b) const;
  Element power(const Element& a, int e) const;

 private:
  TauBasis basis_;
};

// tau(E' + E'') = tau(E') (x) tau(E'') on bases of ranks r1, r2.
VerificationReport tau_sum_isomorphism_check(int r1, int r2, int p);

// Class of tau(E) in K_0, summed over the monomial basis of the split
// presentation; E must be effective.
KElement tau_k0_class(const SplitClass& e, int p);

}  // namespace kfrob
