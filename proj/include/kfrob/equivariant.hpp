#pragma once

#include <vector>

#include "kfrob/kring.hpp"
#include "kfrob/report.hpp"
#include "kfrob/split_class.hpp"

namespace kfrob {

// K_0(C_l, X) = K_0(X) (x) Z[sigma]/(sigma^l - 1) for the trivial action.
class GroupRingElement {
 public:
  // x must live on a ring with cyclic order l, l prime.
  explicit GroupRingElement(KElement x);

  // Embeds a class of K_0(X) as sigma^0 * x.
  static GroupRingElement embed(const KElement& x, int l);

  int order() const noexcept { return *value_.ring().cyclic_order; }
  const KElement& value() const noexcept { return value_; }
  // Coefficient of sigma^c in K_0(X).
  KElement coefficient(int c) const;
  Rational rank() const { return kfrob::rank(value_); }

  friend GroupRingElement operator*(const GroupRingElement& a,
                                    const GroupRingElement& b) {
    return GroupRingElement(a.value_ * b.value_);
  }
  friend GroupRingElement operator+(const GroupRingElement& a,
                                    const GroupRingElement& b) {
    return GroupRingElement(a.value_ + b.value_);
  }
  bool operator==(const GroupRingElement&) const = default;

 private:
  KElement value_;
};

// sigma^0 .. sigma^{l-2} coefficients after imposing 1 + sigma + ... +
// sigma^{l-1} = 0, i.e. the class in K_0(C_l, X)/([O_X[C_l]]).
class ReducedEqElement {
 public:
  ReducedEqElement(int l, std::vector<KElement> coefficients);

  int order() const noexcept { return l_; }
  const std::vector<KElement>& coefficients() const noexcept { return coeffs_; }
  const RingDescriptor& base() const { return coeffs_.front().ring(); }
  std::vector<Rational> coefficient_ranks() const;

  GroupRingElement lift() const;

  friend ReducedEqElement operator*(const ReducedEqElement& a,
                                    const ReducedEqElement& b);
  bool operator==(const ReducedEqElement&) const = default;

 private:
  int l_;
  std::vector<KElement> coeffs_;
};

// H = ker(O[C_l] -> O) = sigma + ... + sigma^{l-1}, over K_0(base).
GroupRingElement augmentation_rep(int l, const RingDescriptor& base = {});
// N = 1 + sigma + ... + sigma^{l-1}.
GroupRingElement regular_rep(int l, const RingDescriptor& base = {});

// {L (x) sigma^c : L in E, c in rep}; rep must have 0/1 constant coefficients.
SplitClass tensor_with_rep(const SplitClass& e, const GroupRingElement& rep);

// prod (1 - L_i sigma^{c_i}) over an effective equivariant presentation.
GroupRingElement lambda_minus_one_eq(const SplitClass& x);

ReducedEqElement reduce_mod_regular(const GroupRingElement& x);

// theta^l(Omega) == lambda_{-1}(Omega (x) H) modulo the regular
// representation, Omega effective on a non-equivariant ring.
VerificationReport verify_appendix_theorem(const SplitClass& omega, int l);

}  // namespace kfrob
