#include "kfrob/equivariant.hpp"

#include "kfrob/errors.hpp"
#include "kfrob/lambda_ops.hpp"
#include "kfrob/serialize.hpp"

namespace kfrob {

namespace {

void require_prime_order(int l) {
  if (!is_prime(l)) {
    throw InvalidArgument("cyclic order must be prime, got " + std::to_string(l));
  }
}

KElement sigma_power(const RingDescriptor& ring, int c) {
  return KElement::monomial(
      ring, BasisIndex{std::vector<int>(ring.factors.size(), 0), c}, 1);
}

}  // namespace

GroupRingElement::GroupRingElement(KElement x) : value_(std::move(x)) {
  if (!value_.ring().cyclic_order) {
    throw InvalidArgument("group ring element needs an equivariant ring");
  }
  require_prime_order(*value_.ring().cyclic_order);
}

GroupRingElement GroupRingElement::embed(const KElement& x, int l) {
  if (x.ring().equivariant()) {
    throw InvalidArgument("embed: class is already equivariant");
  }
  require_prime_order(l);
  return GroupRingElement(change_ring(x, x.ring().with_cyclic_order(l)));
}

KElement GroupRingElement::coefficient(int c) const {
  const RingDescriptor base = value_.ring().without_cyclic_order();
  KElement::Terms terms;
  for (const auto& [index, v] : value_.terms()) {
    if (index.chi == c) terms.emplace(BasisIndex{index.exps, 0}, v);
  }
  return KElement::from_terms(base, std::move(terms));
}

ReducedEqElement::ReducedEqElement(int l, std::vector<KElement> coefficients)
    : l_(l), coeffs_(std::move(coefficients)) {
  require_prime_order(l);
  if (coeffs_.size() != static_cast<std::size_t>(l - 1)) {
    throw InvalidArgument("reduced element needs l - 1 coefficients");
  }
  for (const auto& c : coeffs_) {
    if (c.ring() != coeffs_.front().ring() || c.ring().equivariant()) {
      throw DescriptorMismatch("reduced coefficients must share a plain ring");
    }
  }
}

std::vector<Rational> ReducedEqElement::coefficient_ranks() const {
  std::vector<Rational> out;
  for (const auto& c : coeffs_) out.push_back(rank(c));
  return out;
}

GroupRingElement ReducedEqElement::lift() const {
  const RingDescriptor ring = base().with_cyclic_order(l_);
  KElement out(ring);
  for (int c = 0; c < l_ - 1; ++c) {
    out += change_ring(coeffs_[static_cast<std::size_t>(c)], ring) *
           sigma_power(ring, c);
  }
  return GroupRingElement(std::move(out));
}

ReducedEqElement operator*(const ReducedEqElement& a, const ReducedEqElement& b) {
  if (a.l_ != b.l_) throw DescriptorMismatch("reduced elements of different l");
  return reduce_mod_regular(a.lift() * b.lift());
}

GroupRingElement augmentation_rep(int l, const RingDescriptor& base) {
  require_prime_order(l);
  const RingDescriptor ring = base.without_cyclic_order().with_cyclic_order(l);
  KElement out(ring);
  for (int c = 1; c < l; ++c) out += sigma_power(ring, c);
  return GroupRingElement(std::move(out));
}

GroupRingElement regular_rep(int l, const RingDescriptor& base) {
  const GroupRingElement h = augmentation_rep(l, base);
  return GroupRingElement(h.value() + KElement::one(h.value().ring()));
}

SplitClass tensor_with_rep(const SplitClass& e, const GroupRingElement& rep) {
  if (!e.effective()) throw InvalidArgument("tensor_with_rep needs effective E");
  const int l = rep.order();
  std::vector<int> characters;
  for (const auto& [index, v] : rep.value().terms()) {
    bool constant = true;
    for (int x : index.exps) constant = constant && x == 0;
    if (!constant || v != 1) {
      throw InvalidArgument("representation must be a sum of distinct characters");
    }
    characters.push_back(index.chi);
  }
  if (e.ring().equivariant() && e.ring().cyclic_order != l) {
    throw DescriptorMismatch("tensor_with_rep: cyclic orders differ");
  }
  SplitClass out(e.ring().without_cyclic_order().with_cyclic_order(l));
  for (const auto& [line, m] : e.terms()) {
    for (int c : characters) out.add(line.exponents, line.chi + c, m);
  }
  return out;
}

GroupRingElement lambda_minus_one_eq(const SplitClass& x) {
  if (!x.ring().equivariant()) {
    throw InvalidArgument("lambda_minus_one_eq needs an equivariant class");
  }
  return GroupRingElement(lambda_minus_one(x));
}

ReducedEqElement reduce_mod_regular(const GroupRingElement& x) {
  const int l = x.order();
  const KElement top = x.coefficient(l - 1);
  std::vector<KElement> coeffs;
  for (int c = 0; c < l - 1; ++c) coeffs.push_back(x.coefficient(c) - top);
  return ReducedEqElement(l, std::move(coeffs));
}

VerificationReport verify_appendix_theorem(const SplitClass& omega, int l) {
  require_prime_order(l);
  if (omega.ring().equivariant()) {
    throw InvalidArgument("Omega must live on a non-equivariant ring");
  }
  if (!omega.effective()) throw InvalidArgument("Omega must be effective");

  VerificationReport report;
  report.kind = "equivariant";
  report.id = "self-intersection-l" + std::to_string(l) + "-" + omega.ring().describe() +
              "-" + omega.to_string();
  report.params = {{"l", l},
                   {"omega", omega.to_string()},
                   {"ring", to_json(omega.ring())}};

  const GroupRingElement h = augmentation_rep(l, omega.ring());
  const SplitClass twisted = tensor_with_rep(omega, h);
  const GroupRingElement self_intersection = lambda_minus_one_eq(twisted);
  const ReducedEqElement lhs = reduce_mod_regular(self_intersection);

  const KElement bott = theta(l, omega);
  const ReducedEqElement rhs =
      reduce_mod_regular(GroupRingElement::embed(bott, l));

  const auto serialize = [](const ReducedEqElement& r) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : r.coefficients()) j.push_back(to_json(c));
    return j;
  };
  const auto ranks = [](const ReducedEqElement& r) {
    std::vector<std::string> out;
    for (const auto& q : r.coefficient_ranks()) out.push_back(q.get_str());
    return out;
  };
  report.lhs = serialize(lhs);
  report.rhs = serialize(rhs);
  report.trace = {{"omega_tensor_H", twisted.to_string()},
                  {"lambda_minus_one", to_json(self_intersection.value())},
                  {"theta_l_omega", to_json(bott)},
                  {"lhs_coefficient_ranks", ranks(lhs)},
                  {"rhs_coefficient_ranks", ranks(rhs)}};
  if (lhs == rhs) {
    report.status = Status::pass;
  } else {
    report.status = Status::fail;
    report.message = "reduced lambda_{-1}(Omega (x) H) != reduced theta^l(Omega)";
  }
  return report;
}

}  // namespace kfrob
