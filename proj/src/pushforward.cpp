#include "kfrob/pushforward.hpp"

#include "kfrob/errors.hpp"
#include "kfrob/lambda_ops.hpp"
#include "kfrob/serialize.hpp"

namespace kfrob {

namespace {

// w[i] = (Delta^i chi(n, .))(0), the image of t^i under the pushforward.
std::vector<Integer> difference_weights(int n) {
  std::vector<Integer> w;
  for (int i = 0; i <= n; ++i) {
    Integer total = 0;
    for (int j = 0; j <= i; ++j) {
      const Integer term = binomial(i, j) * chi(n, j);
      total += ((i - j) % 2 == 0) ? term : Integer(-term);
    }
    w.push_back(total);
  }
  return w;
}

void require_plain(const KElement& x, const char* op) {
  if (x.ring().equivariant()) {
    throw InvalidArgument(std::string(op) + " needs a non-equivariant class");
  }
}

}  // namespace

Integer chi(int n, long a) {
  if (n < 0) throw InvalidArgument("chi: n must be >= 0");
  Integer num = 1;
  Integer den = 1;
  for (long j = 1; j <= n; ++j) {
    num *= a + j;
    den *= j;
  }
  return num / den;
}

Rational pushforward_point(int n, const KElement& x) {
  require_plain(x, "pushforward_point");
  if (x.ring().factors != std::vector<int>{n}) {
    throw DescriptorMismatch("pushforward_point: class is not on P" +
                             std::to_string(n));
  }
  const auto w = difference_weights(n);
  Rational total = 0;
  for (const auto& [index, c] : x.terms()) {
    total += c * Rational(w[static_cast<std::size_t>(index.exps[0])]);
  }
  return total;
}

KElement pushforward_relative(int m, int n, const KElement& x) {
  require_plain(x, "pushforward_relative");
  if (x.ring().factors != std::vector<int>{m, n}) {
    throw DescriptorMismatch("pushforward_relative: class is not on P" +
                             std::to_string(m) + " x P" + std::to_string(n));
  }
  RingDescriptor base{{m}, {}, x.ring().inverted_prime};
  const auto w = difference_weights(n);
  KElement::Terms terms;
  for (const auto& [index, c] : x.terms()) {
    terms[BasisIndex{{index.exps[0]}, 0}] +=
        c * Rational(w[static_cast<std::size_t>(index.exps[1])]);
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  return KElement::from_terms(base, std::move(terms));
}

KElement pullback_relative(int n, const KElement& y) {
  require_plain(y, "pullback_relative");
  if (y.ring().factors.size() != 1) {
    throw DescriptorMismatch("pullback_relative: base must be P^m");
  }
  RingDescriptor total{{y.ring().factors[0], n}, {}, y.ring().inverted_prime};
  KElement::Terms terms;
  for (const auto& [index, c] : y.terms()) {
    terms.emplace(BasisIndex{{index.exps[0], 0}, 0}, c);
  }
  return KElement::from_terms(total, std::move(terms));
}

SplitClass omega_class(int n, const RingDescriptor& ring) {
  if (ring.factors != std::vector<int>{n}) {
    throw DescriptorMismatch("omega_class: ring is not P" + std::to_string(n));
  }
  SplitClass out(ring);
  out.add({-1}, 0, n + 1);
  out.add({0}, 0, -1);
  return out;
}

SplitClass omega_class_relative(int m, int n, const RingDescriptor& ring) {
  if (ring.factors != std::vector<int>{m, n}) {
    throw DescriptorMismatch("omega_class_relative: ring is not P" +
                             std::to_string(m) + " x P" + std::to_string(n));
  }
  SplitClass out(ring);
  out.add({0, -1}, 0, n + 1);
  out.add({0, 0}, 0, -1);
  return out;
}

namespace {

SplitClass prepare(const SplitClass& e, const std::vector<int>& factors, int p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (e.ring().factors != factors || e.ring().equivariant()) {
    throw DescriptorMismatch("bundle lives on " + e.ring().describe());
  }
  if (e.ring().inverted_prime && *e.ring().inverted_prime != p) {
    throw DescriptorMismatch("bundle ring inverts a different prime");
  }
  return e.rebase(RingDescriptor{factors, {}, p});
}

}  // namespace

VerificationReport verify_arr(int n, int p, const SplitClass& bundle) {
  const SplitClass e = prepare(bundle, {n}, p);
  const RingDescriptor& ring = e.ring();
  const RingDescriptor point = RingDescriptor::point().with_inverted_prime(p);

  VerificationReport report;
  report.kind = "arr";
  report.id = "arr-n" + std::to_string(n) + "-p" + std::to_string(p) + "-" +
              e.to_string();
  report.params = {{"n", n}, {"p", p}, {"bundle", e.to_string()}};

  // psi^p is the identity on K_0(point) = Z.
  const Rational pushed = pushforward_point(n, e.evaluate());
  const KElement lhs = KElement::constant(point, pushed);

  const SplitClass omega = omega_class(n, ring);
  const KElement theta_omega = theta(p, omega);
  const KElement theta_omega_inv = invert(theta_omega, p);
  const KElement psi_e = adams(p, e);
  const KElement integrand = theta_omega_inv * psi_e;
  const KElement rhs =
      KElement::constant(point, pushforward_point(n, integrand));

  report.lhs = to_json(lhs);
  report.rhs = to_json(rhs);
  report.trace = {{"psi_p_E", to_json(psi_e)},
                  {"omega", omega.to_string()},
                  {"omega_class", to_json(omega.evaluate())},
                  {"theta_p_omega", to_json(theta_omega)},
                  {"theta_p_omega_inverse", to_json(theta_omega_inv)},
                  {"base_adams", "psi^p acts as the identity on K0(point)"}};
  if (pushed.get_den() != 1) {
    report.status = Status::fail;
    report.message = "lhs is not an integer";
  } else if (lhs == rhs) {
    report.status = Status::pass;
  } else {
    report.status = Status::fail;
    report.message = "lhs " + lhs.to_string() + " != rhs " + rhs.to_string();
  }
  return report;
}

VerificationReport verify_arr_relative(int m, int n, int p,
                                       const SplitClass& bundle) {
  const SplitClass e = prepare(bundle, {m, n}, p);
  const RingDescriptor& ring = e.ring();

  VerificationReport report;
  report.kind = "arr-relative";
  report.id = "arr-rel-m" + std::to_string(m) + "-n" + std::to_string(n) +
              "-p" + std::to_string(p) + "-" + e.to_string();
  report.params = {{"m", m}, {"n", n}, {"p", p}, {"bundle", e.to_string()}};

  const KElement pushed = pushforward_relative(m, n, e.evaluate());
  const KElement lhs = adams_substitution(p, pushed);

  const SplitClass omega = omega_class_relative(m, n, ring);
  const KElement theta_omega = theta(p, omega);
  const KElement theta_omega_inv = invert(theta_omega, p);
  const KElement psi_e = adams(p, e);
  const KElement rhs = pushforward_relative(m, n, theta_omega_inv * psi_e);

  report.lhs = to_json(lhs);
  report.rhs = to_json(rhs);
  report.trace = {{"pushforward_E", to_json(pushed)},
                  {"psi_p_E", to_json(psi_e)},
                  {"omega", omega.to_string()},
                  {"theta_p_omega", to_json(theta_omega)},
                  {"theta_p_omega_inverse", to_json(theta_omega_inv)},
                  {"base_adams", "psi^p = F_Y^*: h1 -> h1^p on K0(P^m)"}};
  if (lhs == rhs) {
    report.status = Status::pass;
  } else {
    report.status = Status::fail;
    report.message = "lhs " + lhs.to_string() + " != rhs " + rhs.to_string();
  }
  return report;
}

}  // namespace kfrob
