#include "kfrob/kring.hpp"

#include <sstream>

#include "kfrob/errors.hpp"

namespace kfrob {

namespace {

int mod(int a, int l) {
  int r = a % l;
  return r < 0 ? r + l : r;
}

}  // namespace

RingDescriptor RingDescriptor::with_inverted_prime(int k) const {
  RingDescriptor out = *this;
  out.inverted_prime = k;
  out.validate();
  return out;
}

RingDescriptor RingDescriptor::with_cyclic_order(int l) const {
  RingDescriptor out = *this;
  out.cyclic_order = l;
  out.validate();
  return out;
}

RingDescriptor RingDescriptor::without_cyclic_order() const {
  RingDescriptor out = *this;
  out.cyclic_order.reset();
  return out;
}

int RingDescriptor::total_dimension() const noexcept {
  int total = 0;
  for (int n : factors) total += n;
  return total;
}

void RingDescriptor::validate() const {
  for (int n : factors) {
    if (n < 0) throw InvalidArgument("fiber dimension must be >= 0");
  }
  if (cyclic_order && *cyclic_order < 2) {
    throw InvalidArgument("cyclic order must be >= 2");
  }
  if (inverted_prime && !is_prime(*inverted_prime)) {
    throw InvalidArgument("inverted_prime must be prime, got " +
                          std::to_string(*inverted_prime));
  }
}

std::string RingDescriptor::describe() const {
  std::ostringstream os;
  os << "K0(";
  if (factors.empty()) os << "pt";
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (j) os << " x ";
    os << "P" << factors[j];
  }
  os << ")";
  if (cyclic_order) os << "[C" << *cyclic_order << "]";
  if (inverted_prime) os << "[1/" << *inverted_prime << "]";
  return os.str();
}

KElement::KElement(RingDescriptor ring) : ring_(std::move(ring)) {
  ring_.validate();
}

KElement KElement::constant(const RingDescriptor& ring, const Rational& c) {
  return monomial(ring, BasisIndex{std::vector<int>(ring.factors.size(), 0), 0},
                  c);
}

KElement KElement::monomial(const RingDescriptor& ring, BasisIndex index,
                            const Rational& c) {
  KElement out(ring);
  if (index.exps.size() != ring.factors.size()) {
    throw InvalidArgument("basis index has wrong number of factors");
  }
  for (std::size_t j = 0; j < index.exps.size(); ++j) {
    if (index.exps[j] < 0) throw InvalidArgument("negative basis exponent");
    if (index.exps[j] > ring.factors[j]) return out;
  }
  if (!ring.equivariant() && index.chi != 0) {
    throw InvalidArgument("character on a non-equivariant ring");
  }
  index.chi = mod(index.chi, ring.characters());
  out.add_term(index, c);
  out.check_canonical();
  return out;
}

KElement KElement::from_terms(const RingDescriptor& ring, Terms terms) {
  KElement out(ring);
  for (auto& [index, c] : terms) {
    out += monomial(ring, index, c);
  }
  return out;
}

Rational KElement::coefficient(const BasisIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void KElement::require_same_ring(const KElement& other, const char* op) const {
  if (ring_ != other.ring_) {
    throw DescriptorMismatch(std::string(op) + ": " + ring_.describe() +
                             " vs " + other.ring_.describe());
  }
}

void KElement::add_term(const BasisIndex& index, const Rational& value) {
  Rational c = value;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void KElement::check_canonical() const {
  const long k = ring_.inverted_prime.value_or(1);
  for (const auto& [index, c] : terms_) {
    if (!is_power_of(c.get_den(), k)) {
      throw DenominatorContract("denominator " + c.get_den().get_str() +
                                " not invertible in " + ring_.describe());
    }
  }
}

KElement KElement::operator-() const {
  KElement out = *this;
  for (auto& [index, c] : out.terms_) c = -c;
  return out;
}

KElement& KElement::operator+=(const KElement& other) {
  require_same_ring(other, "add");
  for (const auto& [index, c] : other.terms_) add_term(index, c);
  return *this;
}

KElement& KElement::operator-=(const KElement& other) {
  require_same_ring(other, "sub");
  for (const auto& [index, c] : other.terms_) add_term(index, -c);
  return *this;
}

KElement operator*(const KElement& a, const KElement& b) {
  a.require_same_ring(b, "mul");
  const auto& ring = a.ring_;
  KElement out(ring);
  const int l = ring.characters();
  const std::size_t nf = ring.factors.size();
  BasisIndex index{std::vector<int>(nf), 0};
  for (const auto& [ia, ca] : a.terms_) {
    for (const auto& [ib, cb] : b.terms_) {
      bool truncated = false;
      for (std::size_t j = 0; j < nf; ++j) {
        index.exps[j] = ia.exps[j] + ib.exps[j];
        if (index.exps[j] > ring.factors[j]) {
          truncated = true;
          break;
        }
      }
      if (truncated) continue;
      index.chi = (ia.chi + ib.chi) % l;
      out.add_term(index, ca * cb);
    }
  }
  out.check_canonical();
  return out;
}

KElement& KElement::operator*=(const KElement& other) {
  *this = *this * other;
  return *this;
}

KElement& KElement::operator*=(const Rational& value) {
  Rational scalar = value;
  scalar.canonicalize();
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, c] : terms_) c *= scalar;
  check_canonical();
  return *this;
}

KElement KElement::pow(unsigned long e) const {
  KElement result = one(ring_);
  KElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string KElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool single = ring_.factors.size() == 1;
  for (const auto& [index, c] : terms_) {
    Rational mag = c;
    if (first) {
      if (c < 0) {
        os << "-";
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) mag = -c;
    }
    first = false;
    std::ostringstream mono;
    for (std::size_t j = 0; j < index.exps.size(); ++j) {
      if (index.exps[j] == 0) continue;
      if (mono.tellp() > 0) mono << "*";
      mono << "t";
      if (!single) mono << (j + 1);
      if (index.exps[j] > 1) mono << "^" << index.exps[j];
    }
    if (index.chi != 0) {
      if (mono.tellp() > 0) mono << "*";
      mono << "s^" << index.chi;
    }
    const std::string m = mono.str();
    if (m.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << m;
    } else {
      os << mag.get_str() << "*" << m;
    }
  }
  return os.str();
}

Rational rank(const KElement& x) {
  Rational total = 0;
  for (const auto& [index, c] : x.terms()) {
    bool at_zero = true;
    for (int e : index.exps) at_zero = at_zero && e == 0;
    if (at_zero) total += c;
  }
  return total;
}

KElement line_class(const RingDescriptor& ring, std::span<const int> exponents,
                    int chi) {
  if (exponents.size() != ring.factors.size()) {
    throw InvalidArgument("line class needs " +
                          std::to_string(ring.factors.size()) + " exponents");
  }
  if (!ring.equivariant() && chi != 0) {
    throw InvalidArgument("character on a non-equivariant ring");
  }
  KElement::Terms terms;
  terms.emplace(BasisIndex{{}, mod(chi, ring.characters())}, 1);
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    KElement::Terms next;
    for (const auto& [index, c] : terms) {
      for (int i = 0; i <= ring.factors[j]; ++i) {
        Integer b = binomial(exponents[j], i);
        if (b == 0) continue;
        BasisIndex extended = index;
        extended.exps.push_back(i);
        next.emplace(std::move(extended), c * b);
      }
    }
    terms = std::move(next);
  }
  return KElement::from_terms(ring, std::move(terms));
}

SeriesInverse invert_series(const KElement& x, int k) {
  const auto& ring = x.ring();
  if (ring.inverted_prime != k) {
    throw InvalidArgument("invert: ring " + ring.describe() +
                          " does not invert " + std::to_string(k));
  }
  const Rational r = rank(x);
  if (r == 0 || !is_power_of(r.get_num(), k) || !is_power_of(r.get_den(), k)) {
    throw NonUnitRank("rank " + r.get_str() + " is not a unit of Z[1/" +
                      std::to_string(k) + "]");
  }
  const KElement deviation = KElement::constant(ring, r) - x;
  const Rational inv_r = 1 / r;
  SeriesInverse out{KElement::zero(ring), 0};
  KElement term = KElement::constant(ring, inv_r);
  // The augmentation ideal of a non-equivariant ring vanishes in degree
  // total_dimension + 1, bounding the number of nonzero terms.
  const int max_terms = ring.total_dimension() + 1;
  for (int i = 0; i < max_terms && !term.is_zero(); ++i) {
    out.value += term;
    ++out.nonzero_terms;
    term = term * deviation * inv_r;
  }
  if (!term.is_zero() || !(out.value * x == KElement::one(ring))) {
    throw NonUnitRank("inversion series does not terminate in " +
                      ring.describe());
  }
  return out;
}

KElement invert(const KElement& x, int k) { return invert_series(x, k).value; }

KElement adams_substitution(int k, const KElement& x) {
  if (k < 1) throw InvalidArgument("adams degree must be >= 1");
  const auto& ring = x.ring();
  const std::size_t nf = ring.factors.size();
  // images[j] = h_j^k - 1, the image of t_j.
  std::vector<std::vector<KElement>> powers(nf);
  for (std::size_t j = 0; j < nf; ++j) {
    std::vector<int> e(nf, 0);
    e[j] = k;
    const KElement image = line_class(ring, e) - KElement::one(ring);
    powers[j].push_back(KElement::one(ring));
    for (int i = 1; i <= ring.factors[j]; ++i) {
      powers[j].push_back(powers[j].back() * image);
    }
  }
  KElement out(ring);
  for (const auto& [index, c] : x.terms()) {
    KElement term = KElement::monomial(
        ring, BasisIndex{std::vector<int>(nf, 0), index.chi * k}, c);
    for (std::size_t j = 0; j < nf; ++j) term *= powers[j][index.exps[j]];
    out += term;
  }
  return out;
}

KElement change_ring(const KElement& x, const RingDescriptor& target) {
  if (x.ring().factors != target.factors) {
    throw DescriptorMismatch("change_ring: geometry differs");
  }
  if (x.ring().equivariant() && x.ring().cyclic_order != target.cyclic_order) {
    for (const auto& [index, c] : x.terms()) {
      if (index.chi != 0) {
        throw DescriptorMismatch("change_ring would drop a character");
      }
    }
  }
  KElement::Terms terms;
  for (const auto& [index, c] : x.terms()) {
    terms.emplace(BasisIndex{index.exps, index.chi}, c);
  }
  return KElement::from_terms(target, std::move(terms));
}

}  // namespace kfrob
