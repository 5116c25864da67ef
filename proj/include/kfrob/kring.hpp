#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kfrob/rational.hpp"

namespace kfrob {

// Identifies K_0 of a test geometry: a point, P^n, or P^m x P^n, optionally
// tensored with the representation ring of C_l (trivial action) and with
// coefficients in Z[1/k].
struct RingDescriptor {
  std::vector<int> factors;
  std::optional<int> cyclic_order;
  std::optional<int> inverted_prime;

  static RingDescriptor point() { return {}; }
  static RingDescriptor projective(int n) { return {{n}, {}, {}}; }
  static RingDescriptor product(int m, int n) { return {{m, n}, {}, {}}; }

  RingDescriptor with_inverted_prime(int k) const;
  RingDescriptor with_cyclic_order(int l) const;
  RingDescriptor without_cyclic_order() const;

  bool equivariant() const noexcept { return cyclic_order.has_value(); }
  int characters() const noexcept { return cyclic_order.value_or(1); }
  // Sum of fiber dimensions; the augmentation ideal's nilpotency bound.
  int total_dimension() const noexcept;

  // Throws InvalidArgument on negative dimensions, l < 2 or a non-prime k.
  void validate() const;

  std::string describe() const;

  bool operator==(const RingDescriptor&) const = default;
};

// Basis element prod_j t_j^{exps[j]} * sigma^chi, with t_j = h_j - 1.
struct BasisIndex {
  std::vector<int> exps;
  int chi = 0;

  auto operator<=>(const BasisIndex&) const = default;
};

// An element of K_0(ring) in the nilpotent basis.  Canonical form: no stored
// zeros, every denominator a power of the inverted prime.
class KElement {
 public:
  using Terms = std::map<BasisIndex, Rational>;

  explicit KElement(RingDescriptor ring);

  static KElement zero(const RingDescriptor& ring) { return KElement(ring); }
  static KElement one(const RingDescriptor& ring) { return constant(ring, 1); }
  static KElement constant(const RingDescriptor& ring, const Rational& c);
  static KElement monomial(const RingDescriptor& ring, BasisIndex index,
                           const Rational& c);
  // Validates bounds and denominators; used by deserialization.
  static KElement from_terms(const RingDescriptor& ring, Terms terms);

  const RingDescriptor& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  Rational coefficient(const BasisIndex& index) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  KElement operator-() const;
  KElement& operator+=(const KElement& other);
  KElement& operator-=(const KElement& other);
  KElement& operator*=(const KElement& other);
  KElement& operator*=(const Rational& scalar);

  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  friend KElement operator*(const KElement& a, const KElement& b);
  friend KElement operator*(KElement a, const Rational& s) { return a *= s; }
  friend KElement operator*(const Rational& s, KElement a) { return a *= s; }

  bool operator==(const KElement& other) const = default;

  KElement pow(unsigned long e) const;

  // Human-readable form, e.g. "1/4 + 3/8*t1".
  std::string to_string() const;

 private:
  void require_same_ring(const KElement& other, const char* op) const;
  void add_term(const BasisIndex& index, const Rational& c);
  void check_canonical() const;

  RingDescriptor ring_;
  Terms terms_;
};

// Augmentation t_j -> 0, sigma -> 1.
Rational rank(const KElement& x);

// prod_j h_j^{a_j} * sigma^chi expanded as a truncated binomial series.
KElement line_class(const RingDescriptor& ring, std::span<const int> exponents,
                    int chi = 0);

struct SeriesInverse {
  KElement value;
  int nonzero_terms = 0;
};

// Inverse by the series 1/r + (r - x)/r^2 + (r - x)^2/r^3 + ..., r = rank(x).
// Requires ring.inverted_prime == k and rank(x) = +-k^s.
SeriesInverse invert_series(const KElement& x, int k);
KElement invert(const KElement& x, int k);

// Ring endomorphism h_j -> h_j^k, sigma -> sigma^k on evaluated classes.
// For k = p this is pullback by the absolute Frobenius.
KElement adams_substitution(int k, const KElement& x);

// Re-expresses x in a ring differing only in cyclic order / inverted prime.
// Fails if a denominator or a nontrivial character would be lost.
KElement change_ring(const KElement& x, const RingDescriptor& target);

}  // namespace kfrob
