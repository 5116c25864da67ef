#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kfrob/kring.hpp"

namespace kfrob {

// A line class prod_j h_j^{exponents[j]} (exponents may be negative) twisted
// by the character sigma^chi.
struct LineIndex {
  std::vector<int> exponents;
  int chi = 0;

  auto operator<=>(const LineIndex&) const = default;
};

// A formal Z-combination of line classes.  Identical lines are merged and
// zero multiplicities dropped, so two presentations compare equal iff they
// are the same formal sum (not merely the same K-class).
class SplitClass {
 public:
  using Terms = std::map<LineIndex, long>;

  explicit SplitClass(RingDescriptor ring);

  static SplitClass line(const RingDescriptor& ring, std::vector<int> exponents,
                         int chi = 0, long multiplicity = 1);
  static SplitClass trivial(const RingDescriptor& ring, long rank);

  const RingDescriptor& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }

  SplitClass& add(std::vector<int> exponents, int chi, long multiplicity);
  SplitClass& operator+=(const SplitClass& other);
  friend SplitClass operator+(SplitClass a, const SplitClass& b) {
    return a += b;
  }
  SplitClass operator-() const;

  bool operator==(const SplitClass&) const = default;

  bool effective() const noexcept;
  long rank() const noexcept;

  KElement evaluate() const;

  // Same formal sum over another ring with the same geometry.
  SplitClass rebase(const RingDescriptor& ring) const;

  // Canonical text form, e.g. "2*h(-1) - 1*h(0)" or "1*h(1)@1".
  std::string to_string() const;

 private:
  RingDescriptor ring_;
  Terms terms_;
};

// Grammar (whitespace-insensitive):
//   class := [sign] term { sign term }
//   term  := [int "*"] "h(" int { "," int } ")" [ "@" int ]
// The exponent count must match the ring's factor count; "@c" requires an
// equivariant ring.  Errors carry the byte offset of the offending token.
SplitClass parse_split_class(std::string_view text, const RingDescriptor& ring);

}  // namespace kfrob
