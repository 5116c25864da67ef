#pragma once

#include <cstdint>
#include <random>

#include "kfrob/split_class.hpp"

namespace kfrob {

// Seeded source of random test data.  Only raw mt19937_64 output is used
// (std distributions are implementation-defined), so a seed yields the same
// classes on every platform.
class ClassGenerator {
 public:
  explicit ClassGenerator(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  long uniform(long lo, long hi);

  // 1..max_terms lines with exponents in [-max_exp, max_exp] and nonzero
  // multiplicities in [-max_mult, max_mult] (positive only when effective).
  SplitClass split_class(const RingDescriptor& ring, int max_terms,
                         int max_exp, int max_mult, bool effective);

  // Exactly `rank` line summands with exponents in [-max_exp, max_exp].
  SplitClass effective_of_rank(const RingDescriptor& ring, long rank,
                               int max_exp);

  // Adds a random multiple of the relation (h_j - 1)^{n_j + 1} * L in one
  // projective factor; the K-class is unchanged.
  SplitClass perturb_by_relation(const SplitClass& x, int max_exp);

 private:
  std::mt19937_64 engine_;
};

}  // namespace kfrob
