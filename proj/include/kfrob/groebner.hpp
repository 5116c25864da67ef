#pragma once

#include <optional>
#include <vector>

#include "kfrob/fp_poly.hpp"

namespace kfrob {

// Work limits for Buchberger's algorithm.  Exceeding either one throws
// BudgetExceeded; the defaults can be overridden through the environment
// variables KFROB_GROEBNER_MAX_PAIRS and KFROB_GROEBNER_MAX_BASIS.
struct GroebnerBudget {
  long max_pairs = 20000;
  long max_basis = 400;

  static GroebnerBudget from_environment();
};

// Reduced, monic Groebner basis in degrevlex.  S-pairs are processed in the
// order they are created, so the result and the work done are deterministic.
std::vector<FpPoly> groebner_basis(const std::vector<FpPoly>& generators,
                                   const GroebnerBudget& budget = {});

// Full reduction of f modulo the basis; the unique remainder when the basis
// is a Groebner basis.
FpPoly normal_form(const FpPoly& f, const std::vector<FpPoly>& basis);

bool in_ideal(const FpPoly& f, const std::vector<FpPoly>& basis);

// dim_{F_p} of R/(basis) when it is finite, nullopt otherwise.
std::optional<long> quotient_dimension(const std::vector<FpPoly>& basis,
                                       int nvars);

}  // namespace kfrob
