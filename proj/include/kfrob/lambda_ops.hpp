#pragma once

#include <vector>

#include "kfrob/kring.hpp"
#include "kfrob/split_class.hpp"

namespace kfrob {

enum class OperationKind { adams, theta, lambda_i, lambda_minus_one };

struct OperationTag {
  OperationKind kind;
  int degree = 1;  // k for adams/theta, i for lambda_i; ignored otherwise
};

// psi^k: sum of m * line_class(k*a, k*c).
KElement adams(int k, const SplitClass& x);

// Bott class theta^k = prod (1 + L + ... + L^{k-1})^m.  Negative m needs the
// ring to invert k; the result then lives in K_0[1/k].
KElement theta(int k, const SplitClass& x);

KElement theta_inverse(int k, const SplitClass& x);

// Coefficients lambda^0 .. lambda^max_degree of prod (1 + L u)^m.
std::vector<KElement> lambda_series(const SplitClass& x, int max_degree);

KElement lambda_op(int i, const SplitClass& x);

// prod (1 - L)^m over an effective presentation.
KElement lambda_minus_one(const SplitClass& x);

KElement apply(const OperationTag& tag, const SplitClass& x);

}  // namespace kfrob
