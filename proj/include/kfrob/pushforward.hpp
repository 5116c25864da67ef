#pragma once

#include "kfrob/kring.hpp"
#include "kfrob/report.hpp"
#include "kfrob/split_class.hpp"

namespace kfrob {

// Euler characteristic of O(a) on P^n: C(n + a, n) as a polynomial in a.
Integer chi(int n, long a);

// R f_* for f: P^n -> point, via t^i -> i-th forward difference of chi(n, .)
// at 0.
Rational pushforward_point(int n, const KElement& x);

// R f_* for the projection P^m x P^n -> P^m (second factor is the fiber).
KElement pushforward_relative(int m, int n, const KElement& x);

// Pullback along P^m x P^n -> P^m.
KElement pullback_relative(int n, const KElement& y);

// Euler sequence: (n+1) h^{-1} - 1 on P^n.
SplitClass omega_class(int n, const RingDescriptor& ring);
// Same class in the fiber variable h_2 of P^m x P^n.
SplitClass omega_class_relative(int m, int n, const RingDescriptor& ring);

// Checks psi^p(f_* E) = f_*(theta^p(Omega_f)^{-1} psi^p(E)) for f: P^n -> pt.
// E must live in K_0(P^n)[1/p].
VerificationReport verify_arr(int n, int p, const SplitClass& e);

// The same identity for P^m x P^n -> P^m; psi^p on the base is the
// Frobenius substitution h_1 -> h_1^p.
VerificationReport verify_arr_relative(int m, int n, int p, const SplitClass& e);

}  // namespace kfrob
