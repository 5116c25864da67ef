#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kfrob {

// Arbitrary-precision integers and reduced fractions (denominator > 0).
// GMP keeps mpq_class canonical after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// True when den is a power of k (k^0 = 1 included).
bool is_power_of(Integer den, long k);

// Generalized binomial coefficient C(a, i) for any integer a and i >= 0.
Integer binomial(const Integer& a, long i);

Integer ipow(const Integer& base, unsigned long e);

bool is_prime(long n);

std::string to_string(const Rational& q);

}  // namespace kfrob
