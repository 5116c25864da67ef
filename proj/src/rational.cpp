#include "kfrob/rational.hpp"

namespace kfrob {

bool is_power_of(Integer den, long k) {
  if (den < 0) den = -den;
  if (den == 0) return false;
  if (k < 2) return den == 1;
  while (den % k == 0) den /= k;
  return den == 1;
}

Integer binomial(const Integer& a, long i) {
  if (i < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long j = 0; j < i; ++j) {
    num *= a - j;
    den *= j + 1;
  }
  return num / den;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace kfrob
