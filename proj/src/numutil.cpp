#include "swdeg/numutil.hpp"

#include <numeric>

#include "swdeg/errors.hpp"

namespace swdeg {

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) {
  if (a == 0 || b == 0) return 0;
  long g = std::gcd(a, b);
  long q = a / g;
  if (q > (1L << 40) / b) {
    throw PreconditionError("conductor lcm too large: lcm(" +
                            std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  return q * b;
}

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

mpz_class pow2(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

mpz_class ipow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

long mod_long(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace swdeg
