#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace swdeg {

long gcd_long(long a, long b);

/// lcm with overflow check; throws PreconditionError if the result would not
/// fit (conductors in this library stay tiny, so hitting this is a bug in the
/// caller's input).
long lcm_long(long a, long b);

long euler_phi(long n);

/// Divisors of n in increasing order.
std::vector<long> divisors(long n);

bool is_prime(long n);

/// 2^e as an exact integer, e >= 0.
mpz_class pow2(unsigned long e);

mpz_class ipow(const mpz_class& base, unsigned long e);

/// Nonnegative remainder of a mod n (n >= 1).
long mod_long(long a, long n);

}  // namespace swdeg
