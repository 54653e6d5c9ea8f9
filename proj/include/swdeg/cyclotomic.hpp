#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace swdeg {

/// The N-th cyclotomic polynomial, monic, coefficients in ascending degree.
/// Computed by exact division of x^N - 1 by Phi_d over the proper divisors d;
/// results are memoized.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

/// An exact element of the cyclotomic field Q(zeta_N).
///
/// Representation: conductor N plus rational coefficients over the power
/// basis 1, zeta, ..., zeta^{phi(N)-1}, always the canonical remainder modulo
/// Phi_N. Purely rational values are stored at conductor 1, so zero and
/// rational tests are direct. Values at different conductors compare equal
/// iff their lifts to the lcm conductor agree coefficientwise.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1, mpq_class(0)) {}
  Cyclotomic(long v) : conductor_(1), coeffs_(1, mpq_class(v)) {}
  Cyclotomic(const mpz_class& v) : conductor_(1), coeffs_(1, mpq_class(v)) {}
  Cyclotomic(const mpq_class& v) : conductor_(1), coeffs_(1, v) {}

  /// zeta_n^k (k arbitrary, reduced mod n). The stored conductor shrinks to
  /// n/gcd(k,n); rationals end up at conductor 1.
  static Cyclotomic root(long n, long k);

  /// Canonicalized value of a polynomial sum(coeffs[e] * zeta_n^e).
  static Cyclotomic from_poly(long n, std::vector<mpq_class> coeffs);

  long conductor() const { return conductor_; }
  /// Coefficient of zeta^e in the power basis, 0 <= e < phi(conductor()).
  const mpq_class& coeff(std::size_t e) const { return coeffs_[e]; }
  std::size_t basis_size() const { return coeffs_.size(); }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  /// Throws PreconditionError when the value is not rational.
  const mpq_class& rational_value() const;
  bool is_integer() const;

  Cyclotomic conj() const;
  Cyclotomic pow(unsigned long e) const;

  /// Same value re-expressed in Q(zeta_L); requires conductor() | L.
  Cyclotomic lifted(long target_conductor) const;

  /// True iff the value lies in the subfield Q(zeta_n) (Galois invariance
  /// under the subgroup fixing zeta_n).
  bool lies_in_conductor(long n) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Renders as e.g. "1/3 + 2*z5^2 - z5^3"; parse() accepts the same grammar.
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

 private:
  long conductor_;
  std::vector<mpq_class> coeffs_;

  void shrink_rational();
  /// Canonical coefficient vector of this value in Q(zeta_target), always of
  /// size phi(target) (no rational shrink). Requires conductor() | target.
  std::vector<mpq_class> lifted_vec(long target) const;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& v);

}  // namespace swdeg
