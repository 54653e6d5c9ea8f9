#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "swdeg/laurent.hpp"

namespace swdeg {

/// An element of R(Pin(2)) = Z[h] (+) Z*c, the normal form under the
/// relations c^2 = 1 and c*h = h. Stored as an integer polynomial in h plus
/// an integer multiple of c; products are renormalized eagerly via
/// c*p(h) = p(0)*c + (p(h) - p(0)).
class Pin2Elem {
 public:
  Pin2Elem() = default;
  Pin2Elem(long constant) { set_h(0, mpz_class(constant)); }
  Pin2Elem(const mpz_class& constant) { set_h(0, constant); }

  static Pin2Elem h(unsigned long power = 1);
  static Pin2Elem c();
  static Pin2Elem from_parts(std::vector<mpz_class> h_coeffs, mpz_class c_coeff);

  /// Coefficients of 1, h, h^2, ... (trailing zeros trimmed; index 0 is the
  /// constant term and always present).
  const std::vector<mpz_class>& h_coeffs() const { return h_; }
  const mpz_class& c_coeff() const { return c_; }
  const mpz_class& constant() const { return h_[0]; }
  mpz_class h_coeff(std::size_t power) const;
  std::size_t h_degree() const { return h_.size() - 1; }

  bool is_zero() const;

  Pin2Elem operator-() const;
  Pin2Elem& operator+=(const Pin2Elem& o);
  Pin2Elem& operator-=(const Pin2Elem& o);
  Pin2Elem& operator*=(const Pin2Elem& o);
  Pin2Elem& operator*=(const mpz_class& s);
  Pin2Elem pow(unsigned long e) const;

  friend Pin2Elem operator+(Pin2Elem a, const Pin2Elem& b) { return a += b; }
  friend Pin2Elem operator-(Pin2Elem a, const Pin2Elem& b) { return a -= b; }
  friend Pin2Elem operator*(Pin2Elem a, const Pin2Elem& b) { return a *= b; }
  friend Pin2Elem operator*(Pin2Elem a, const mpz_class& s) { return a *= s; }
  friend Pin2Elem operator*(const mpz_class& s, Pin2Elem a) { return a *= s; }
  friend bool operator==(const Pin2Elem& a, const Pin2Elem& b) {
    return a.h_ == b.h_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Pin2Elem& a, const Pin2Elem& b) { return !(a == b); }

  /// Trace at the point J outside S^1: h -> 0, c -> -1.
  mpz_class trace_j() const;
  /// Symbolic trace on S^1: h -> z + z^-1, c -> 1.
  LaurentPoly trace_symbolic() const;

  /// Renders as e.g. "2 + 5h - h^2 - 3c".
  std::string to_string() const;
  /// Accepts integer polynomials in h plus c ("512 - 512c", "2 + 5h - h^2").
  /// Unnormalized products like "h*c" are normalized via ch = h, never
  /// rejected.
  static Pin2Elem parse(std::string_view text);

 private:
  std::vector<mpz_class> h_{mpz_class(0)};
  mpz_class c_{0};

  void set_h(std::size_t power, const mpz_class& value);
  void trim();
};

std::ostream& operator<<(std::ostream& os, const Pin2Elem& p);

}  // namespace swdeg
