#pragma once

#include <map>
#include <string>

#include "swdeg/cyclotomic.hpp"

namespace swdeg {

/// Exact Laurent polynomial in the symbolic S^1 trace variable z, with
/// cyclotomic coefficients. Zero coefficients are never stored, so is_zero()
/// means identically zero. "g generic in S^1" is modelled by this type: a
/// trace is generically nonvanishing iff it is not the zero polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant) { set(0, Cyclotomic(constant)); }
  LaurentPoly(const Cyclotomic& constant) { set(0, constant); }

  static LaurentPoly z(long exponent = 1) {
    LaurentPoly p;
    p.set(exponent, Cyclotomic(1));
    return p;
  }
  /// z + z^-1, the symbolic trace of h on S^1.
  static LaurentPoly z_plus_zinv() {
    LaurentPoly p;
    p.set(1, Cyclotomic(1));
    p.set(-1, Cyclotomic(1));
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  Cyclotomic coeff(long exponent) const;
  const std::map<long, Cyclotomic>& terms() const { return coeffs_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly pow(unsigned long e) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::map<long, Cyclotomic> coeffs_;

  void set(long exponent, const Cyclotomic& value);
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace swdeg
