#include "swdeg/laurent.hpp"

#include <ostream>
#include <sstream>

namespace swdeg {

void LaurentPoly::set(long exponent, const Cyclotomic& value) {
  if (value.is_zero()) {
    coeffs_.erase(exponent);
  } else {
    coeffs_[exponent] = value;
  }
}

Cyclotomic LaurentPoly::coeff(long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Cyclotomic(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) - c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly result;
  for (const auto& [ea, ca] : coeffs_) {
    for (const auto& [eb, cb] : o.coeffs_) {
      result.set(ea + eb, result.coeff(ea + eb) + ca * cb);
    }
  }
  *this = std::move(result);
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << "(" << c.to_string() << ")";
    } else {
      os << "(" << c.to_string() << ")*z^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

}  // namespace swdeg
