#include "swdeg/pin2.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "swdeg/errors.hpp"

namespace swdeg {

void Pin2Elem::set_h(std::size_t power, const mpz_class& value) {
  if (h_.size() <= power) h_.resize(power + 1, mpz_class(0));
  h_[power] = value;
  trim();
}

void Pin2Elem::trim() {
  while (h_.size() > 1 && h_.back() == 0) h_.pop_back();
}

Pin2Elem Pin2Elem::h(unsigned long power) {
  Pin2Elem p;
  p.set_h(power, mpz_class(1));
  return p;
}

Pin2Elem Pin2Elem::c() {
  Pin2Elem p;
  p.c_ = 1;
  return p;
}

Pin2Elem Pin2Elem::from_parts(std::vector<mpz_class> h_coeffs, mpz_class c_coeff) {
  Pin2Elem p;
  p.h_ = std::move(h_coeffs);
  if (p.h_.empty()) p.h_.push_back(mpz_class(0));
  p.c_ = std::move(c_coeff);
  p.trim();
  return p;
}

mpz_class Pin2Elem::h_coeff(std::size_t power) const {
  return power < h_.size() ? h_[power] : mpz_class(0);
}

bool Pin2Elem::is_zero() const {
  return c_ == 0 && h_.size() == 1 && h_[0] == 0;
}

Pin2Elem Pin2Elem::operator-() const {
  Pin2Elem r = *this;
  for (auto& v : r.h_) v = -v;
  r.c_ = -r.c_;
  return r;
}

Pin2Elem& Pin2Elem::operator+=(const Pin2Elem& o) {
  if (h_.size() < o.h_.size()) h_.resize(o.h_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.h_.size(); ++i) h_[i] += o.h_[i];
  c_ += o.c_;
  trim();
  return *this;
}

Pin2Elem& Pin2Elem::operator-=(const Pin2Elem& o) { return *this += -o; }

Pin2Elem& Pin2Elem::operator*=(const Pin2Elem& o) {
  // (p + a c)(q + b c) = p q + a b + a (q - q0) + b (p - p0)
  //                      + (a q0 + b p0) c.
  const std::vector<mpz_class>& p = h_;
  const std::vector<mpz_class>& q = o.h_;
  const mpz_class& a = c_;
  const mpz_class& b = o.c_;
  std::vector<mpz_class> prod(p.size() + q.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) prod[i + j] += p[i] * q[j];
  }
  prod[0] += a * b;
  if (a != 0) {
    if (prod.size() < q.size()) prod.resize(q.size(), mpz_class(0));
    for (std::size_t j = 1; j < q.size(); ++j) prod[j] += a * q[j];
  }
  if (b != 0) {
    if (prod.size() < p.size()) prod.resize(p.size(), mpz_class(0));
    for (std::size_t i = 1; i < p.size(); ++i) prod[i] += b * p[i];
  }
  mpz_class new_c = a * q[0] + b * p[0];
  h_ = std::move(prod);
  c_ = std::move(new_c);
  trim();
  return *this;
}

Pin2Elem& Pin2Elem::operator*=(const mpz_class& s) {
  for (auto& v : h_) v *= s;
  c_ *= s;
  trim();
  return *this;
}

Pin2Elem Pin2Elem::pow(unsigned long e) const {
  Pin2Elem result(1);
  Pin2Elem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

mpz_class Pin2Elem::trace_j() const { return h_[0] - c_; }

LaurentPoly Pin2Elem::trace_symbolic() const {
  LaurentPoly t(Cyclotomic(mpq_class(h_[0] + c_)));
  LaurentPoly zz = LaurentPoly::z_plus_zinv();
  LaurentPoly zpow = zz;
  for (std::size_t k = 1; k < h_.size(); ++k) {
    if (h_[k] != 0) t += LaurentPoly(Cyclotomic(mpq_class(h_[k]))) * zpow;
    if (k + 1 < h_.size()) zpow *= zz;
  }
  return t;
}

std::string Pin2Elem::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const mpz_class& coeff, const std::string& sym) {
    if (coeff == 0) return;
    mpz_class abs = coeff < 0 ? mpz_class(-coeff) : coeff;
    if (first) {
      if (coeff < 0) os << "-";
      first = false;
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    if (sym.empty()) {
      os << abs;
    } else {
      if (abs != 1) os << abs;
      os << sym;
    }
  };
  emit(h_[0], "");
  for (std::size_t k = 1; k < h_.size(); ++k) {
    emit(h_[k], k == 1 ? "h" : "h^" + std::to_string(k));
  }
  emit(c_, "c");
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Pin2Elem& p) {
  return os << p.to_string();
}

Pin2Elem Pin2Elem::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg, 1, pos + 1);
  };
  auto parse_uint = [&]() -> mpz_class {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return mpz_class(std::string(text.substr(start, pos - start)));
  };

  Pin2Elem sum;
  skip_ws();
  if (pos >= text.size()) fail("empty Pin(2) expression");
  bool negate = false;
  if (text[pos] == '-') {
    negate = true;
    ++pos;
  } else if (text[pos] == '+') {
    ++pos;
  }
  while (true) {
    skip_ws();
    mpz_class coeff(1);
    bool saw_number = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = parse_uint();
      saw_number = true;
    }
    unsigned long h_power = 0;
    bool c_parity = false;
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
      if (pos < text.size() && (text[pos] == 'h' || text[pos] == 'H')) {
        ++pos;
        unsigned long e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          e = parse_uint().get_ui();
        }
        h_power += e;
        saw_factor = true;
        continue;
      }
      if (pos < text.size() && (text[pos] == 'c' || text[pos] == 'C')) {
        ++pos;
        c_parity = !c_parity;
        saw_factor = true;
        continue;
      }
      break;
    }
    if (!saw_number && !saw_factor) fail("expected term");
    if (negate) coeff = -coeff;
    // c h^k = h^k for k >= 1; c^2 = 1.
    Pin2Elem term;
    if (h_power > 0) {
      term.set_h(h_power, coeff);
    } else if (c_parity) {
      term.c_ = coeff;
    } else {
      term.set_h(0, coeff);
    }
    sum += term;
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == '+') {
      negate = false;
      ++pos;
    } else if (text[pos] == '-') {
      negate = true;
      ++pos;
    } else {
      fail(std::string("unexpected character '") + std::string(1, text[pos]) + "'");
    }
  }
  return sum;
}

}  // namespace swdeg
