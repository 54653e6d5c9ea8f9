#include "swdeg/cyclotomic.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "swdeg/errors.hpp"
#include "swdeg/numutil.hpp"

namespace swdeg {

namespace {

// Exact division of integer polynomials, divisor monic. Quotient only.
std::vector<mpz_class> divide_monic(const std::vector<mpz_class>& num,
                                    const std::vector<mpz_class>& den) {
  std::vector<mpz_class> rem = num;
  const std::size_t dd = den.size() - 1;
  std::vector<mpz_class> quo(num.size() - dd, mpz_class(0));
  for (std::size_t i = rem.size(); i-- > dd;) {
    mpz_class f = rem[i];
    if (f != 0) {
      quo[i - dd] = f;
      for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den[j];
    }
  }
  return quo;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<mpz_class>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::function<const std::vector<mpz_class>&(long)> get =
      [&](long m) -> const std::vector<mpz_class>& {
    auto hit = cache.find(m);
    if (hit != cache.end()) return hit->second;
    std::vector<mpz_class> poly(m + 1, mpz_class(0));
    poly[0] = -1;
    poly[m] = 1;
    for (long d : divisors(m)) {
      if (d == m) continue;
      poly = divide_monic(poly, get(d));
    }
    return cache.emplace(m, std::move(poly)).first->second;
  };
  return get(n);
}

Cyclotomic Cyclotomic::from_poly(long n, std::vector<mpq_class> coeffs) {
  if (n < 1) throw PreconditionError("conductor must be >= 1");
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;  // euler_phi(n)
  // Remainder modulo the monic Phi_n.
  for (std::size_t i = coeffs.size(); i-- > deg;) {
    if (coeffs[i] != 0) {
      mpq_class f = coeffs[i];
      for (std::size_t j = 0; j < phi.size(); ++j) {
        coeffs[i - deg + j] -= f * mpq_class(phi[j]);
      }
    }
  }
  coeffs.resize(deg);
  Cyclotomic r;
  r.conductor_ = n;
  r.coeffs_ = std::move(coeffs);
  r.shrink_rational();
  return r;
}

void Cyclotomic::shrink_rational() {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return;
  }
  coeffs_.resize(1);
  conductor_ = 1;
}

Cyclotomic Cyclotomic::root(long n, long k) {
  if (n < 1) throw PreconditionError("root order must be >= 1");
  long e = mod_long(k, n);
  if (e == 0) return Cyclotomic(1);
  long g = gcd_long(e, n);
  n /= g;
  e /= g;
  std::vector<mpq_class> coeffs(e + 1, mpq_class(0));
  coeffs[e] = 1;
  return from_poly(n, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
  return conductor_ == 1 && coeffs_[0] == 0;
}

const mpq_class& Cyclotomic::rational_value() const {
  if (conductor_ != 1) {
    throw PreconditionError("cyclotomic value is not rational: " + to_string());
  }
  return coeffs_[0];
}

bool Cyclotomic::is_integer() const {
  return conductor_ == 1 && coeffs_[0].get_den() == 1;
}

std::vector<mpq_class> Cyclotomic::lifted_vec(long target) const {
  if (target % conductor_ != 0) {
    throw PreconditionError("lift target must be a conductor multiple");
  }
  long step = target / conductor_;
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(
                                    (coeffs_.size() - 1) * step + 1),
                                mpq_class(0));
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    coeffs[e * step] = coeffs_[e];
  }
  const auto& phi = cyclotomic_polynomial(target);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = coeffs.size(); i-- > deg;) {
    if (coeffs[i] != 0) {
      mpq_class f = coeffs[i];
      for (std::size_t j = 0; j < phi.size(); ++j) {
        coeffs[i - deg + j] -= f * mpq_class(phi[j]);
      }
    }
  }
  coeffs.resize(deg);
  return coeffs;
}

Cyclotomic Cyclotomic::lifted(long target) const {
  if (target == conductor_) return *this;
  Cyclotomic r;
  r.conductor_ = target;
  r.coeffs_ = lifted_vec(target);
  r.shrink_rational();
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ == 1) return *this;
  std::vector<mpq_class> coeffs(conductor_, mpq_class(0));
  coeffs[0] = coeffs_[0];
  for (std::size_t e = 1; e < coeffs_.size(); ++e) {
    coeffs[conductor_ - e] += coeffs_[e];
  }
  return from_poly(conductor_, std::move(coeffs));
}

Cyclotomic Cyclotomic::pow(unsigned long e) const {
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Cyclotomic::lies_in_conductor(long n) const {
  if (n < 1) throw PreconditionError("conductor must be >= 1");
  if (conductor_ == 1) return true;
  long lcm = lcm_long(conductor_, n);
  Cyclotomic lifted_self = lifted(lcm);
  // Invariance under every Galois automorphism zeta -> zeta^t fixing zeta_n.
  for (long t = 1; t < lcm; ++t) {
    if (t % n != 1 % n) continue;
    if (gcd_long(t, lcm) != 1) continue;
    std::vector<mpq_class> coeffs(lcm, mpq_class(0));
    for (std::size_t e = 0; e < lifted_self.coeffs_.size(); ++e) {
      coeffs[mod_long(static_cast<long>(e) * t, lcm)] += lifted_self.coeffs_[e];
    }
    if (from_poly(lcm, std::move(coeffs)) != lifted_self) return false;
  }
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  long lcm = lcm_long(conductor_, o.conductor_);
  std::vector<mpq_class> a = lifted_vec(lcm);
  std::vector<mpq_class> b = o.lifted_vec(lcm);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  Cyclotomic r;
  r.conductor_ = lcm;
  r.coeffs_ = std::move(a);
  r.shrink_rational();
  *this = std::move(r);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  long lcm = lcm_long(conductor_, o.conductor_);
  std::vector<mpq_class> a = lifted_vec(lcm);
  std::vector<mpq_class> b = o.lifted_vec(lcm);
  std::vector<mpq_class> prod(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  *this = from_poly(lcm, std::move(prod));
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  long lcm = lcm_long(a.conductor_, b.conductor_);
  return a.lifted_vec(lcm) == b.lifted_vec(lcm);
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const mpq_class& coeff, long exp) {
    if (coeff == 0) return;
    mpq_class abs = coeff < 0 ? mpq_class(-coeff) : coeff;
    if (first) {
      if (coeff < 0) os << "-";
      first = false;
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    if (exp == 0) {
      os << abs;
      return;
    }
    if (abs != 1) os << abs << "*";
    os << "z" << conductor_;
    if (exp != 1) os << "^" << exp;
  };
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    emit(coeffs_[e], static_cast<long>(e));
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& v) {
  return os << v.to_string();
}

namespace {

struct CycParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, pos + 1);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  long parse_long() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected integer");
    }
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v < 0) fail("integer too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  mpq_class parse_rational() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected number");
    std::string num(text.substr(start, pos - start));
    if (consume('/')) {
      skip_ws();
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) fail("expected denominator");
      std::string den(text.substr(dstart, pos - dstart));
      if (mpz_class(den) == 0) fail("zero denominator");
      mpq_class q(num + "/" + den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  // zterm := 'z' <n> ['^' <k>]
  Cyclotomic parse_zterm() {
    ++pos;  // 'z'
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected root order after 'z'");
    }
    long n = parse_long();
    if (n < 1) fail("root order must be >= 1");
    long k = 1;
    if (consume('^')) k = parse_long();
    return Cyclotomic::root(n, k);
  }

  // term := rational ['*' zterm] | zterm
  Cyclotomic parse_term() {
    skip_ws();
    if (pos < text.size() && text[pos] == 'z') return parse_zterm();
    mpq_class coeff = parse_rational();
    skip_ws();
    if (consume('*')) {
      skip_ws();
      if (pos >= text.size() || text[pos] != 'z') fail("expected 'z' token after '*'");
      return Cyclotomic(coeff) * parse_zterm();
    }
    if (pos < text.size() && text[pos] == 'z') {
      return Cyclotomic(coeff) * parse_zterm();
    }
    return Cyclotomic(coeff);
  }

  Cyclotomic parse_expr() {
    Cyclotomic sum(0);
    bool negate = false;
    skip_ws();
    if (consume('-')) negate = true;
    else consume('+');
    while (true) {
      Cyclotomic t = parse_term();
      sum += negate ? -t : t;
      skip_ws();
      if (pos >= text.size()) break;
      if (consume('+')) negate = false;
      else if (consume('-')) negate = true;
      else fail("unexpected character");
    }
    return sum;
  }
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) {
  CycParser p{text};
  p.skip_ws();
  if (p.pos >= text.size()) p.fail("empty expression");
  Cyclotomic v = p.parse_expr();
  return v;
}

}  // namespace swdeg
