#pragma once

#include <map>
#include <string>
#include <vector>

#include "swdeg/pin2.hpp"
#include "swdeg/virtual_rep.hpp"

namespace swdeg {

/// An element of R(Gamma) (x) R(Pin(2)): a finite map from irreducibles of
/// Gamma to Pin(2) coefficients. Decomposes uniquely as
/// alpha_0 - alpha~_0 c + sum_{k>=1} alpha_k h^k with the alphas in R(Gamma).
class EquivElem {
 public:
  explicit EquivElem(Group group) : group_(std::move(group)) {}

  static EquivElem one(Group group) { return term(std::move(group), 0, Pin2Elem(1)); }
  static EquivElem term(Group group, std::size_t irrep, Pin2Elem coeff);
  /// sum over irreps of vr-coefficient * lambda (x) scale.
  static EquivElem from_virtual(const VirtualRep& vr, const Pin2Elem& scale = Pin2Elem(1));

  const Group& group() const { return group_; }
  const std::map<std::size_t, Pin2Elem>& terms() const { return terms_; }
  Pin2Elem coeff(std::size_t irrep) const;
  void set_coeff(std::size_t irrep, Pin2Elem value);
  bool is_zero() const { return terms_.empty(); }

  EquivElem operator-() const;
  EquivElem& operator+=(const EquivElem& o);
  EquivElem& operator-=(const EquivElem& o);
  EquivElem& operator*=(const EquivElem& o);
  EquivElem& operator*=(const Pin2Elem& p);
  EquivElem pow(unsigned long e) const;

  friend EquivElem operator+(EquivElem a, const EquivElem& b) { return a += b; }
  friend EquivElem operator-(EquivElem a, const EquivElem& b) { return a -= b; }
  friend EquivElem operator*(EquivElem a, const EquivElem& b) { return a *= b; }
  friend EquivElem operator*(EquivElem a, const Pin2Elem& p) { return a *= p; }
  bool operator==(const EquivElem& o) const;
  bool operator!=(const EquivElem& o) const { return !(*this == o); }

  /// tr_{(gamma, J)} = sum over terms of chi_lambda(gamma) * tr_J(coeff).
  Cyclotomic trace_j(std::size_t cls) const;
  /// tr_{(gamma, g)} for symbolic g in S^1.
  LaurentPoly trace_symbolic(std::size_t cls) const;

  struct Decomposition {
    VirtualRep alpha0;
    VirtualRep alpha0_tilde;
    std::vector<VirtualRep> alpha_h;  // coefficient of h^k at index k-1
  };
  Decomposition decompose() const;
  static EquivElem assemble(const Decomposition& d);

  /// Termwise restriction along the embedding, Pin(2) coefficients carried.
  EquivElem restricted(const Embedding& e) const;

  std::string to_string() const;

 private:
  Group group_;
  std::map<std::size_t, Pin2Elem> terms_;  // sparse, no zero coefficients
};

/// lambda_{-1} of lambda (x) H: the element 1 (x) 1 - lambda (x) h +
/// lambda^2 (x) 1. Requires dim lambda = 1.
EquivElem wedge_star_h(const Group& group, std::size_t irrep);

/// lambda_{-1} of lambda (x) C~: the element 1 (x) 1 - lambda (x) c.
/// Requires dim lambda = 1.
EquivElem wedge_star_c(const Group& group, std::size_t irrep);

std::ostream& operator<<(std::ostream& os, const EquivElem& x);

}  // namespace swdeg
