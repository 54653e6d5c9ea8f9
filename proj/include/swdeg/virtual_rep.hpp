#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "swdeg/group.hpp"

namespace swdeg {

/// An element of R(Gamma): an integer vector over the irreducibles of a
/// finite group. Coefficients may be negative (virtual representations) but
/// never rational — integrality is enforced at this boundary.
class VirtualRep {
 public:
  explicit VirtualRep(Group group) : group_(std::move(group)) {}

  static VirtualRep irrep(Group group, std::size_t index, mpz_class mult = 1);
  static VirtualRep trivial(Group group) { return irrep(std::move(group), 0); }
  /// The class of the regular representation: coefficient dim(lambda) at
  /// every irrep; character #Gamma at e and 0 elsewhere.
  static VirtualRep regular(Group group);

  const Group& group() const { return group_; }
  mpz_class coeff(std::size_t irrep) const;
  const std::map<std::size_t, mpz_class>& coeffs() const { return coeffs_; }
  void set_coeff(std::size_t irrep, mpz_class value);

  mpz_class virtual_dim() const;

  /// Character value at the class: sum of coeff * chi_irrep(cls).
  Cyclotomic trace(std::size_t cls) const;
  std::vector<Cyclotomic> character() const;

  VirtualRep operator-() const;
  VirtualRep& operator+=(const VirtualRep& o);
  VirtualRep& operator-=(const VirtualRep& o);
  VirtualRep& operator*=(const mpz_class& s);

  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
  friend VirtualRep operator*(VirtualRep a, const mpz_class& s) { return a *= s; }
  friend VirtualRep operator*(const mpz_class& s, VirtualRep a) { return a *= s; }
  bool operator==(const VirtualRep& o) const;
  bool operator!=(const VirtualRep& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Group group_;
  std::map<std::size_t, mpz_class> coeffs_;  // sparse, no zeros
};

/// Fourier inversion: the unique integer combination of irreps whose
/// character takes the given value on each class. Throws
/// NotVirtualCharacterError (carrying the offending irrep and the rational
/// multiplicity) when no such combination exists.
VirtualRep vr_from_character(const Group& group,
                             const std::vector<Cyclotomic>& class_values);

/// Decomposition of lambda restricted along the embedding into source
/// irreps; multiplicities are nonnegative integers summing (against dims) to
/// dim lambda.
VirtualRep restrict_irrep(const Embedding& e, std::size_t target_irrep);

std::ostream& operator<<(std::ostream& os, const VirtualRep& v);

}  // namespace swdeg
