#include "swdeg/virtual_rep.hpp"

#include <ostream>
#include <sstream>

#include "swdeg/errors.hpp"

namespace swdeg {

VirtualRep VirtualRep::irrep(Group group, std::size_t index, mpz_class mult) {
  VirtualRep v(std::move(group));
  if (index >= v.group_.num_irreps()) {
    throw PreconditionError("irrep index out of range");
  }
  v.set_coeff(index, std::move(mult));
  return v;
}

VirtualRep VirtualRep::regular(Group group) {
  VirtualRep v(std::move(group));
  for (std::size_t i = 0; i < v.group_.num_irreps(); ++i) {
    v.set_coeff(i, mpz_class(v.group_.irrep_dim(i)));
  }
  return v;
}

mpz_class VirtualRep::coeff(std::size_t irrep) const {
  auto it = coeffs_.find(irrep);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void VirtualRep::set_coeff(std::size_t irrep, mpz_class value) {
  if (value == 0) {
    coeffs_.erase(irrep);
  } else {
    coeffs_[irrep] = std::move(value);
  }
}

mpz_class VirtualRep::virtual_dim() const {
  mpz_class d(0);
  for (const auto& [i, c] : coeffs_) d += c * group_.irrep_dim(i);
  return d;
}

Cyclotomic VirtualRep::trace(std::size_t cls) const {
  Cyclotomic t(0);
  for (const auto& [i, c] : coeffs_) t += Cyclotomic(mpq_class(c)) * group_.char_value(i, cls);
  return t;
}

std::vector<Cyclotomic> VirtualRep::character() const {
  std::vector<Cyclotomic> values(group_.num_classes());
  for (std::size_t c = 0; c < values.size(); ++c) values[c] = trace(c);
  return values;
}

VirtualRep VirtualRep::operator-() const {
  VirtualRep r(group_);
  for (const auto& [i, c] : coeffs_) r.coeffs_.emplace(i, -c);
  return r;
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
  if (group_ != o.group_) throw PreconditionError("virtual reps over different groups");
  for (const auto& [i, c] : o.coeffs_) set_coeff(i, coeff(i) + c);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& o) { return *this += -o; }

VirtualRep& VirtualRep::operator*=(const mpz_class& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [i, c] : coeffs_) c *= s;
  return *this;
}

bool VirtualRep::operator==(const VirtualRep& o) const {
  return group_ == o.group_ && coeffs_ == o.coeffs_;
}

std::string VirtualRep::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    mpz_class abs = c < 0 ? mpz_class(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (abs != 1) os << abs << "*";
    os << group_.irrep_label(i);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const VirtualRep& v) {
  return os << v.to_string();
}

VirtualRep vr_from_character(const Group& group,
                             const std::vector<Cyclotomic>& class_values) {
  VirtualRep v(group);
  for (std::size_t i = 0; i < group.num_irreps(); ++i) {
    Cyclotomic m = group.fourier_multiplicity(class_values, i);
    if (!m.is_rational() || m.rational_value().get_den() != 1) {
      throw NotVirtualCharacterError(group.irrep_label(i), m.to_string());
    }
    v.set_coeff(i, m.rational_value().get_num());
  }
  return v;
}

VirtualRep restrict_irrep(const Embedding& e, std::size_t target_irrep) {
  const Group& src = e.source();
  const Group& tgt = e.target();
  if (target_irrep >= tgt.num_irreps()) {
    throw PreconditionError("irrep index out of range");
  }
  // chi_lambda(i(j)) as a class function on the cyclic source, inverted there.
  std::vector<Cyclotomic> values(src.num_classes());
  for (long j = 0; j < src.order(); ++j) {
    values[static_cast<std::size_t>(j)] = tgt.char_value(target_irrep, e.map_power(j));
  }
  VirtualRep r = [&] {
    try {
      return vr_from_character(src, values);
    } catch (const NotVirtualCharacterError& err) {
      throw InternalError(std::string("restriction along a genuine embedding must be "
                                      "a character: ") +
                          err.what());
    }
  }();
  mpz_class dim_sum(0);
  for (const auto& [i, c] : r.coeffs()) {
    if (c < 0) throw InternalError("restriction produced a negative multiplicity");
    dim_sum += c * src.irrep_dim(i);
  }
  if (dim_sum != tgt.irrep_dim(target_irrep)) {
    throw InternalError("restriction does not preserve dimension");
  }
  return r;
}

}  // namespace swdeg
