#include "swdeg/equivariant.hpp"

#include <ostream>
#include <sstream>

#include "swdeg/errors.hpp"

namespace swdeg {

EquivElem EquivElem::term(Group group, std::size_t irrep, Pin2Elem coeff) {
  EquivElem x(std::move(group));
  if (irrep >= x.group_.num_irreps()) throw PreconditionError("irrep index out of range");
  x.set_coeff(irrep, std::move(coeff));
  return x;
}

EquivElem EquivElem::from_virtual(const VirtualRep& vr, const Pin2Elem& scale) {
  EquivElem x(vr.group());
  for (const auto& [i, m] : vr.coeffs()) x.set_coeff(i, scale * m);
  return x;
}

Pin2Elem EquivElem::coeff(std::size_t irrep) const {
  auto it = terms_.find(irrep);
  return it == terms_.end() ? Pin2Elem() : it->second;
}

void EquivElem::set_coeff(std::size_t irrep, Pin2Elem value) {
  if (value.is_zero()) {
    terms_.erase(irrep);
  } else {
    terms_[irrep] = std::move(value);
  }
}

EquivElem EquivElem::operator-() const {
  EquivElem r(group_);
  for (const auto& [i, p] : terms_) r.terms_.emplace(i, -p);
  return r;
}

EquivElem& EquivElem::operator+=(const EquivElem& o) {
  if (group_ != o.group_) throw PreconditionError("elements over different groups");
  for (const auto& [i, p] : o.terms_) set_coeff(i, coeff(i) + p);
  return *this;
}

EquivElem& EquivElem::operator-=(const EquivElem& o) { return *this += -o; }

EquivElem& EquivElem::operator*=(const EquivElem& o) {
  if (group_ != o.group_) throw PreconditionError("elements over different groups");
  EquivElem result(group_);
  if (group_.is_abelian()) {
    for (const auto& [i, p] : terms_) {
      for (const auto& [j, q] : o.terms_) {
        std::size_t k = group_.element_add(i, j);
        result.set_coeff(k, result.coeff(k) + p * q);
      }
    }
  } else {
    for (const auto& [i, p] : terms_) {
      for (const auto& [j, q] : o.terms_) {
        Pin2Elem pq = p * q;
        auto mult = group_.product_multiplicities(i, j);
        for (std::size_t k = 0; k < mult.size(); ++k) {
          if (mult[k] == 0) continue;
          result.set_coeff(k, result.coeff(k) + pq * mult[k]);
        }
      }
    }
  }
  *this = std::move(result);
  return *this;
}

EquivElem& EquivElem::operator*=(const Pin2Elem& p) {
  EquivElem result(group_);
  for (const auto& [i, q] : terms_) result.set_coeff(i, q * p);
  *this = std::move(result);
  return *this;
}

EquivElem EquivElem::pow(unsigned long e) const {
  EquivElem result = one(group_);
  EquivElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool EquivElem::operator==(const EquivElem& o) const {
  return group_ == o.group_ && terms_ == o.terms_;
}

Cyclotomic EquivElem::trace_j(std::size_t cls) const {
  Cyclotomic t(0);
  for (const auto& [i, p] : terms_) {
    t += group_.char_value(i, cls) * Cyclotomic(mpq_class(p.trace_j()));
  }
  return t;
}

LaurentPoly EquivElem::trace_symbolic(std::size_t cls) const {
  LaurentPoly t;
  for (const auto& [i, p] : terms_) {
    t += LaurentPoly(group_.char_value(i, cls)) * p.trace_symbolic();
  }
  return t;
}

EquivElem::Decomposition EquivElem::decompose() const {
  Decomposition d{VirtualRep(group_), VirtualRep(group_), {}};
  std::size_t max_h = 0;
  for (const auto& [i, p] : terms_) max_h = std::max(max_h, p.h_degree());
  d.alpha_h.assign(max_h, VirtualRep(group_));
  for (const auto& [i, p] : terms_) {
    d.alpha0.set_coeff(i, p.constant());
    d.alpha0_tilde.set_coeff(i, -p.c_coeff());
    for (std::size_t k = 1; k <= p.h_degree(); ++k) {
      d.alpha_h[k - 1].set_coeff(i, p.h_coeff(k));
    }
  }
  while (!d.alpha_h.empty() && d.alpha_h.back().coeffs().empty()) d.alpha_h.pop_back();
  return d;
}

EquivElem EquivElem::assemble(const Decomposition& d) {
  EquivElem x(d.alpha0.group());
  x += from_virtual(d.alpha0);
  x -= from_virtual(d.alpha0_tilde, Pin2Elem::c());
  for (std::size_t k = 0; k < d.alpha_h.size(); ++k) {
    x += from_virtual(d.alpha_h[k], Pin2Elem::h(k + 1));
  }
  return x;
}

EquivElem EquivElem::restricted(const Embedding& e) const {
  if (e.target() != group_) {
    throw PreconditionError("element is not over the embedding's target group");
  }
  EquivElem result(e.source());
  for (const auto& [i, p] : terms_) {
    VirtualRep r = restrict_irrep(e, i);
    for (const auto& [j, m] : r.coeffs()) {
      result.set_coeff(j, result.coeff(j) + p * m);
    }
  }
  return result;
}

std::string EquivElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, p] : terms_) {
    if (!first) os << "\n";
    first = false;
    os << "(" << group_.irrep_label(i) << ") \xE2\x8A\x97 (" << p.to_string() << ")";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const EquivElem& x) {
  return os << x.to_string();
}

namespace {

EquivElem wedge_star_common(const Group& group, std::size_t irrep, bool h_form) {
  if (irrep >= group.num_irreps()) throw PreconditionError("irrep index out of range");
  if (group.irrep_dim(irrep) != 1) {
    throw UnsupportedError("exterior powers of irreps of dimension > 1 are not supported");
  }
  EquivElem x = EquivElem::one(group);
  if (h_form) {
    x -= EquivElem::term(group, irrep, Pin2Elem::h());
    std::size_t sq = group.linear_irrep_product(irrep, irrep);
    x += EquivElem::term(group, sq, Pin2Elem(1));
  } else {
    x -= EquivElem::term(group, irrep, Pin2Elem::c());
  }
  return x;
}

}  // namespace

EquivElem wedge_star_h(const Group& group, std::size_t irrep) {
  return wedge_star_common(group, irrep, true);
}

EquivElem wedge_star_c(const Group& group, std::size_t irrep) {
  return wedge_star_common(group, irrep, false);
}

}  // namespace swdeg
