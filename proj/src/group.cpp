#include "swdeg/group.hpp"

#include <algorithm>
#include <sstream>

#include "swdeg/errors.hpp"
#include "swdeg/numutil.hpp"

namespace swdeg {

void CharacterTable::validate() const {
  const std::size_t k = classes.size();
  if (k == 0) throw ValidationError("table has no classes");
  if (irrep_labels.size() != k || dims.size() != irrep_labels.size() ||
      values.size() != irrep_labels.size()) {
    throw ValidationError("table must be square: " + std::to_string(k) +
                          " classes vs " + std::to_string(irrep_labels.size()) +
                          " irreps");
  }
  for (const auto& row : values) {
    if (row.size() != k) throw ValidationError("irrep row has wrong length");
  }
  if (classes[0].size != 1 || classes[0].element_order != 1) {
    throw ValidationError("identity class must come first (size 1, ord 1)");
  }
  long size_sum = 0;
  for (const auto& c : classes) {
    if (c.size < 1) throw ValidationError("class size must be positive");
    if (c.element_order < 1) throw ValidationError("class element order must be positive");
    size_sum += c.size;
  }
  if (size_sum != order) {
    throw ValidationError("class sizes sum to " + std::to_string(size_sum) +
                          ", expected the group order " + std::to_string(order));
  }
  long dim_sum = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1) throw ValidationError("irrep dimension must be positive");
    dim_sum += dims[i] * dims[i];
    if (values[i][0] != Cyclotomic(dims[i])) {
      throw ValidationError("identity column mismatch for irrep '" +
                            irrep_labels[i] + "': " + values[i][0].to_string() +
                            " != dim " + std::to_string(dims[i]));
    }
  }
  if (dim_sum != order) {
    throw ValidationError("sum of squared dimensions is " +
                          std::to_string(dim_sum) + ", expected the group order " +
                          std::to_string(order));
  }
  // Values at a class of elements of order o are sums of o-th roots of unity.
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      if (!values[i][c].lies_in_conductor(classes[c].element_order)) {
        throw ValidationError("value of irrep '" + irrep_labels[i] +
                              "' at class '" + classes[c].label +
                              "' does not lie in Q(zeta_" +
                              std::to_string(classes[c].element_order) +
                              "): " + values[i][c].to_string());
      }
    }
  }
  // Row orthogonality under the class-size-weighted inner product: norms
  // first (sharper diagnosis for a scaled row), then the off-diagonal pairs.
  auto inner_product = [&](std::size_t i, std::size_t j) {
    Cyclotomic sum(0);
    for (std::size_t c = 0; c < k; ++c) {
      sum += Cyclotomic(classes[c].size) * values[i][c] * values[j][c].conj();
    }
    return Cyclotomic(mpq_class(1, order)) * sum;
  };
  for (std::size_t i = 0; i < values.size(); ++i) {
    Cyclotomic norm = inner_product(i, i);
    if (norm != Cyclotomic(1)) {
      throw ValidationError("row norm != 1 for irrep '" + irrep_labels[i] +
                            "': <chi,chi> = " + norm.to_string());
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      Cyclotomic inner = inner_product(i, j);
      if (!inner.is_zero()) {
        throw ValidationError("rows not orthogonal: irreps '" + irrep_labels[i] +
                              "' and '" + irrep_labels[j] +
                              "' have <chi_i,chi_j> = " + inner.to_string());
      }
    }
  }
}

bool CharacterTable::operator==(const CharacterTable& o) const {
  if (name != o.name || order != o.order || dims != o.dims ||
      irrep_labels != o.irrep_labels || classes.size() != o.classes.size()) {
    return false;
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].label != o.classes[c].label || classes[c].size != o.classes[c].size ||
        classes[c].element_order != o.classes[c].element_order) {
      return false;
    }
  }
  return values == o.values;
}

Group Group::abelian(std::vector<long> orders) {
  for (long n : orders) {
    if (n < 1) throw PreconditionError("cyclic factor orders must be >= 1");
  }
  Group g;
  g.orders_ = std::move(orders);
  g.order_ = 1;
  for (long n : g.orders_) g.order_ *= n;
  return g;
}

Group Group::tabled(CharacterTable table) {
  table.validate();
  Group g;
  g.order_ = table.order;
  g.table_ = std::make_shared<const CharacterTable>(std::move(table));
  return g;
}

std::size_t Group::num_classes() const {
  return is_abelian() ? static_cast<std::size_t>(order_) : table_->classes.size();
}

std::size_t Group::num_irreps() const {
  return is_abelian() ? static_cast<std::size_t>(order_) : table_->irrep_labels.size();
}

const std::vector<long>& Group::cyclic_orders() const {
  if (!is_abelian()) throw PreconditionError("group is not abelian");
  return orders_;
}

std::vector<long> Group::element_tuple(std::size_t index) const {
  if (!is_abelian()) throw PreconditionError("tabled elements have no residue tuple");
  std::vector<long> tuple(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    tuple[i] = static_cast<long>(index % orders_[i]);
    index /= orders_[i];
  }
  return tuple;
}

std::size_t Group::element_index(const std::vector<long>& tuple) const {
  if (!is_abelian()) throw PreconditionError("tabled elements have no residue tuple");
  if (tuple.size() != orders_.size()) {
    throw PreconditionError("element tuple rank mismatch");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    index = index * orders_[i] + mod_long(tuple[i], orders_[i]);
  }
  return index;
}

std::vector<long> Group::irrep_tuple(std::size_t index) const { return element_tuple(index); }
std::size_t Group::irrep_index(const std::vector<long>& tuple) const {
  return element_index(tuple);
}

long Group::class_size(std::size_t cls) const {
  return is_abelian() ? 1 : table_->classes.at(cls).size;
}

long Group::element_order(std::size_t cls) const {
  if (is_tabled()) return table_->classes.at(cls).element_order;
  auto tuple = element_tuple(cls);
  long ord = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    long n = orders_[i];
    ord = lcm_long(ord, n / gcd_long(n, tuple[i]));
  }
  return ord;
}

long Group::irrep_dim(std::size_t irrep) const {
  return is_abelian() ? 1 : table_->dims.at(irrep);
}

std::string Group::class_label(std::size_t cls) const {
  if (is_tabled()) return table_->classes.at(cls).label;
  auto tuple = element_tuple(cls);
  if (tuple.empty()) return "0";
  if (tuple.size() == 1) return std::to_string(tuple[0]);
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
  os << ")";
  return os.str();
}

std::string Group::irrep_label(std::size_t irrep) const {
  if (is_tabled()) return table_->irrep_labels.at(irrep);
  if (irrep == 0 && order_ == 1) return "l0";
  auto tuple = irrep_tuple(irrep);
  if (tuple.size() == 1) return "l" + std::to_string(tuple[0]);
  std::ostringstream os;
  os << "l(";
  for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
  os << ")";
  return os.str();
}

Cyclotomic Group::char_value(std::size_t irrep, std::size_t cls) const {
  if (is_tabled()) return table_->values.at(irrep).at(cls);
  if (irrep >= num_irreps() || cls >= num_classes()) {
    throw PreconditionError("irrep or element does not belong to the group");
  }
  auto lam = irrep_tuple(irrep);
  auto gam = element_tuple(cls);
  Cyclotomic v(1);
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    v *= Cyclotomic::root(orders_[i], lam[i] * gam[i]);
  }
  return v;
}

std::size_t Group::element_add(std::size_t a, std::size_t b) const {
  auto ta = element_tuple(a);
  auto tb = element_tuple(b);
  for (std::size_t i = 0; i < ta.size(); ++i) ta[i] = mod_long(ta[i] + tb[i], orders_[i]);
  return element_index(ta);
}

std::size_t Group::element_scale(long factor, std::size_t a) const {
  auto t = element_tuple(a);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = mod_long(factor * t[i], orders_[i]);
  return element_index(t);
}

std::size_t Group::linear_irrep_product(std::size_t a, std::size_t b) const {
  if (is_abelian()) return element_add(a, b);
  if (irrep_dim(a) != 1 || irrep_dim(b) != 1) {
    throw UnsupportedError("product index is defined for 1-dimensional irreps only");
  }
  auto mult = product_multiplicities(a, b);
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 1) return i;
  }
  throw InternalError("product of linear characters is not a single irrep");
}

std::vector<mpz_class> Group::product_multiplicities(std::size_t a, std::size_t b) const {
  std::vector<Cyclotomic> product(num_classes());
  for (std::size_t c = 0; c < num_classes(); ++c) {
    product[c] = char_value(a, c) * char_value(b, c);
  }
  std::vector<mpz_class> mult(num_irreps());
  for (std::size_t i = 0; i < num_irreps(); ++i) {
    Cyclotomic m = fourier_multiplicity(product, i);
    if (!m.is_integer() || m.rational_value() < 0) {
      throw InternalError("character product decomposition is not a nonnegative "
                          "integer (invalid character table): multiplicity of " +
                          irrep_label(i) + " is " + m.to_string());
    }
    mult[i] = m.rational_value().get_num();
  }
  return mult;
}

Cyclotomic Group::fourier_multiplicity(const std::vector<Cyclotomic>& class_values,
                                       std::size_t irrep) const {
  if (class_values.size() != num_classes()) {
    throw PreconditionError("class function has wrong number of classes");
  }
  Cyclotomic sum(0);
  for (std::size_t c = 0; c < num_classes(); ++c) {
    sum += Cyclotomic(class_size(c)) * class_values[c] * char_value(irrep, c).conj();
  }
  return Cyclotomic(mpq_class(1, order_)) * sum;
}

const CharacterTable& Group::table() const {
  if (!is_tabled()) throw PreconditionError("group has no character table");
  return *table_;
}

std::string Group::name() const {
  if (is_tabled()) return table_->name;
  if (orders_.empty()) return "Z1";
  std::ostringstream os;
  for (std::size_t i = 0; i < orders_.size(); ++i) os << (i ? "x" : "") << "Z" << orders_[i];
  return os.str();
}

bool Group::operator==(const Group& o) const {
  if (is_abelian() != o.is_abelian()) return false;
  if (is_abelian()) return orders_ == o.orders_;
  return table_ == o.table_ || *table_ == *o.table_;
}

Embedding::Embedding(Group source, Group target, std::size_t generator_image)
    : source_(std::move(source)), target_(std::move(target)), image_(generator_image) {
  if (!source_.is_cyclic()) {
    throw UnsupportedError("embedding sources must be cyclic groups");
  }
  if (!target_.is_abelian()) {
    throw UnsupportedError(
        "embeddings into tabled groups are not supported (a character table "
        "does not determine the power map)");
  }
  if (image_ >= target_.num_classes()) {
    throw PreconditionError("generator image is not a target element");
  }
  if (target_.element_order(image_) != source_.order()) {
    throw PreconditionError(
        "generator image has order " + std::to_string(target_.element_order(image_)) +
        ", expected the source order " + std::to_string(source_.order()));
  }
}

std::size_t Embedding::map_power(long j) const {
  return target_.element_scale(mod_long(j, source_.order()), image_);
}

Embedding Embedding::generated_subgroup(const Group& target, std::size_t element) {
  long ord = target.element_order(element);
  return Embedding(Group::abelian(ord == 1 ? std::vector<long>{} : std::vector<long>{ord}),
                   target, element);
}

}  // namespace swdeg
