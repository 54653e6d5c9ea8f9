#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "swdeg/cyclotomic.hpp"

namespace swdeg {

struct ConjClass {
  std::string label;
  long size = 1;
  long element_order = 1;
};

/// Character table of a finite group: conjugacy classes (identity first),
/// irreducible characters as rows of exact cyclotomic values.
struct CharacterTable {
  std::string name;
  long order = 1;
  std::vector<ConjClass> classes;
  std::vector<std::string> irrep_labels;
  std::vector<long> dims;
  std::vector<std::vector<Cyclotomic>> values;  // [irrep][class]

  /// Checks every table invariant: identity class first, class sizes summing
  /// to the order, sum of dim^2 = order, identity column = dims, row
  /// orthogonality under the class-size-weighted inner product, and that each
  /// value lies in Q(zeta_ord) for its class. Throws ValidationError naming
  /// the violated identity.
  void validate() const;

  bool operator==(const CharacterTable& o) const;
};

/// Parses the line-oriented character-table format:
///
///   group <name>
///   order <N>
///   classes <k>
///   class <label> size <s> ord <o>
///   irrep <label> dim <d> : <v1> | ... | <vk>
///
/// '#' starts a comment. Values use the cyclotomic grammar (e.g. "1/3 +
/// 2*z5^2 - z5^3"). Throws ParseError with line/column on syntax errors and
/// ValidationError on semantic ones.
CharacterTable parse_character_table(std::istream& in);
CharacterTable parse_character_table(const std::string& text);
CharacterTable parse_character_table_file(const std::string& path);

/// A finite group: either abelian, given by cyclic factor orders, or a
/// general finite group given by a parsed character table. Abelian elements
/// and irreps are indexed by mixed-radix encodings of their tuples in
/// lexicographic order; tabled elements are conjugacy-class indices and
/// tabled irreps are row indices. Index 0 is always the identity class and
/// the trivial irrep.
class Group {
 public:
  static Group abelian(std::vector<long> orders);
  static Group tabled(CharacterTable table);

  bool is_abelian() const { return table_ == nullptr; }
  bool is_tabled() const { return table_ != nullptr; }
  /// Abelian of rank <= 1 (the shape the embedding machinery accepts).
  bool is_cyclic() const { return is_abelian() && orders_.size() <= 1; }

  long order() const { return order_; }
  std::size_t num_classes() const;
  std::size_t num_irreps() const;
  std::size_t identity() const { return 0; }
  std::size_t trivial_irrep() const { return 0; }

  const std::vector<long>& cyclic_orders() const;

  std::vector<long> element_tuple(std::size_t index) const;
  std::size_t element_index(const std::vector<long>& tuple) const;
  std::vector<long> irrep_tuple(std::size_t index) const;
  std::size_t irrep_index(const std::vector<long>& tuple) const;

  long class_size(std::size_t cls) const;
  long element_order(std::size_t cls) const;
  long irrep_dim(std::size_t irrep) const;
  std::string class_label(std::size_t cls) const;
  std::string irrep_label(std::size_t irrep) const;

  /// Character value chi_irrep at the class cls.
  Cyclotomic char_value(std::size_t irrep, std::size_t cls) const;

  /// Abelian element arithmetic (componentwise modular).
  std::size_t element_add(std::size_t a, std::size_t b) const;
  std::size_t element_scale(long factor, std::size_t a) const;

  /// Index of the product character of two 1-dimensional irreps.
  std::size_t linear_irrep_product(std::size_t a, std::size_t b) const;

  /// Multiplicities of each irrep in the product chi_a * chi_b, via the
  /// class-size-weighted inner product. Must be nonnegative integers; throws
  /// InternalError otherwise (signals an invalid table).
  std::vector<mpz_class> product_multiplicities(std::size_t a, std::size_t b) const;

  /// <f, chi_irrep> = (1/#G) sum_c size(c) f(c) conj(chi_irrep(c)).
  Cyclotomic fourier_multiplicity(const std::vector<Cyclotomic>& class_values,
                                  std::size_t irrep) const;

  const CharacterTable& table() const;
  std::string name() const;

  bool operator==(const Group& o) const;
  bool operator!=(const Group& o) const { return !(*this == o); }

 private:
  Group() = default;
  std::vector<long> orders_;  // abelian factor orders
  long order_ = 1;
  std::shared_ptr<const CharacterTable> table_;
};

/// An injective homomorphism from a cyclic group into an abelian group,
/// specified by the image of the source generator. Covers the index-two and
/// index-three inclusions into Z6 as well as <gamma> -> Gamma and the
/// trivial-subgroup inclusion.
class Embedding {
 public:
  Embedding(Group source, Group target, std::size_t generator_image);

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }
  std::size_t generator_image() const { return image_; }

  /// Image of the j-th power of the source generator, as a target element.
  std::size_t map_power(long j) const;

  /// The inclusion of the cyclic subgroup generated by `element`.
  static Embedding generated_subgroup(const Group& target, std::size_t element);

 private:
  Group source_;
  Group target_;
  std::size_t image_;
};

}  // namespace swdeg
