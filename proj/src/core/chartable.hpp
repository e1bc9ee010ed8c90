#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/abelian.hpp"
#include "core/cyclotomic.hpp"
#include "core/intmatrix.hpp"
#include "core/partitions.hpp"
#include "core/smith.hpp"

namespace critgrp {

struct ConjClass {
  std::string name;
  Int size;
};

/// Exact character table. Rows are irreducibles, columns conjugacy classes;
/// the first column is always the identity class, so it carries the
/// dimension vector. Construction validates class sizes, integral positive
/// dimensions, exact row orthonormality and the dimension sum.
class CharacterTable {
 public:
  CharacterTable(std::string group_name, Int order, unsigned long exponent,
                 std::vector<ConjClass> classes,
                 std::vector<std::string> irrep_names,
                 std::vector<std::vector<CyclotomicInt>> values);

  const std::string& group_name() const { return name_; }
  const Int& order() const { return order_; }
  unsigned long exponent() const { return exponent_; }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t num_irreps() const { return values_.size(); }
  const ConjClass& conj_class(std::size_t c) const { return classes_[c]; }
  const std::string& irrep_name(std::size_t i) const { return irrep_names_[i]; }
  const CyclotomicInt& value(std::size_t i, std::size_t c) const {
    return values_[i][c];
  }
  const Int& dim(std::size_t i) const { return dims_[i]; }
  std::size_t identity_class() const { return 0; }

  std::size_t class_index(const std::string& name) const;
  std::size_t irrep_index(const std::string& name) const;

  bool is_abelian() const;
  /// Index k with chi_k = chi_i * chi_j (pointwise); abelian tables only.
  std::size_t character_product(std::size_t i, std::size_t j) const;

  /// <f, g> = (1/|G|) sum_c |c| f(c) conj(g(c)); must reduce to a rational
  /// integer, else the table data is corrupt.
  Int inner_product(const std::vector<CyclotomicInt>& f,
                    const std::vector<CyclotomicInt>& g) const;

  const std::vector<CyclotomicInt>& row(std::size_t i) const {
    return values_[i];
  }

 private:
  std::string name_;
  Int order_;
  unsigned long exponent_;
  std::vector<ConjClass> classes_;
  std::vector<std::string> irrep_names_;
  std::vector<std::vector<CyclotomicInt>> values_;
  std::vector<Int> dims_;

  void validate() const;
};

/// Symmetric group on n letters, 1 <= n <= 8. Rows are indexed by
/// partitions of n in descending order (the one-row partition, i.e. the
/// trivial character, first); columns by cycle types ascending, identity
/// first. Values come from the Murnaghan-Nakayama recursion.
CharacterTable build_symmetric_table(int n);

/// Character value of the symmetric-group irreducible indexed by lambda at
/// cycle type mu (memoized).
Int symmetric_character(const Partition& lambda, const Partition& mu);

/// Product of cyclic groups Z/d1 x ... (each factor >= 2); the empty list
/// gives the trivial group. Elements and characters are indexed by tuples,
/// ascending lexicographically, so the identity and trivial character come
/// first.
CharacterTable build_abelian_table(const std::vector<unsigned long>& factors);

/// Dihedral group of order 2n, n >= 3, with two-dimensional characters
/// taking values zeta^{jk} + zeta^{-jk} on rotations.
CharacterTable build_dihedral_table(unsigned long n);

/// Multiplicity vector over the irreducibles of a table; virtual
/// representations (negative entries) are allowed.
class RepVector {
 public:
  RepVector() = default;
  explicit RepVector(std::vector<Int> mults) : mults_(std::move(mults)) {}
  static RepVector parse(const std::string& csv, std::size_t expected_size);

  const std::vector<Int>& multiplicities() const { return mults_; }
  std::size_t size() const { return mults_.size(); }
  bool is_genuine() const;  // all multiplicities nonnegative
  Int dimension(const CharacterTable& t) const;

  bool operator==(const RepVector& o) const = default;
  std::string to_string() const;

 private:
  std::vector<Int> mults_;
};

/// chi_V per class.
std::vector<CyclotomicInt> character_of(const CharacterTable& t,
                                        const RepVector& v);

/// Map from subgroup classes to ambient classes realizing the inclusion on
/// class functions.
struct ClassFusion {
  std::vector<std::size_t> class_map;  // indexed by subgroup class
};

ClassFusion identity_fusion(const CharacterTable& t);
/// Fusion of the symmetric group on n-1 letters into the one on n letters
/// (a fixed point is appended to each cycle type).
ClassFusion symmetric_group_fusion(int n);
/// Fusion of the cyclic rotation subgroup into the dihedral table.
ClassFusion cyclic_in_dihedral_fusion(unsigned long n);
/// Abelian H -> G given generator images: image_tuples[i] is the tuple in G
/// that the i-th generator of H maps to. Validates the homomorphism and its
/// injectivity.
ClassFusion abelian_embedding_fusion(
    const std::vector<unsigned long>& h_factors,
    const std::vector<unsigned long>& g_factors,
    const std::vector<std::vector<unsigned long>>& image_tuples);

/// Branching matrix B with B(j, i) = multiplicity of the j-th H-irreducible
/// in the restriction of the i-th G-irreducible. Throws InvalidArgument on
/// fusions that produce non-integral or negative multiplicities.
IntMatrix restriction_matrix(const CharacterTable& g, const CharacterTable& h,
                             const ClassFusion& fusion);

/// Row-convention matrix of tensoring: entry (i, j) is the multiplicity of
/// the j-th irreducible in V (x) V_i. Signals corrupt tables through
/// IntegrityError when an inner product is not a rational integer.
IntMatrix tensor_action_matrix(const CharacterTable& t, const RepVector& v);

/// dim(V) I - tensor_action_matrix: the matrix whose cokernel carries the
/// critical group along with one free summand.
IntMatrix ctilde_matrix(const CharacterTable& t, const RepVector& v);

/// Presentation of K(V) on the dimension-zero basis
/// {[V_i] - dim(V_i)[1] : i >= 1}: one column per irreducible V_i giving the
/// coordinates of (dim(V)[1] - [V]) (x) V_i. The column for the trivial
/// character is essential; dropping it enlarges the cokernel by a factor of
/// the group order.
IntMatrix r0_presentation_matrix(const CharacterTable& t, const RepVector& v);

bool is_faithful(const CharacterTable& t, const RepVector& v);

/// Critical group K(V) for faithful V, computed both on the dimension-zero
/// sublattice and as the torsion of coker(ctilde); the two routes are
/// cross-checked.
AbelianGroup critical_group(const CharacterTable& t, const RepVector& v);

/// |K(V)| from the character product formula; exercises exact cyclotomic
/// products that must reduce to a positive rational integer.
Int critical_group_order(const CharacterTable& t, const RepVector& v);

/// For each rational-integer character value a taken on m >= 2 classes, the
/// pair (dim V - a, m - 1): K(V) contains (Z/(dim V - a))^(m-1).
std::vector<std::pair<Int, std::size_t>> repeated_value_subgroups(
    const CharacterTable& t, const RepVector& v);

/// Applies a dimension-preserving permutation of the irreducibles.
RepVector twist(const CharacterTable& t, const RepVector& v,
                const std::vector<std::size_t>& sigma);

/// The outer automorphism's action on the irreducibles of the symmetric
/// group on six letters, shipped as the known swap list.
std::vector<std::size_t> s6_outer_permutation(const CharacterTable& s6);

/// Restriction of V along the fusion, as a representation of H.
RepVector restrict_rep(const CharacterTable& g, const CharacterTable& h,
                       const ClassFusion& fusion, const RepVector& v);

/// Induced homomorphism K(V) -> K(Res V) from restriction.
CokernelMap res_map_on_critical_groups(const CharacterTable& g,
                                       const CharacterTable& h,
                                       const ClassFusion& fusion,
                                       const RepVector& v);

/// Induced homomorphism K(Res V) -> K(V) from induction (the transpose
/// branching matrix).
CokernelMap ind_map_on_critical_groups(const CharacterTable& g,
                                       const CharacterTable& h,
                                       const ClassFusion& fusion,
                                       const RepVector& v);

}  // namespace critgrp
