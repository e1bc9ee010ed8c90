#pragma once

#include <string>
#include <vector>

#include "core/intmatrix.hpp"
#include "core/partitions.hpp"

namespace critgrp {

/// Ordered basis of the n-th rank of Y^r: all multipartitions of total size
/// n, ascending in the r-lexicographic order. This fixes every operator
/// matrix row/column order in the library.
class RankBasis {
 public:
  RankBasis(std::size_t r, int n);

  std::size_t r() const { return r_; }
  int n() const { return n_; }
  const std::vector<MultiPartition>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t index_of(const MultiPartition& m) const;

 private:
  std::size_t r_;
  int n_;
  std::vector<MultiPartition> elements_;
};

/// Memoized rank bases and operator matrices; caches are write-once and
/// guarded, safe for concurrent readers.
const RankBasis& rank_basis(std::size_t r, int n);

/// Multipartitions covering m (one box added in one component), unsorted.
std::vector<MultiPartition> covers_above(const MultiPartition& m);
/// Multipartitions covered by m (one box removed), unsorted.
std::vector<MultiPartition> covers_below(const MultiPartition& m);

/// 0/1 matrix of the up map rank n -> n+1, shape p_{n+1} x p_n.
const IntMatrix& up_matrix(std::size_t r, int n);
/// 0/1 matrix of the down map rank n -> n-1, shape p_{n-1} x p_n
/// (0 x 1 at n = 0: the down map kills the bottom rank).
const IntMatrix& down_matrix(std::size_t r, int n);

/// Matrix of U^i D^i on rank n, memoized.
const IntMatrix& ud_power_matrix(std::size_t r, int n, std::size_t i);

/// Number of saturated chains from the minimum to the element.
Int path_count(const MultiPartition& m);

/// Word over the alphabet {U, D}; the leftmost letter is applied last.
class UDWord {
 public:
  UDWord() = default;
  explicit UDWord(std::string letters);

  const std::string& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  std::size_t count_u() const;
  bool balanced() const { return 2 * count_u() == letters_.size(); }
  /// Half-length k of a balanced word.
  std::size_t half_length() const;

  bool operator==(const UDWord& o) const = default;

 private:
  std::string letters_;
};

/// Normal form sum c_i(r) U^i D^i of a word, with coefficients kept as
/// polynomials in the poset parameter r (the rewriting DU = UD + r never
/// needs a specialized value). Index = i, entry = c_i as a polynomial in r.
std::vector<IntPoly> word_normal_form_symbolic(const UDWord& w);

/// Balanced word content specialized at a concrete r: coefficients c_i of
/// U^i D^i and the same element rewritten as sum beta_j (UD)^j.
class WordPolynomial {
 public:
  /// From a balanced word; rejects unbalanced input.
  static WordPolynomial from_word(const UDWord& w, const Int& r);
  /// From explicit nonnegative coefficients c_i (index = i).
  static WordPolynomial from_ud_coefficients(std::vector<Int> c, const Int& r);

  const std::vector<Int>& ud_coefficients() const { return c_; }
  const std::vector<Int>& beta() const { return beta_; }
  const Int& r() const { return r_; }
  std::size_t top_power() const { return c_.empty() ? 0 : c_.size() - 1; }
  bool is_zero() const;
  /// Same content with the constant term removed (drops trivial summands).
  WordPolynomial without_constant() const;

  std::string to_string() const;

 private:
  std::vector<Int> c_;
  std::vector<Int> beta_;
  Int r_;
  void compute_beta();
};

/// min { i : c_i != 0 } over the symbolic normal form; the word must be
/// balanced and nonempty.
std::size_t word_ell(const UDWord& w);

/// Matrix of w(U, D) on rank n by direct composition of up/down matrices.
/// Ranks below zero contribute zero maps.
IntMatrix word_operator_matrix(const UDWord& w, std::size_t r, int n);
/// Matrix of f(U, D) on rank n as sum c_i * (U^i D^i matrix).
IntMatrix word_operator_matrix(const WordPolynomial& f, std::size_t r, int n);

/// Predicted eigenvalues alpha_0..alpha_n: alpha_i = sum beta_j (r i)^j.
std::vector<Int> alpha_values(const WordPolynomial& f, std::size_t r, int n);

}  // namespace critgrp
