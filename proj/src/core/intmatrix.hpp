#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "core/bigint.hpp"

namespace critgrp {

/// Dense matrix of arbitrary-precision integers, row-major.
/// Degenerate shapes (0 x k, k x 0) are allowed.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  /// Brace-construction from rows, e.g. IntMatrix{{1,2},{3,4}}.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Int>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const = default;

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix scaled(const Int& c) const;
  /// c*I - this (square only).
  IntMatrix scalar_minus(const Int& c) const;

  std::vector<Int> apply(const std::vector<Int>& v) const;  // this * v

  IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;
  /// Drops one row and one column (used for reduced Laplacians).
  IntMatrix minor_matrix(std::size_t drop_row, std::size_t drop_col) const;
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

  /// Exact determinant via fraction-free (Bareiss) elimination.
  Int determinant() const;

  // in-place elementary operations (used by the normal-form routines)
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
  /// Rows (i,j) <- (a*row_i + b*row_j, c*row_i + d*row_j).
  void combine_rows(std::size_t i, std::size_t j, const Int& a, const Int& b,
                    const Int& c, const Int& d);

  std::string to_string() const;  // human-readable, for diagnostics

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

/// Integer polynomial with coefficients in ascending degree order.
/// Trailing zero coefficients are trimmed; the zero polynomial has empty
/// coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly monomial(std::size_t degree, const Int& c = 1);
  static IntPoly from_roots(const std::vector<std::pair<Int, std::size_t>>&
                                root_multiplicities);

  bool operator==(const IntPoly& o) const = default;
  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const Int& coeff(std::size_t k) const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  Int eval(const Int& x) const;
  /// Exact matrix polynomial evaluation (Horner).
  IntMatrix eval_matrix(const IntMatrix& m) const;

  std::string to_string() const;

 private:
  std::vector<Int> c_;
  void trim();
};

}  // namespace critgrp
