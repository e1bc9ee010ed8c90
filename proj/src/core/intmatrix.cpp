#include "core/intmatrix.hpp"

#include <sstream>
#include <utility>

#include "core/errors.hpp"

namespace critgrp {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Int> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw InvalidArgument("matrix entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : data_)
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("matrix product shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;  // operator matrices are sparse; skip zeros
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Int& b = o.at(k, j);
        if (b == 0) continue;
        mpz_addmul(r.at(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
    }
  }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InvalidArgument("matrix sum shape mismatch");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InvalidArgument("matrix difference shape mismatch");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
  IntMatrix r = *this;
  for (Int& v : r.data_) v *= c;
  return r;
}

IntMatrix IntMatrix::scalar_minus(const Int& c) const {
  if (!is_square()) throw InvalidArgument("scalar_minus needs a square matrix");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j)
        r.at(i, j) = c - at(i, j);
      else
        r.at(i, j) = -at(i, j);
    }
  return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw InvalidArgument("matrix apply shape mismatch");
  std::vector<Int> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
  IntMatrix r(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      r.at(i, j) = at(row_idx[i], col_idx[j]);
  return r;
}

IntMatrix IntMatrix::minor_matrix(std::size_t drop_row,
                                  std::size_t drop_col) const {
  if (drop_row >= rows_ || drop_col >= cols_)
    throw InvalidArgument("minor_matrix index out of range");
  IntMatrix r(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
    if (i == drop_row) continue;
    for (std::size_t j = 0, rj = 0; j < cols_; ++j) {
      if (j == drop_col) continue;
      r.at(ri, rj) = at(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw InvalidArgument("hstack row mismatch");
  IntMatrix r(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) throw InvalidArgument("vstack column mismatch");
  IntMatrix r(a.rows_ + b.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
  return r;
}

Int IntMatrix::determinant() const {
  if (!is_square()) throw InvalidArgument("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = exact_div(v, prev);
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k)
    std::swap(data_[i * cols_ + k], data_[j * cols_ + k]);
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k)
    std::swap(data_[k * cols_ + i], data_[k * cols_ + j]);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) data_[i * cols_ + k] *= -1;
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) data_[k * cols_ + j] *= -1;
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols_; ++k)
    mpz_addmul(data_[dst * cols_ + k].get_mpz_t(), c.get_mpz_t(),
               data_[src * cols_ + k].get_mpz_t());
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < rows_; ++k)
    mpz_addmul(data_[k * cols_ + dst].get_mpz_t(), c.get_mpz_t(),
               data_[k * cols_ + src].get_mpz_t());
}

void IntMatrix::combine_rows(std::size_t i, std::size_t j, const Int& a,
                             const Int& b, const Int& c, const Int& d) {
  for (std::size_t k = 0; k < cols_; ++k) {
    Int& x = data_[i * cols_ + k];
    Int& y = data_[j * cols_ + k];
    Int nx = a * x + b * y;
    Int ny = c * x + d * y;
    x = std::move(nx);
    y = std::move(ny);
  }
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j)
      os << at(i, j) << (j + 1 < cols_ ? " " : "");
    os << (i + 1 < rows_ ? "\n" : "]");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(std::size_t degree, const Int& c) {
  std::vector<Int> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_roots(
    const std::vector<std::pair<Int, std::size_t>>& root_multiplicities) {
  IntPoly p(std::vector<Int>{1});
  for (const auto& [root, mult] : root_multiplicities) {
    IntPoly lin(std::vector<Int>{-root, 1});
    for (std::size_t i = 0; i < mult; ++i) p = p * lin;
  }
  return p;
}

const Int& IntPoly::coeff(std::size_t k) const {
  static const Int zero = 0;
  return k < c_.size() ? c_[k] : zero;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (c_.empty() || o.c_.empty()) return IntPoly();
  std::vector<Int> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0)
        mpz_addmul(v[i + j].get_mpz_t(), c_[i].get_mpz_t(),
                   o.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(v));
}

Int IntPoly::eval(const Int& x) const {
  Int r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

IntMatrix IntPoly::eval_matrix(const IntMatrix& m) const {
  if (!m.is_square()) throw InvalidArgument("eval_matrix needs square matrix");
  std::size_t n = m.rows();
  IntMatrix r(n, n);
  for (std::size_t i = c_.size(); i-- > 0;) {
    r = r * m;
    for (std::size_t d = 0; d < n; ++d) r.at(d, d) += c_[i];
  }
  return r;
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      a = abs(a);
    }
    first = false;
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace critgrp
