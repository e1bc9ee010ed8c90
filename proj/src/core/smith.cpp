#include "core/smith.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace critgrp {

std::size_t SmithDecomposition::ones_count() const {
  std::size_t n = 0;
  for (const Int& d : diagonal)
    if (d == 1) ++n;
  return n;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t n = 0;
  for (const Int& d : diagonal)
    if (d != 0) ++n;
  return n;
}

namespace {

// Restores the divisibility chain on a diagonalized matrix by gcd/lcm
// fix-ups of adjacent pairs; all operations are mirrored into p and q.
void repair_chain(IntMatrix& a, IntMatrix& p, IntMatrix& q, std::size_t lim) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < lim; ++i) {
      const Int x = a.at(i, i);
      const Int y = a.at(i + 1, i + 1);
      if (divides(x, y)) continue;
      changed = true;
      a.add_col_multiple(i, i + 1, 1);
      q.add_col_multiple(i, i + 1, 1);
      // block is now [[x, 0], [y, y]]; mix rows to put gcd(x, y) on top
      ExtGcd e = ext_gcd(x, y);
      const Int yg = exact_div(y, e.g), xg = exact_div(x, e.g);
      a.combine_rows(i, i + 1, e.x, e.y, -yg, xg);
      p.combine_rows(i, i + 1, e.x, e.y, -yg, xg);
      // clear the remaining entry above the lcm
      const Int c = exact_div(a.at(i, i + 1), a.at(i, i));
      a.add_col_multiple(i + 1, i, -c);
      q.add_col_multiple(i + 1, i, -c);
    }
  }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t lim = std::min(rows, cols);
  IntMatrix a = m;
  IntMatrix p = IntMatrix::identity(rows);
  IntMatrix q = IntMatrix::identity(cols);

  std::size_t t = 0;
  while (t < lim) {
    // nonzero entry of minimum |value| in the working submatrix, row-major
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        const Int& v = a.at(i, j);
        if (v == 0) continue;
        Int av = abs(v);
        if (!found || av < best) {
          found = true;
          best = av;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
      if (found && best == 1) break;
    }
    if (!found) break;
    a.swap_rows(t, pi);
    p.swap_rows(t, pi);
    a.swap_cols(t, pj);
    q.swap_cols(t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a.at(i, t) == 0) continue;
      Int c = -round_div(a.at(i, t), a.at(t, t));
      a.add_row_multiple(i, t, c);
      p.add_row_multiple(i, t, c);
      if (a.at(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a.at(t, j) == 0) continue;
      Int c = -round_div(a.at(t, j), a.at(t, t));
      a.add_col_multiple(j, t, c);
      q.add_col_multiple(j, t, c);
      if (a.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders exist; re-pivot at t
    ++t;
  }

  for (std::size_t i = 0; i < lim; ++i) {
    if (a.at(i, i) < 0) {
      a.negate_row(i);
      p.negate_row(i);
    }
  }
  repair_chain(a, p, q, lim);

  SmithDecomposition s;
  s.diagonal.reserve(lim);
  for (std::size_t i = 0; i < lim; ++i) s.diagonal.push_back(a.at(i, i));
  s.p = std::move(p);
  s.q = std::move(q);
  return s;
}

AbelianGroup cokernel(const IntMatrix& m) {
  SmithDecomposition s = smith_normal_form(m);
  std::vector<Int> factors;
  for (const Int& d : s.diagonal)
    if (d != 1) factors.push_back(d);
  for (std::size_t i = std::min(m.rows(), m.cols()); i < m.rows(); ++i)
    factors.push_back(0);
  return AbelianGroup::from_invariant_factors(std::move(factors));
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace

Int minors_gcd(const IntMatrix& m, std::size_t k) {
  if (k == 0) throw InvalidArgument("minors_gcd requires k >= 1");
  if (k > std::min(m.rows(), m.cols()))
    throw InvalidArgument("minors_gcd: k exceeds matrix dimensions");
  Int g = 0;
  std::vector<std::size_t> rsel = first_combination(k);
  do {
    std::vector<std::size_t> csel = first_combination(k);
    do {
      g = gcd_int(g, m.submatrix(rsel, csel).determinant());
      if (g == 1) return g;
    } while (next_combination(csel, m.cols()));
  } while (next_combination(rsel, m.rows()));
  return g;
}

IntPoly char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("char_poly needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<Int> coeffs(n + 1);
  coeffs[n] = 1;
  IntMatrix b = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix mb = m * b;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mb.at(i, i);
    Int ck = -exact_div(tr, Int(static_cast<unsigned long>(k)));
    coeffs[n - k] = ck;
    b = std::move(mb);
    for (std::size_t i = 0; i < n; ++i) b.at(i, i) += ck;
  }
  return IntPoly(std::move(coeffs));
}

std::vector<Int> snf_from_eigenvalues(
    const std::vector<std::pair<Int, std::size_t>>& spectrum) {
  std::vector<std::pair<Int, std::size_t>> merged;
  for (const auto& [value, mult] : spectrum) {
    if (mult == 0) throw InvalidArgument("eigenvalue multiplicity must be > 0");
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const auto& p) { return p.first == value; });
    if (it == merged.end())
      merged.emplace_back(value, mult);
    else
      it->second += mult;
  }
  std::size_t n = 0;
  for (const auto& [value, mult] : merged) n += mult;
  if (n == 0) throw InvalidArgument("empty spectrum");
  std::vector<Int> s(n);
  for (std::size_t i = 1; i <= n; ++i) {
    Int prod = 1;
    for (const auto& [value, mult] : merged)
      if (mult >= i) prod *= value;
    s[n - i] = abs(prod);
  }
  return s;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw InvalidArgument("solve_integer: row count mismatch");
  SmithDecomposition s = smith_normal_form(a);
  IntMatrix c = s.p * b;
  const std::size_t lim = s.diagonal.size();
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Int d = i < lim ? s.diagonal[i] : Int(0);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (d == 0) {
        if (c.at(i, j) != 0) return std::nullopt;
      } else {
        if (!divides(d, c.at(i, j))) return std::nullopt;
        y.at(i, j) = exact_div(c.at(i, j), d);
      }
    }
  }
  return s.q * y;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithDecomposition s = smith_normal_form(m);
  const std::size_t rank = s.rank();
  std::vector<std::size_t> rsel, csel;
  for (std::size_t i = 0; i < m.cols(); ++i) rsel.push_back(i);
  for (std::size_t j = rank; j < m.cols(); ++j) csel.push_back(j);
  return s.q.submatrix(rsel, csel);
}

IntMatrix hermite_column_basis(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t c = 0;
  for (std::size_t row = 0; row < rows && c < cols; ++row) {
    // reduce columns c.. against each other in this row until one survives
    for (;;) {
      bool found = false;
      std::size_t pj = c;
      Int best;
      for (std::size_t j = c; j < cols; ++j) {
        if (a.at(row, j) == 0) continue;
        Int av = abs(a.at(row, j));
        if (!found || av < best) {
          found = true;
          best = av;
          pj = j;
        }
      }
      if (!found) break;  // no pivot in this row
      a.swap_cols(c, pj);
      bool clean = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a.at(row, j) == 0) continue;
        Int q = -round_div(a.at(row, j), a.at(row, c));
        a.add_col_multiple(j, c, q);
        if (a.at(row, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot fixed: positive sign, then reduce the columns on its left
      if (a.at(row, c) < 0) a.negate_col(c);
      for (std::size_t j = 0; j < c; ++j) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(row, j).get_mpz_t(),
                   a.at(row, c).get_mpz_t());
        a.add_col_multiple(j, c, -q);
      }
      ++c;
      break;
    }
  }
  std::vector<std::size_t> rsel, csel;
  for (std::size_t i = 0; i < rows; ++i) rsel.push_back(i);
  for (std::size_t j = 0; j < c; ++j) csel.push_back(j);
  return a.submatrix(rsel, csel);
}

bool same_column_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw InvalidArgument("lattice comparison needs equal ambient rank");
  return hermite_column_basis(a) == hermite_column_basis(b);
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  if (!u.is_square()) throw InvalidArgument("inverse of non-square matrix");
  auto x = solve_integer(u, IntMatrix::identity(u.rows()));
  if (!x) throw InvalidArgument("matrix is not unimodular");
  return *x;
}

namespace {

std::vector<Int> ambient_moduli(const SmithDecomposition& s,
                                std::size_t ambient_rank) {
  std::vector<Int> mods(ambient_rank, 0);
  for (std::size_t i = 0; i < s.diagonal.size() && i < ambient_rank; ++i)
    mods[i] = s.diagonal[i];
  return mods;
}

Int reduce_mod(const Int& v, const Int& modulus) {
  if (modulus == 0) return v;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace

CokernelMap induced_cokernel_map(const IntMatrix& f, const IntMatrix& m,
                                 const IntMatrix& n) {
  if (f.cols() != m.rows() || f.rows() != n.rows())
    throw InvalidArgument("induced map: ambient shapes do not match");
  if (!solve_integer(n, f * m))
    throw InvalidArgument(
        "induced map: F*im(M) is not contained in im(N); the square does not "
        "commute over the integers");

  SmithDecomposition sm = smith_normal_form(m);
  SmithDecomposition sn = smith_normal_form(n);
  IntMatrix full = sn.p * f * inverse_unimodular(sm.p);
  std::vector<Int> src_mod = ambient_moduli(sm, m.rows());
  std::vector<Int> tgt_mod = ambient_moduli(sn, n.rows());

  for (std::size_t j = 0; j < n.rows(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!divides(tgt_mod[j], src_mod[i] * full.at(j, i)))
        throw IntegrityError("induced map is not well-defined on cokernels");

  std::vector<std::size_t> src_keep, tgt_keep;
  for (std::size_t i = 0; i < src_mod.size(); ++i)
    if (src_mod[i] != 1) src_keep.push_back(i);
  for (std::size_t j = 0; j < tgt_mod.size(); ++j)
    if (tgt_mod[j] != 1) tgt_keep.push_back(j);

  CokernelMap out;
  out.source = cokernel(m);
  out.target = cokernel(n);
  out.matrix = full.submatrix(tgt_keep, src_keep);
  for (std::size_t j = 0; j < tgt_keep.size(); ++j)
    for (std::size_t i = 0; i < src_keep.size(); ++i)
      out.matrix.at(j, i) =
          reduce_mod(out.matrix.at(j, i), tgt_mod[tgt_keep[j]]);

  out.surjective = cokernel(IntMatrix::hstack(f, n)).is_trivial();

  // preimage lattice {v : F v in im(N)}: project ker[F | -N] onto the
  // source ambient coordinates, then compare with im(M)
  IntMatrix ker = kernel_basis(IntMatrix::hstack(f, n.scaled(-1)));
  std::vector<std::size_t> top, all_cols;
  for (std::size_t i = 0; i < m.rows(); ++i) top.push_back(i);
  for (std::size_t j = 0; j < ker.cols(); ++j) all_cols.push_back(j);
  IntMatrix preimage = ker.submatrix(top, all_cols);
  out.injective = same_column_lattice(preimage, m);
  return out;
}

CokernelMap compose(const CokernelMap& g, const CokernelMap& f) {
  if (!(f.target == g.source))
    throw InvalidArgument("compose: inner groups do not match");
  CokernelMap out;
  out.source = f.source;
  out.target = g.target;
  out.matrix = g.matrix * f.matrix;
  const auto& tfac = g.target.invariant_factors();
  for (std::size_t j = 0; j < out.matrix.rows(); ++j)
    for (std::size_t i = 0; i < out.matrix.cols(); ++i)
      out.matrix.at(j, i) = reduce_mod(out.matrix.at(j, i), tfac[j]);
  out.surjective = f.surjective && g.surjective;
  out.injective = f.injective && g.injective;
  return out;
}

bool same_map(const CokernelMap& a, const CokernelMap& b) {
  return a.source == b.source && a.target == b.target && a.matrix == b.matrix;
}

}  // namespace critgrp
