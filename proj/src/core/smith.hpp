#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core/abelian.hpp"
#include "core/intmatrix.hpp"

namespace critgrp {

/// Smith normal form of an integer matrix M: unimodular P, Q with
/// P*M*Q = diag(diagonal), diagonal entries nonnegative and forming a
/// divisibility chain (zeros last).
struct SmithDecomposition {
  IntMatrix p;                // rows x rows, det +-1
  IntMatrix q;                // cols x cols, det +-1
  std::vector<Int> diagonal;  // length min(rows, cols)

  std::size_t ones_count() const;
  std::size_t rank() const;  // number of nonzero diagonal entries
};

/// Deterministic dense SNF. Pivoting picks the nonzero entry of minimum
/// absolute value, ties broken row-major; this bounds coefficient growth
/// without any randomness.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Invariant factors of coker(M : Z^cols -> Z^rows), one 0 per free summand.
AbelianGroup cokernel(const IntMatrix& m);

/// gcd of all k x k minors (0 when they all vanish). Exponential in k by
/// design; this is a desk-scale oracle, not a production path. Rejects k=0.
Int minors_gcd(const IntMatrix& m, std::size_t k);

/// Exact monic characteristic polynomial (Faddeev-LeVerrier; the integer
/// divisions it performs are exact).
IntPoly char_poly(const IntMatrix& m);

/// Diagonal (s_1,...,s_n) in chain order determined by an integer spectrum:
/// s_{n+1-i} is the product of the eigenvalues with multiplicity >= i.
/// Valid for matrices whose shifted form M + tI admits a Smith normal form
/// over Z[t]; callers are responsible for that hypothesis.
std::vector<Int> snf_from_eigenvalues(
    const std::vector<std::pair<Int, std::size_t>>& spectrum);

/// Some integer solution X of A*X = B, or nullopt when none exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

/// Basis of the integer kernel of M as matrix columns. The kernel lattice
/// is saturated (it is a direct summand of the ambient lattice).
IntMatrix kernel_basis(const IntMatrix& m);

/// Canonical column-style Hermite basis of the lattice spanned by the
/// columns of M. Two column sets span the same lattice iff their Hermite
/// bases are equal.
IntMatrix hermite_column_basis(const IntMatrix& m);

bool same_column_lattice(const IntMatrix& a, const IntMatrix& b);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& u);

/// Group homomorphism coker(M) -> coker(N) induced by an ambient map F with
/// F*im(M) contained in im(N), expressed in Smith coordinates of both sides.
struct CokernelMap {
  AbelianGroup source;
  AbelianGroup target;
  /// entry (j,i): image of the i-th source generator on the j-th target
  /// generator, reduced modulo the j-th target factor (no reduction for
  /// free factors).
  IntMatrix matrix;
  bool surjective = false;
  bool injective = false;
};

/// F maps the ambient lattice of coker(M) into that of coker(N).
/// Throws InvalidArgument when F*M = N*X has no integer solution X
/// (the square does not commute).
CokernelMap induced_cokernel_map(const IntMatrix& f, const IntMatrix& m,
                                 const IntMatrix& n);

/// Composition g . f of maps in Smith coordinates (f first).
CokernelMap compose(const CokernelMap& g, const CokernelMap& f);

bool same_map(const CokernelMap& a, const CokernelMap& b);

}  // namespace critgrp
