#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "core/intmatrix.hpp"

namespace critgrp {

inline std::vector<Int> int_vec(std::initializer_list<long> vals) {
  std::vector<Int> v;
  for (long x : vals) v.emplace_back(x);
  return v;
}

inline std::vector<Int> multiset(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<Int> multiset(std::initializer_list<long> vals) {
  return multiset(int_vec(vals));
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                               std::size_t cols, long max_abs) {
  std::uniform_int_distribution<long> dist(-max_abs, max_abs);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

/// Product of random shears and swaps; determinant +-1 by construction.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n,
                                   std::size_t ops) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<long> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t t = 0; t < ops; ++t) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    switch (rng() % 3) {
      case 0:
        u.add_row_multiple(i, j, Int(coef(rng)));
        break;
      case 1:
        u.add_col_multiple(i, j, Int(coef(rng)));
        break;
      default:
        u.swap_rows(i, j);
    }
  }
  return u;
}

}  // namespace critgrp
