#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/bigint.hpp"

namespace critgrp {

/// Integer partition: weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // sum of parts
  std::size_t length() const { return parts_.size(); }
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  Partition conjugate() const;
  /// Number of parts equal to 1.
  std::size_t ones() const;

  bool operator==(const Partition& o) const = default;

  /// Order used throughout: larger total size is greater; within equal
  /// size, lexicographic on the part lists.
  static bool less(const Partition& a, const Partition& b);

  std::string to_string() const;  // "3,1"; empty partition prints ""
  static Partition parse(const std::string& s);

 private:
  std::vector<int> parts_;
};

/// Element of the r-fold product of Young's lattice: an r-tuple of
/// partitions. Text form joins components with '|', e.g. "3,1|2" for r=2.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components);

  const std::vector<Partition>& components() const { return components_; }
  std::size_t r() const { return components_.size(); }
  int size() const;

  bool operator==(const MultiPartition& o) const = default;

  /// r-lexicographic order: compare component 1 first (larger size wins,
  /// then lexicographic on parts), then component 2, and so on.
  static bool less(const MultiPartition& a, const MultiPartition& b);

  std::string to_string() const;
  static MultiPartition parse(const std::string& s, std::size_t r);

 private:
  std::vector<Partition> components_;
};

/// All partitions of n, ascending in the order above (equivalently,
/// ascending lexicographic since sizes agree). n = 0 gives {empty}.
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n; 0 for n < 0.
Int partition_count(int n);

/// Size of the n-th rank of Y^r: sum over compositions n = i_1+...+i_r of
/// the products p(i_1)...p(i_r). Zero for n < 0.
Int rank_size(std::size_t r, int n);

/// delta p_m = p_m - p_{m-1} over Y^r (p_i = 0 for i < 0).
Int delta_p(std::size_t r, int m);

/// Smallest m >= 1 with delta p_m >= i, scanning up to search_bound;
/// -1 when none qualifies. (m = 0 is excluded: delta p_0 = 1 reflects the
/// empty diagram, which never contributes a factor.)
int m0(std::size_t r, const Int& i, int search_bound);

}  // namespace critgrp
