#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/bigint.hpp"

namespace critgrp {

/// Finitely generated abelian group in invariant-factor form.
/// Stored factors are each > 1 or 0 (a free Z summand), form a divisibility
/// chain, and zeros come last. Unit factors are never stored.
class AbelianGroup {
 public:
  AbelianGroup() = default;  // trivial group

  /// Canonicalizes an arbitrary nonnegative multiset of cyclic orders
  /// (Z/0 = Z) into invariant-factor form.
  static AbelianGroup from_cyclic_orders(std::vector<Int> orders);

  /// Precondition: factors already canonical (chain, no units, zeros last).
  static AbelianGroup from_invariant_factors(std::vector<Int> factors);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t free_rank() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_finite() const { return free_rank() == 0; }
  /// Product of the torsion factors; nullopt when the group is infinite.
  std::optional<Int> order() const;

  /// Multiset of prime-power elementary divisors (> 1) of the torsion part.
  std::vector<Int> elementary_divisors() const;

  /// True iff (Z/q)^e embeds, i.e. at least e torsion factors are divisible
  /// by q. q > 1, e >= 1.
  bool contains_power_of_cyclic(const Int& q, std::size_t e) const;

  bool operator==(const AbelianGroup& o) const = default;

  /// "trivial", "Z/4", "Z/6 (+) Z/6 (+) Z/120", free part last as "Z^k".
  std::string to_string() const;

 private:
  std::vector<Int> factors_;
};

/// Prime factorization by trial division; fine at the sizes this library
/// produces. Returns (prime, exponent) pairs, ascending.
std::vector<std::pair<Int, unsigned long>> factorize(const Int& n);

}  // namespace critgrp
