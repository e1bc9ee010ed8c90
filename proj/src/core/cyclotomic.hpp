#pragma once

#include <string>
#include <vector>

#include "core/bigint.hpp"
#include "core/intmatrix.hpp"

namespace critgrp {

unsigned long euler_phi(unsigned long m);

/// m-th cyclotomic polynomial, cached.
const IntPoly& cyclotomic_polynomial(unsigned long m);

/// Element of Z[zeta_m] in the power basis {zeta^j : 0 <= j < phi(m)},
/// reduced modulo the m-th cyclotomic polynomial. Binary operations promote
/// both operands to the lcm of their conductors; representations at a fixed
/// conductor are unique, so equality after promotion is exact.
class CyclotomicInt {
 public:
  CyclotomicInt() : conductor_(1), coeffs_(1) {}
  CyclotomicInt(const Int& n) : conductor_(1), coeffs_{n} {}  // NOLINT
  CyclotomicInt(long n) : conductor_(1), coeffs_{Int(n)} {}   // NOLINT

  /// zeta_m^k (k may be negative).
  static CyclotomicInt root_power(unsigned long m, long k);
  /// Coefficients of powers zeta^0..zeta^{len-1}; reduced on construction.
  static CyclotomicInt from_power_coeffs(unsigned long m,
                                         std::vector<Int> coeffs);

  unsigned long conductor() const { return conductor_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  bool operator==(const CyclotomicInt& o) const;

  /// Complex conjugation: zeta -> zeta^{m-1}.
  CyclotomicInt conjugate() const;

  bool is_zero() const;
  bool is_rational_integer() const;
  /// Throws IntegrityError when the value is not a rational integer.
  Int rational_value() const;

  /// Same value viewed in Z[zeta_{new_conductor}]; conductor() must divide
  /// new_conductor.
  CyclotomicInt promoted(unsigned long new_conductor) const;

  std::string to_string() const;

 private:
  unsigned long conductor_;
  std::vector<Int> coeffs_;
};

}  // namespace critgrp
