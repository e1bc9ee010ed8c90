#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "core/errors.hpp"

namespace critgrp {

/// Arbitrary-precision integer. All arithmetic in the library goes through
/// this type; nothing is ever allowed to overflow.
using Int = mpz_class;

/// a | b, with the convention that every integer divides 0 and 0 divides
/// only 0.
inline bool divides(const Int& a, const Int& b) {
  if (a == 0) return b == 0;
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

/// Quotient q minimizing |a - q*b|, b != 0. Used to keep remainders small
/// during elimination.
inline Int round_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // floor division leaves r with the sign of b; stepping q up by one flips
  // r to the other side and shrinks |r| below |b|/2 when it was above
  Int babs = abs(b);
  if (2 * abs(r) > babs) q += 1;
  return q;
}

/// Exact division; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0 || !divides(b, a)) throw IntegrityError("exact_div: not divisible");
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct ExtGcd {
  Int g, x, y;  // g = x*a + y*b, g >= 0
};

inline ExtGcd ext_gcd(const Int& a, const Int& b) {
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline std::optional<std::int64_t> to_int64(const Int& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

/// Parses a decimal integer (optional leading '-'); throws ParseError on
/// anything else.
inline Int parse_int(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("bad integer literal: " + s);
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer literal: " + s);
  return Int(s, 10);
}

inline std::string to_string(const Int& v) { return v.get_str(10); }

}  // namespace critgrp
