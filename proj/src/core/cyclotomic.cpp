#include "core/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace critgrp {

unsigned long euler_phi(unsigned long m) {
  if (m == 0) throw InvalidArgument("euler_phi(0)");
  unsigned long result = m, n = m;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::mutex cyclo_mutex;
std::map<unsigned long, IntPoly> cyclo_cache;

// remainder of a by the monic polynomial b (integer coefficients throughout)
IntPoly poly_mod_monic(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r = a.coeffs();
  const std::size_t db = b.degree();
  while (r.size() > db) {
    Int lead = r.back();
    std::size_t shift = r.size() - 1 - db;
    if (lead != 0)
      for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= lead * b.coeff(i);
    r.pop_back();
  }
  return IntPoly(std::move(r));
}

// exact quotient a / b for monic b with zero remainder
IntPoly poly_div_monic(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return IntPoly();
  std::vector<Int> r = a.coeffs();
  const std::size_t db = b.degree();
  if (r.size() <= db) throw IntegrityError("polynomial division underflow");
  std::vector<Int> q(r.size() - db);
  for (std::size_t step = r.size(); step-- > db + 1;) {
    Int lead = r[step];
    std::size_t shift = step - db;
    q[shift] = lead;
    if (lead != 0)
      for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= lead * b.coeff(i);
  }
  q[0] = r[db];
  IntPoly quotient(std::move(q));
  if (!(quotient * b == a))
    throw IntegrityError("polynomial division was not exact");
  return quotient;
}

IntPoly compute_cyclotomic(unsigned long m) {
  // x^m - 1 divided by the product of the proper cyclotomic divisors
  std::vector<Int> num(m + 1);
  num[0] = -1;
  num[m] = 1;
  IntPoly poly(std::move(num));
  for (unsigned long d = 1; d < m; ++d)
    if (m % d == 0) poly = poly_div_monic(poly, cyclotomic_polynomial(d));
  return poly;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(unsigned long m) {
  if (m == 0) throw InvalidArgument("cyclotomic_polynomial(0)");
  {
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    auto it = cyclo_cache.find(m);
    if (it != cyclo_cache.end()) return it->second;
  }
  if (m == 1) {
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return cyclo_cache.emplace(1, IntPoly({Int(-1), Int(1)})).first->second;
  }
  IntPoly poly = compute_cyclotomic(m);
  std::lock_guard<std::mutex> lock(cyclo_mutex);
  auto it = cyclo_cache.find(m);
  if (it != cyclo_cache.end()) return it->second;
  return cyclo_cache.emplace(m, std::move(poly)).first->second;
}

CyclotomicInt CyclotomicInt::from_power_coeffs(unsigned long m,
                                               std::vector<Int> coeffs) {
  const IntPoly& phi_m = cyclotomic_polynomial(m);
  IntPoly reduced = poly_mod_monic(IntPoly(std::move(coeffs)), phi_m);
  CyclotomicInt v;
  v.conductor_ = m;
  v.coeffs_.assign(euler_phi(m), 0);
  for (std::size_t i = 0; i < reduced.coeffs().size(); ++i)
    v.coeffs_[i] = reduced.coeff(i);
  return v;
}

CyclotomicInt CyclotomicInt::root_power(unsigned long m, long k) {
  long mm = static_cast<long>(m);
  long e = ((k % mm) + mm) % mm;
  std::vector<Int> coeffs(static_cast<std::size_t>(e) + 1);
  coeffs[static_cast<std::size_t>(e)] = 1;
  return from_power_coeffs(m, std::move(coeffs));
}

CyclotomicInt CyclotomicInt::promoted(unsigned long new_conductor) const {
  if (new_conductor == conductor_) return *this;
  if (new_conductor % conductor_ != 0)
    throw InvalidArgument("conductor promotion must be to a multiple");
  unsigned long scale = new_conductor / conductor_;
  std::vector<Int> coeffs((euler_phi(conductor_) - 1) * scale + 1);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs[j * scale] = coeffs_[j];
  return from_power_coeffs(new_conductor, std::move(coeffs));
}

namespace {

unsigned long lcm_ul(unsigned long a, unsigned long b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  unsigned long m = lcm_ul(conductor_, o.conductor_);
  CyclotomicInt a = promoted(m), b = o.promoted(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    a.coeffs_[i] += b.coeffs_[i];
  return a;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  unsigned long m = lcm_ul(conductor_, o.conductor_);
  CyclotomicInt a = promoted(m), b = o.promoted(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    a.coeffs_[i] -= b.coeffs_[i];
  return a;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt a = *this;
  for (Int& c : a.coeffs_) c = -c;
  return a;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  unsigned long m = lcm_ul(conductor_, o.conductor_);
  CyclotomicInt a = promoted(m), b = o.promoted(m);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return CyclotomicInt(Int(0));
  std::vector<Int> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j] != 0)
        mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                   b.coeffs_[j].get_mpz_t());
  }
  return from_power_coeffs(m, std::move(prod));
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
  unsigned long m = lcm_ul(conductor_, o.conductor_);
  return promoted(m).coeffs_ == o.promoted(m).coeffs_;
}

CyclotomicInt CyclotomicInt::conjugate() const {
  std::vector<Int> coeffs(conductor_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    std::size_t e = (j == 0) ? 0 : conductor_ - j;
    coeffs[e] += coeffs_[j];
  }
  return from_power_coeffs(conductor_, std::move(coeffs));
}

bool CyclotomicInt::is_zero() const {
  for (const Int& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicInt::is_rational_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Int CyclotomicInt::rational_value() const {
  if (!is_rational_integer())
    throw IntegrityError("cyclotomic value is not a rational integer: " +
                         to_string());
  return coeffs_.empty() ? Int(0) : coeffs_[0];
}

std::string CyclotomicInt::to_string() const {
  if (is_rational_integer())
    return (coeffs_.empty() ? Int(0) : coeffs_[0]).get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    Int c = coeffs_[j];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (j == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "z" << conductor_;
    if (j > 1) os << "^" << j;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace critgrp
