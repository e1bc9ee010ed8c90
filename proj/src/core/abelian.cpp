#include "core/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "core/errors.hpp"

namespace critgrp {

std::vector<std::pair<Int, unsigned long>> factorize(const Int& n) {
  if (n <= 0) throw InvalidArgument("factorize expects a positive integer");
  std::vector<std::pair<Int, unsigned long>> out;
  Int m = n;
  auto strip = [&](const Int& p) {
    unsigned long e = 0;
    while (divides(p, m)) {
      m = exact_div(m, p);
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (Int p = 5; p * p <= m;) {
    strip(p);
    p += 2;
    if (p * p > m) break;
    strip(p);
    p += 4;
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::vector<Int> orders) {
  std::size_t zeros = 0;
  // exponent lists per prime, one entry per contributing cyclic factor
  std::map<Int, std::vector<unsigned long>> primary;
  for (const Int& d : orders) {
    if (d < 0) throw InvalidArgument("cyclic order must be nonnegative");
    if (d == 0) {
      ++zeros;
      continue;
    }
    if (d == 1) continue;
    for (const auto& [p, e] : factorize(d)) primary[p].push_back(e);
  }
  std::size_t chain_len = 0;
  for (auto& [p, es] : primary) {
    std::sort(es.begin(), es.end(), std::greater<>());
    chain_len = std::max(chain_len, es.size());
  }
  // largest factor first, then reverse into ascending chain order
  std::vector<Int> chain(chain_len, 1);
  for (const auto& [p, es] : primary)
    for (std::size_t i = 0; i < es.size(); ++i) chain[i] *= int_pow(p, es[i]);
  std::reverse(chain.begin(), chain.end());
  for (std::size_t i = 0; i < zeros; ++i) chain.push_back(0);
  AbelianGroup g;
  g.factors_ = std::move(chain);
  return g;
}

AbelianGroup AbelianGroup::from_invariant_factors(std::vector<Int> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] == 1 || factors[i] < 0)
      throw InvalidArgument("invariant factor must be 0 or > 1");
    if (i + 1 < factors.size() && !divides(factors[i], factors[i + 1]))
      throw InvalidArgument("invariant factors must form a divisibility chain");
  }
  AbelianGroup g;
  g.factors_ = std::move(factors);
  return g;
}

std::size_t AbelianGroup::free_rank() const {
  std::size_t r = 0;
  for (const Int& f : factors_)
    if (f == 0) ++r;
  return r;
}

std::optional<Int> AbelianGroup::order() const {
  Int n = 1;
  for (const Int& f : factors_) {
    if (f == 0) return std::nullopt;
    n *= f;
  }
  return n;
}

std::vector<Int> AbelianGroup::elementary_divisors() const {
  std::vector<Int> out;
  for (const Int& f : factors_) {
    if (f == 0) continue;
    for (const auto& [p, e] : factorize(f)) out.push_back(int_pow(p, e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool AbelianGroup::contains_power_of_cyclic(const Int& q,
                                            std::size_t e) const {
  if (q <= 1) throw InvalidArgument("cyclic order must exceed 1");
  // invariant factors form a chain, so it is enough to count torsion
  // factors divisible by q
  std::size_t count = 0;
  for (const Int& f : factors_)
    if (f != 0 && divides(q, f)) ++count;
  return count >= e;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "trivial";
  std::ostringstream os;
  bool first = true;
  std::size_t free_count = free_rank();
  for (const Int& f : factors_) {
    if (f == 0) break;
    if (!first) os << " ⊕ ";
    os << "Z/" << f;
    first = false;
  }
  if (free_count > 0) {
    if (!first) os << " ⊕ ";
    os << "Z";
    if (free_count > 1) os << "^" << free_count;
  }
  return os.str();
}

}  // namespace critgrp
