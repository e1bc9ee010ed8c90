#include "core/posets.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "core/errors.hpp"

namespace critgrp {

RankBasis::RankBasis(std::size_t r, int n) : r_(r), n_(n) {
  if (r < 1) throw InvalidArgument("rank basis needs r >= 1");
  if (n < 0) throw InvalidArgument("rank basis needs n >= 0");
  // compositions of n into r nonnegative parts, partitions per slot
  std::vector<Partition> acc(r);
  std::vector<MultiPartition>& out = elements_;
  auto rec = [&](auto&& self, std::size_t slot_idx, int remaining) -> void {
    if (slot_idx + 1 == r) {
      for (const Partition& p : partitions_of(remaining)) {
        acc[slot_idx] = p;
        out.emplace_back(acc);
      }
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      for (const Partition& p : partitions_of(take)) {
        acc[slot_idx] = p;
        self(self, slot_idx + 1, remaining - take);
      }
    }
  };
  rec(rec, 0, n);
  std::sort(elements_.begin(), elements_.end(), MultiPartition::less);
  if (Int(static_cast<unsigned long>(elements_.size())) != rank_size(r, n))
    throw IntegrityError("rank basis cardinality mismatch");
}

std::size_t RankBasis::index_of(const MultiPartition& m) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), m,
                             MultiPartition::less);
  if (it == elements_.end() || !(*it == m))
    throw InvalidArgument("element not in rank basis: " + m.to_string());
  return static_cast<std::size_t>(it - elements_.begin());
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<std::size_t, int>, RankBasis> basis_cache;
std::map<std::pair<std::size_t, int>, IntMatrix> up_cache;
std::map<std::pair<std::size_t, int>, IntMatrix> down_cache;
std::map<std::tuple<std::size_t, int, std::size_t>, IntMatrix> ud_power_cache;
struct MultiPartitionLess {
  bool operator()(const MultiPartition& a, const MultiPartition& b) const {
    if (a.r() != b.r()) return a.r() < b.r();
    return MultiPartition::less(a, b);
  }
};
std::map<MultiPartition, Int, MultiPartitionLess> path_cache_map;

std::vector<Partition> partition_covers_above(const Partition& p) {
  std::vector<Partition> out;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0 || parts[i - 1] > parts[i]) {
      std::vector<int> np = parts;
      ++np[i];
      out.emplace_back(std::move(np));
    }
  }
  std::vector<int> np = parts;
  np.push_back(1);
  out.emplace_back(std::move(np));
  return out;
}

std::vector<Partition> partition_covers_below(const Partition& p) {
  std::vector<Partition> out;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 == parts.size() || parts[i] > parts[i + 1]) {
      std::vector<int> np = parts;
      if (np[i] == 1)
        np.erase(np.begin() + static_cast<long>(i));
      else
        --np[i];
      out.emplace_back(std::move(np));
    }
  }
  return out;
}

}  // namespace

std::vector<MultiPartition> covers_above(const MultiPartition& m) {
  std::vector<MultiPartition> out;
  for (std::size_t c = 0; c < m.r(); ++c) {
    for (const Partition& q : partition_covers_above(m.components()[c])) {
      std::vector<Partition> comps = m.components();
      comps[c] = q;
      out.emplace_back(std::move(comps));
    }
  }
  return out;
}

std::vector<MultiPartition> covers_below(const MultiPartition& m) {
  std::vector<MultiPartition> out;
  for (std::size_t c = 0; c < m.r(); ++c) {
    for (const Partition& q : partition_covers_below(m.components()[c])) {
      std::vector<Partition> comps = m.components();
      comps[c] = q;
      out.emplace_back(std::move(comps));
    }
  }
  return out;
}

const RankBasis& rank_basis(std::size_t r, int n) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(r, n);
  auto it = basis_cache.find(key);
  if (it == basis_cache.end())
    it = basis_cache.emplace(key, RankBasis(r, n)).first;
  return it->second;
}

const IntMatrix& up_matrix(std::size_t r, int n) {
  if (n < 0) throw InvalidArgument("up_matrix needs n >= 0");
  const RankBasis& lo = rank_basis(r, n);
  const RankBasis& hi = rank_basis(r, n + 1);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(r, n);
  auto it = up_cache.find(key);
  if (it != up_cache.end()) return it->second;
  IntMatrix m(hi.size(), lo.size());
  for (std::size_t j = 0; j < lo.size(); ++j)
    for (const MultiPartition& up : covers_above(lo.elements()[j]))
      m.at(hi.index_of(up), j) = 1;
  return up_cache.emplace(key, std::move(m)).first->second;
}

const IntMatrix& down_matrix(std::size_t r, int n) {
  if (n < 0) throw InvalidArgument("down_matrix needs n >= 0");
  const RankBasis& hi = rank_basis(r, n);
  const RankBasis* lo = (n > 0) ? &rank_basis(r, n - 1) : nullptr;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(r, n);
  auto it = down_cache.find(key);
  if (it != down_cache.end()) return it->second;
  IntMatrix m(lo ? lo->size() : 0, hi.size());
  if (lo) {
    for (std::size_t j = 0; j < hi.size(); ++j)
      for (const MultiPartition& dn : covers_below(hi.elements()[j]))
        m.at(lo->index_of(dn), j) = 1;
  }
  return down_cache.emplace(key, std::move(m)).first->second;
}

const IntMatrix& ud_power_matrix(std::size_t r, int n, std::size_t i) {
  if (n < 0) throw InvalidArgument("ud_power_matrix needs n >= 0");
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(r, n, i);
    auto it = ud_power_cache.find(key);
    if (it != ud_power_cache.end()) return it->second;
  }
  std::size_t pn = rank_basis(r, n).size();
  IntMatrix m = IntMatrix::identity(pn);
  if (i > 0) {
    // descend i ranks, then climb back; a dip below rank 0 kills everything
    if (n < static_cast<int>(i)) {
      m = IntMatrix(pn, pn);
    } else {
      IntMatrix cur = IntMatrix::identity(pn);
      for (std::size_t s = 0; s < i; ++s)
        cur = down_matrix(r, n - static_cast<int>(s)) * cur;
      for (std::size_t s = i; s-- > 0;)
        cur = up_matrix(r, n - static_cast<int>(s) - 1) * cur;
      m = std::move(cur);
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_tuple(r, n, i);
  auto it = ud_power_cache.find(key);
  if (it != ud_power_cache.end()) return it->second;
  return ud_power_cache.emplace(key, std::move(m)).first->second;
}

Int path_count(const MultiPartition& m) {
  if (m.size() == 0) return 1;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = path_cache_map.find(m);
    if (it != path_cache_map.end()) return it->second;
  }
  Int total = 0;
  for (const MultiPartition& below : covers_below(m)) total += path_count(below);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return path_cache_map.emplace(m, std::move(total)).first->second;
}

UDWord::UDWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (c != 'U' && c != 'D')
      throw ParseError("word letters must be U or D, got: " + letters_);
}

std::size_t UDWord::count_u() const {
  return static_cast<std::size_t>(
      std::count(letters_.begin(), letters_.end(), 'U'));
}

std::size_t UDWord::half_length() const {
  if (!balanced()) throw InvalidArgument("word is not balanced: " + letters_);
  return count_u();
}

std::vector<IntPoly> word_normal_form_symbolic(const UDWord& w) {
  // terms U^i D^j with coefficients in Z[r]; rightmost letter first
  std::map<std::pair<std::size_t, std::size_t>, IntPoly> terms;
  terms[{0, 0}] = IntPoly({Int(1)});
  const IntPoly rpoly = IntPoly::monomial(1);
  const std::string& s = w.letters();
  for (std::size_t pos = s.size(); pos-- > 0;) {
    std::map<std::pair<std::size_t, std::size_t>, IntPoly> next;
    auto add = [&](std::size_t i, std::size_t j, const IntPoly& c) {
      if (c.is_zero()) return;
      auto [it, fresh] = next.try_emplace({i, j}, c);
      if (!fresh) it->second = it->second + c;
    };
    for (const auto& [ij, coeff] : terms) {
      auto [i, j] = ij;
      if (s[pos] == 'U') {
        add(i + 1, j, coeff);
      } else {
        // D U^i = U^i D + i r U^{i-1}
        add(i, j + 1, coeff);
        if (i > 0)
          add(i - 1, j,
              coeff * rpoly * IntPoly({Int(static_cast<unsigned long>(i))}));
      }
    }
    terms = std::move(next);
  }
  std::size_t top = 0;
  for (const auto& [ij, coeff] : terms) {
    if (ij.first != ij.second)
      throw InvalidArgument("normal form of an unbalanced word: " +
                            w.letters());
    top = std::max(top, ij.first);
  }
  std::vector<IntPoly> c(top + 1);
  for (const auto& [ij, coeff] : terms) c[ij.first] = coeff;
  return c;
}

WordPolynomial WordPolynomial::from_word(const UDWord& w, const Int& r) {
  if (!w.balanced())
    throw InvalidArgument("word is not balanced: " + w.letters());
  std::vector<IntPoly> sym = word_normal_form_symbolic(w);
  std::vector<Int> c;
  c.reserve(sym.size());
  for (const IntPoly& poly : sym) c.push_back(poly.eval(r));
  WordPolynomial f;
  f.c_ = std::move(c);
  f.r_ = r;
  f.compute_beta();
  return f;
}

WordPolynomial WordPolynomial::from_ud_coefficients(std::vector<Int> c,
                                                    const Int& r) {
  for (const Int& v : c)
    if (v < 0)
      throw InvalidArgument("word-sum coefficients must be nonnegative");
  while (!c.empty() && c.back() == 0) c.pop_back();
  WordPolynomial f;
  f.c_ = std::move(c);
  f.r_ = r;
  f.compute_beta();
  return f;
}

void WordPolynomial::compute_beta() {
  // (UD)^j = sum_i t_{j,i} U^i D^i with t_{j+1,i} = t_{j,i-1} + i r t_{j,i};
  // the transform is unitriangular, so beta is integral
  std::size_t k = c_.size();
  beta_.assign(k, 0);
  if (k == 0) return;
  std::vector<std::vector<Int>> t(k, std::vector<Int>(k, 0));
  t[0][0] = 1;
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = 1; i <= j; ++i)
      t[j][i] = t[j - 1][i - 1] + Int(static_cast<unsigned long>(i)) * r_ *
                                      t[j - 1][i];
  for (std::size_t j = k; j-- > 0;) {
    Int v = c_[j];
    for (std::size_t j2 = j + 1; j2 < k; ++j2) v -= beta_[j2] * t[j2][j];
    beta_[j] = v;
  }
}

bool WordPolynomial::is_zero() const {
  for (const Int& v : c_)
    if (v != 0) return false;
  return true;
}

WordPolynomial WordPolynomial::without_constant() const {
  WordPolynomial f = *this;
  if (!f.c_.empty()) {
    f.c_[0] = 0;
    while (!f.c_.empty() && f.c_.back() == 0) f.c_.pop_back();
    f.compute_beta();
  }
  return f;
}

std::string WordPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i > 0) {
      if (c_[i] != 1) os << " ";
      os << "U^" << i << "D^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::size_t word_ell(const UDWord& w) {
  std::vector<IntPoly> sym = word_normal_form_symbolic(w);
  for (std::size_t i = 0; i < sym.size(); ++i)
    if (!sym[i].is_zero()) return i;
  throw InvalidArgument("ell of the zero word");
}

IntMatrix word_operator_matrix(const UDWord& w, std::size_t r, int n) {
  if (n < 0) throw InvalidArgument("word operator needs n >= 0");
  auto size_at = [&](int m) -> std::size_t {
    if (m < 0) return 0;
    auto v = to_int64(rank_size(r, m));
    return static_cast<std::size_t>(*v);
  };
  const std::size_t pn = size_at(n);
  IntMatrix cur = IntMatrix::identity(pn);
  int rank = n;
  const std::string& s = w.letters();
  for (std::size_t pos = s.size(); pos-- > 0;) {
    if (s[pos] == 'U') {
      if (rank < 0)
        cur = IntMatrix(size_at(rank + 1), pn);
      else
        cur = up_matrix(r, rank) * cur;
      ++rank;
    } else {
      if (rank <= 0)
        cur = IntMatrix(size_at(rank - 1), pn);
      else
        cur = down_matrix(r, rank) * cur;
      --rank;
    }
  }
  if (cur.rows() != pn || cur.cols() != pn)
    throw IntegrityError("word operator did not return to its rank");
  return cur;
}

IntMatrix word_operator_matrix(const WordPolynomial& f, std::size_t r, int n) {
  if (f.r() != Int(static_cast<unsigned long>(r)))
    throw InvalidArgument("word polynomial was built for a different r");
  const std::size_t pn =
      static_cast<std::size_t>(*to_int64(rank_size(r, n)));
  IntMatrix acc(pn, pn);
  const auto& c = f.ud_coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    acc = acc + ud_power_matrix(r, n, i).scaled(c[i]);
  }
  return acc;
}

std::vector<Int> alpha_values(const WordPolynomial& f, std::size_t r, int n) {
  std::vector<Int> alphas;
  alphas.reserve(static_cast<std::size_t>(n) + 1);
  const auto& beta = f.beta();
  for (int i = 0; i <= n; ++i) {
    Int x = Int(static_cast<long>(r)) * i;
    Int acc = 0;
    Int xp = 1;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      acc += beta[j] * xp;
      xp *= x;
    }
    alphas.push_back(acc);
  }
  return alphas;
}

}  // namespace critgrp
