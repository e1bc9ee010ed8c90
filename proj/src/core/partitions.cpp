#include "core/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "core/errors.hpp"

namespace critgrp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be > 0");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> conj(parts_[0]);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[j];
  return Partition(std::move(conj));
}

std::size_t Partition::ones() const {
  std::size_t n = 0;
  for (int p : parts_)
    if (p == 1) ++n;
  return n;
}

bool Partition::less(const Partition& a, const Partition& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.parts_ < b.parts_;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    os << (i ? "," : "") << parts_[i];
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw ParseError("empty partition part in: " + s);
    Int v = parse_int(tok);
    auto lv = to_int64(v);
    if (!lv || *lv <= 0) throw ParseError("bad partition part: " + tok);
    parts.push_back(static_cast<int>(*lv));
  }
  return Partition(std::move(parts));
}

MultiPartition::MultiPartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw InvalidArgument("multipartition needs at least one component");
}

int MultiPartition::size() const {
  int s = 0;
  for (const Partition& p : components_) s += p.size();
  return s;
}

bool MultiPartition::less(const MultiPartition& a, const MultiPartition& b) {
  if (a.r() != b.r())
    throw InvalidArgument("comparing multipartitions of different arity");
  for (std::size_t i = 0; i < a.r(); ++i) {
    if (a.components_[i] == b.components_[i]) continue;
    return Partition::less(a.components_[i], b.components_[i]);
  }
  return false;
}

std::string MultiPartition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < components_.size(); ++i)
    os << (i ? "|" : "") << components_[i].to_string();
  return os.str();
}

MultiPartition MultiPartition::parse(const std::string& s, std::size_t r) {
  std::vector<std::string> chunks;
  std::string cur;
  for (char c : s) {
    if (c == '|') {
      chunks.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  chunks.push_back(cur);
  if (chunks.size() != r)
    throw ParseError("expected " + std::to_string(r) +
                     " components in multipartition: " + s);
  std::vector<Partition> comps;
  for (const std::string& c : chunks)
    comps.push_back(c.empty() ? Partition() : Partition::parse(c));
  return MultiPartition(std::move(comps));
}

namespace {

void enumerate_partitions(int remaining, int max_part, std::vector<int>& acc,
                          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    enumerate_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidArgument("partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_partitions(n, n == 0 ? 1 : n, acc, out);
  std::sort(out.begin(), out.end(), Partition::less);
  return out;
}

namespace {

std::mutex count_mutex;
std::vector<Int> p_cache{1};  // p(0) = 1

// p(n) by Euler's pentagonal recurrence
void extend_partition_counts(int n) {
  for (int m = static_cast<int>(p_cache.size()); m <= n; ++m) {
    Int total = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      Int sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= m) total += sign * p_cache[m - g1];
      if (g2 <= m) total += sign * p_cache[m - g2];
    }
    p_cache.push_back(total);
  }
}

}  // namespace

Int partition_count(int n) {
  if (n < 0) return 0;
  std::lock_guard<std::mutex> lock(count_mutex);
  extend_partition_counts(n);
  return p_cache[n];
}

Int rank_size(std::size_t r, int n) {
  if (r < 1) throw InvalidArgument("rank_size needs r >= 1");
  if (n < 0) return 0;
  // r-fold convolution of the partition-count sequence
  std::vector<Int> conv(n + 1);
  for (int a = 0; a <= n; ++a) conv[a] = partition_count(a);
  for (std::size_t step = 1; step < r; ++step) {
    std::vector<Int> next(n + 1);
    for (int a = 0; a <= n; ++a) {
      if (conv[a] == 0) continue;
      for (int b = 0; a + b <= n; ++b)
        next[a + b] += conv[a] * partition_count(b);
    }
    conv = std::move(next);
  }
  return conv[n];
}

Int delta_p(std::size_t r, int m) {
  return rank_size(r, m) - rank_size(r, m - 1);
}

int m0(std::size_t r, const Int& i, int search_bound) {
  for (int m = 1; m <= search_bound; ++m)
    if (delta_p(r, m) >= i) return m;
  return -1;
}

}  // namespace critgrp
