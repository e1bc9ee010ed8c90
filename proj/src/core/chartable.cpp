#include "core/chartable.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace critgrp {

CharacterTable::CharacterTable(std::string group_name, Int order,
                               unsigned long exponent,
                               std::vector<ConjClass> classes,
                               std::vector<std::string> irrep_names,
                               std::vector<std::vector<CyclotomicInt>> values)
    : name_(std::move(group_name)),
      order_(std::move(order)),
      exponent_(exponent),
      classes_(std::move(classes)),
      irrep_names_(std::move(irrep_names)),
      values_(std::move(values)) {
  validate();
  dims_.reserve(values_.size());
  for (const auto& row : values_) dims_.push_back(row[0].rational_value());
}

void CharacterTable::validate() const {
  const std::size_t k = classes_.size();
  if (values_.size() != k)
    throw InvalidArgument("character table must be square (" + name_ + ")");
  if (irrep_names_.size() != k)
    throw InvalidArgument("irreducible name count mismatch");
  Int size_sum = 0;
  for (const ConjClass& c : classes_) {
    if (c.size <= 0) throw InvalidArgument("class sizes must be positive");
    size_sum += c.size;
  }
  if (size_sum != order_)
    throw InvalidArgument("class sizes do not sum to the group order in " +
                          name_);
  Int dim_sq_sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (values_[i].size() != k)
      throw InvalidArgument("character row length mismatch");
    if (!values_[i][0].is_rational_integer() ||
        values_[i][0].rational_value() <= 0)
      throw InvalidArgument("identity column must hold positive integers");
    Int d = values_[i][0].rational_value();
    dim_sq_sum += d * d;
  }
  if (dim_sq_sum != order_)
    throw InvalidArgument(
        "squared dimensions do not sum to the group order in " + name_);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Int ip = inner_product(values_[i], values_[j]);
      Int expected = (i == j) ? 1 : 0;
      if (ip != expected)
        throw InvalidArgument("row orthogonality fails for rows " +
                              irrep_names_[i] + ", " + irrep_names_[j] +
                              " of " + name_);
    }
  }
}

std::size_t CharacterTable::class_index(const std::string& name) const {
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].name == name) return c;
  throw InvalidArgument("no class named " + name + " in " + name_);
}

std::size_t CharacterTable::irrep_index(const std::string& name) const {
  for (std::size_t i = 0; i < irrep_names_.size(); ++i)
    if (irrep_names_[i] == name) return i;
  throw InvalidArgument("no irreducible named " + name + " in " + name_);
}

bool CharacterTable::is_abelian() const {
  for (const Int& d : dims_)
    if (d != 1) return false;
  return true;
}

std::size_t CharacterTable::character_product(std::size_t i,
                                              std::size_t j) const {
  if (!is_abelian())
    throw InvalidArgument("character products need an abelian table");
  std::vector<CyclotomicInt> prod(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c)
    prod[c] = values_[i][c] * values_[j][c];
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (values_[k] == prod) return k;
  throw IntegrityError("character product left the table");
}

Int CharacterTable::inner_product(const std::vector<CyclotomicInt>& f,
                                  const std::vector<CyclotomicInt>& g) const {
  CyclotomicInt acc;
  for (std::size_t c = 0; c < classes_.size(); ++c)
    acc = acc + CyclotomicInt(classes_[c].size) * f[c] * g[c].conjugate();
  Int v = acc.rational_value();
  if (!divides(order_, v))
    throw IntegrityError("inner product is not integral over the group order");
  return exact_div(v, order_);
}

// ---------------------------------------------------------------------------
// symmetric groups

namespace {

std::mutex mn_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, Int> mn_cache;

// first-column hook lengths ("beta set") of lambda, descending
std::vector<int> beta_set(const Partition& lambda) {
  const auto& parts = lambda.parts();
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[i] = parts[i] + (len - 1 - i);
  return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int p = beta[i] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

Int mn_recurse(const Partition& lambda, const std::vector<int>& mu_suffix) {
  if (mu_suffix.empty()) return lambda.size() == 0 ? 1 : 0;
  auto key = std::make_pair(lambda.parts(), mu_suffix);
  {
    std::lock_guard<std::mutex> lock(mn_mutex);
    auto it = mn_cache.find(key);
    if (it != mn_cache.end()) return it->second;
  }
  const int t = mu_suffix.front();
  std::vector<int> rest(mu_suffix.begin() + 1, mu_suffix.end());
  std::vector<int> beta = beta_set(lambda);
  Int total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - t;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;  // strip height - 1
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    Int term = mn_recurse(partition_from_beta(std::move(nb)), rest);
    if (between % 2 == 0)
      total += term;
    else
      total -= term;
  }
  std::lock_guard<std::mutex> lock(mn_mutex);
  return mn_cache.emplace(std::move(key), std::move(total)).first->second;
}

Int cycle_type_class_size(const Partition& mu, int n) {
  // n! / z_mu with z_mu = prod k^{m_k} m_k!
  Int z = 1;
  const auto& parts = mu.parts();
  std::map<int, unsigned long> mult;
  for (int p : parts) ++mult[p];
  for (const auto& [k, m] : mult)
    z *= int_pow(Int(k), m) * factorial(m);
  return exact_div(factorial(static_cast<unsigned long>(n)), z);
}

unsigned long lcm_ul(unsigned long a, unsigned long b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

Int symmetric_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw InvalidArgument("character of mismatched sizes");
  return mn_recurse(lambda, mu.parts());
}

CharacterTable build_symmetric_table(int n) {
  if (n < 1 || n > 8)
    throw InvalidArgument("symmetric table builder covers 1 <= n <= 8");
  std::vector<Partition> parts = partitions_of(n);
  std::vector<Partition> rows(parts.rbegin(), parts.rend());  // descending
  const std::vector<Partition>& cols = parts;                 // ascending
  std::vector<ConjClass> classes;
  for (const Partition& mu : cols)
    classes.push_back({mu.to_string(), cycle_type_class_size(mu, n)});
  std::vector<std::string> names;
  std::vector<std::vector<CyclotomicInt>> values;
  for (const Partition& lambda : rows) {
    names.push_back(lambda.to_string());
    std::vector<CyclotomicInt> row;
    row.reserve(cols.size());
    for (const Partition& mu : cols)
      row.emplace_back(symmetric_character(lambda, mu));
    values.push_back(std::move(row));
  }
  unsigned long exponent = 1;
  for (unsigned long k = 2; k <= static_cast<unsigned long>(n); ++k)
    exponent = lcm_ul(exponent, k);
  return CharacterTable("S" + std::to_string(n),
                        factorial(static_cast<unsigned long>(n)), exponent,
                        std::move(classes), std::move(names),
                        std::move(values));
}

// ---------------------------------------------------------------------------
// abelian groups

namespace {

std::vector<std::vector<unsigned long>> all_tuples(
    const std::vector<unsigned long>& factors) {
  std::vector<std::vector<unsigned long>> out{{}};
  for (unsigned long d : factors) {
    std::vector<std::vector<unsigned long>> next;
    for (const auto& t : out) {
      for (unsigned long a = 0; a < d; ++a) {
        auto nt = t;
        nt.push_back(a);
        next.push_back(std::move(nt));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string tuple_name(const std::vector<unsigned long>& t) {
  if (t.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "." : "") << t[i];
  return os.str();
}

}  // namespace

CharacterTable build_abelian_table(const std::vector<unsigned long>& factors) {
  for (unsigned long d : factors)
    if (d < 2) throw InvalidArgument("abelian factors must be >= 2");
  unsigned long m = 1;
  Int order = 1;
  for (unsigned long d : factors) {
    m = lcm_ul(m, d);
    order *= Int(static_cast<long>(d));
  }
  auto tuples = all_tuples(factors);
  std::vector<ConjClass> classes;
  std::vector<std::string> names;
  for (const auto& t : tuples) {
    classes.push_back({tuple_name(t), 1});
    names.push_back(tuple_name(t));
  }
  std::vector<std::vector<CyclotomicInt>> values;
  for (const auto& a : tuples) {
    std::vector<CyclotomicInt> row;
    for (const auto& b : tuples) {
      unsigned long e = 0;
      for (std::size_t i = 0; i < factors.size(); ++i)
        e = (e + a[i] * b[i] * (m / factors[i])) % m;
      row.push_back(CyclotomicInt::root_power(m, static_cast<long>(e)));
    }
    values.push_back(std::move(row));
  }
  std::string name = "Z";
  if (factors.empty()) {
    name = "Z1";
  } else {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i)
      os << (i ? "x" : "Z") << factors[i];
    name = os.str();
  }
  return CharacterTable(name, order, m, std::move(classes), std::move(names),
                        std::move(values));
}

CharacterTable build_dihedral_table(unsigned long n) {
  if (n < 3) throw InvalidArgument("dihedral table builder needs n >= 3");
  const long ln = static_cast<long>(n);
  std::vector<ConjClass> classes;
  classes.push_back({"e", 1});
  const unsigned long half = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  for (unsigned long k = 1; k <= half; ++k) {
    Int size = (n % 2 == 0 && k == n / 2) ? 1 : 2;
    classes.push_back({"r" + std::to_string(k), size});
  }
  if (n % 2 == 1) {
    classes.push_back({"s", Int(ln)});
  } else {
    classes.push_back({"s", Int(ln / 2)});
    classes.push_back({"rs", Int(ln / 2)});
  }
  const std::size_t nc = classes.size();
  std::vector<std::string> names;
  std::vector<std::vector<CyclotomicInt>> values;

  auto rotation_exponent = [&](std::size_t c) -> long {
    // classes 1..half are the rotation classes r^k
    return static_cast<long>(c);
  };
  // one-dimensional characters
  {
    std::vector<CyclotomicInt> triv(nc, CyclotomicInt(1));
    names.push_back("triv");
    values.push_back(triv);
    std::vector<CyclotomicInt> sgn(nc, CyclotomicInt(1));
    if (n % 2 == 1) {
      sgn[nc - 1] = CyclotomicInt(-1);
    } else {
      sgn[nc - 2] = CyclotomicInt(-1);
      sgn[nc - 1] = CyclotomicInt(-1);
    }
    names.push_back("sgn");
    values.push_back(sgn);
    if (n % 2 == 0) {
      // r -> -1 with the two choices of sign on the reflections
      std::vector<CyclotomicInt> b1(nc), b2(nc);
      b1[0] = b2[0] = CyclotomicInt(1);
      for (std::size_t c = 1; c <= half; ++c) {
        long k = rotation_exponent(c);
        CyclotomicInt v((k % 2 == 0) ? 1 : -1);
        b1[c] = v;
        b2[c] = v;
      }
      b1[nc - 2] = CyclotomicInt(1);
      b1[nc - 1] = CyclotomicInt(-1);
      b2[nc - 2] = CyclotomicInt(-1);
      b2[nc - 1] = CyclotomicInt(1);
      names.push_back("b1");
      values.push_back(b1);
      names.push_back("b2");
      values.push_back(b2);
    }
  }
  // two-dimensional characters E_j
  const unsigned long two_dim_count = (n % 2 == 1) ? (n - 1) / 2 : n / 2 - 1;
  for (unsigned long j = 1; j <= two_dim_count; ++j) {
    std::vector<CyclotomicInt> row(nc);
    row[0] = CyclotomicInt(2);
    for (std::size_t c = 1; c <= half; ++c) {
      long k = rotation_exponent(c);
      row[c] = CyclotomicInt::root_power(n, static_cast<long>(j) * k) +
               CyclotomicInt::root_power(n, -static_cast<long>(j) * k);
    }
    // reflections already zero
    names.push_back("E" + std::to_string(j));
    values.push_back(std::move(row));
  }
  return CharacterTable("D" + std::to_string(n), Int(2 * ln),
                        static_cast<unsigned long>(lcm_ul(n, 2)),
                        std::move(classes), std::move(names),
                        std::move(values));
}

// ---------------------------------------------------------------------------
// representations

RepVector RepVector::parse(const std::string& csv, std::size_t expected_size) {
  std::vector<Int> mults;
  std::string tok;
  std::istringstream is(csv);
  while (std::getline(is, tok, ',')) mults.push_back(parse_int(tok));
  if (mults.size() != expected_size)
    throw ParseError("expected " + std::to_string(expected_size) +
                     " multiplicities, got " + std::to_string(mults.size()));
  return RepVector(std::move(mults));
}

bool RepVector::is_genuine() const {
  for (const Int& v : mults_)
    if (v < 0) return false;
  return true;
}

Int RepVector::dimension(const CharacterTable& t) const {
  if (mults_.size() != t.num_irreps())
    throw InvalidArgument("multiplicity vector length mismatch");
  Int d = 0;
  for (std::size_t i = 0; i < mults_.size(); ++i) d += mults_[i] * t.dim(i);
  return d;
}

std::string RepVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < mults_.size(); ++i)
    os << (i ? "," : "") << mults_[i];
  return os.str();
}

std::vector<CyclotomicInt> character_of(const CharacterTable& t,
                                        const RepVector& v) {
  if (v.size() != t.num_irreps())
    throw InvalidArgument("multiplicity vector length mismatch");
  std::vector<CyclotomicInt> chi(t.num_classes());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Int& m = v.multiplicities()[i];
    if (m == 0) continue;
    for (std::size_t c = 0; c < t.num_classes(); ++c)
      chi[c] = chi[c] + CyclotomicInt(m) * t.value(i, c);
  }
  return chi;
}

// ---------------------------------------------------------------------------
// fusions

ClassFusion identity_fusion(const CharacterTable& t) {
  ClassFusion f;
  f.class_map.resize(t.num_classes());
  for (std::size_t c = 0; c < t.num_classes(); ++c) f.class_map[c] = c;
  return f;
}

ClassFusion symmetric_group_fusion(int n) {
  if (n < 2) throw InvalidArgument("symmetric fusion needs n >= 2");
  std::vector<Partition> sub = partitions_of(n - 1);
  std::vector<Partition> amb = partitions_of(n);
  ClassFusion f;
  for (const Partition& mu : sub) {
    std::vector<int> parts = mu.parts();
    parts.push_back(1);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    Partition image(parts);
    auto it = std::find(amb.begin(), amb.end(), image);
    f.class_map.push_back(static_cast<std::size_t>(it - amb.begin()));
  }
  return f;
}

ClassFusion cyclic_in_dihedral_fusion(unsigned long n) {
  // cyclic classes are the elements r^k, k = 0..n-1; the ambient class of
  // r^k is indexed by min(k, n-k)
  ClassFusion f;
  for (unsigned long k = 0; k < n; ++k)
    f.class_map.push_back(std::min(k, n - k));
  return f;
}

ClassFusion abelian_embedding_fusion(
    const std::vector<unsigned long>& h_factors,
    const std::vector<unsigned long>& g_factors,
    const std::vector<std::vector<unsigned long>>& image_tuples) {
  if (image_tuples.size() != h_factors.size())
    throw InvalidArgument("one image tuple per subgroup generator required");
  for (const auto& t : image_tuples)
    if (t.size() != g_factors.size())
      throw InvalidArgument("image tuple arity mismatch");
  // homomorphism: the order of each generator must kill its image
  for (std::size_t i = 0; i < h_factors.size(); ++i)
    for (std::size_t j = 0; j < g_factors.size(); ++j)
      if ((image_tuples[i][j] * h_factors[i]) % g_factors[j] != 0)
        throw InvalidArgument("generator image order does not divide");

  auto h_tuples = all_tuples(h_factors);
  auto g_tuples = all_tuples(g_factors);
  auto g_index = [&](const std::vector<unsigned long>& t) -> std::size_t {
    auto it = std::find(g_tuples.begin(), g_tuples.end(), t);
    return static_cast<std::size_t>(it - g_tuples.begin());
  };
  ClassFusion f;
  std::vector<std::size_t> seen;
  for (const auto& b : h_tuples) {
    std::vector<unsigned long> img(g_factors.size(), 0);
    for (std::size_t i = 0; i < h_factors.size(); ++i)
      for (std::size_t j = 0; j < g_factors.size(); ++j)
        img[j] = (img[j] + b[i] * image_tuples[i][j]) % g_factors[j];
    f.class_map.push_back(g_index(img));
  }
  seen = f.class_map;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InvalidArgument("embedding is not injective");
  return f;
}

IntMatrix restriction_matrix(const CharacterTable& g, const CharacterTable& h,
                             const ClassFusion& fusion) {
  if (fusion.class_map.size() != h.num_classes())
    throw InvalidArgument("fusion length must match subgroup class count");
  for (std::size_t c = 0; c < h.num_classes(); ++c)
    if (fusion.class_map[c] >= g.num_classes())
      throw InvalidArgument("fusion maps outside the ambient classes");
  if (fusion.class_map[h.identity_class()] != g.identity_class())
    throw InvalidArgument("fusion must send identity to identity");
  if (!divides(h.order(), g.order()))
    throw InvalidArgument("subgroup order does not divide the group order");

  IntMatrix b(h.num_classes(), g.num_classes());
  for (std::size_t i = 0; i < g.num_classes(); ++i) {
    std::vector<CyclotomicInt> res(h.num_classes());
    for (std::size_t c = 0; c < h.num_classes(); ++c)
      res[c] = g.value(i, fusion.class_map[c]);
    for (std::size_t j = 0; j < h.num_classes(); ++j) {
      Int mult;
      try {
        mult = h.inner_product(res, h.row(j));
      } catch (const IntegrityError&) {
        throw InvalidArgument("fusion produces non-integral branching");
      }
      if (mult < 0)
        throw InvalidArgument("fusion produces negative branching");
      b.at(j, i) = mult;
    }
  }
  return b;
}

// ---------------------------------------------------------------------------
// critical groups

IntMatrix tensor_action_matrix(const CharacterTable& t, const RepVector& v) {
  std::vector<CyclotomicInt> chi_v = character_of(t, v);
  const std::size_t k = t.num_irreps();
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<CyclotomicInt> prod(t.num_classes());
    for (std::size_t c = 0; c < t.num_classes(); ++c)
      prod[c] = chi_v[c] * t.value(i, c);
    for (std::size_t j = 0; j < k; ++j) m.at(i, j) = t.inner_product(prod, t.row(j));
  }
  return m;
}

IntMatrix ctilde_matrix(const CharacterTable& t, const RepVector& v) {
  return tensor_action_matrix(t, v).scalar_minus(v.dimension(t));
}

IntMatrix r0_presentation_matrix(const CharacterTable& t, const RepVector& v) {
  IntMatrix ct = ctilde_matrix(t, v);
  const std::size_t k = t.num_irreps();
  if (k == 0) return IntMatrix(0, 0);
  // (dim V [1] - [V]) (x) V_i lands in the dimension-zero lattice, where the
  // coefficient of the basis element [V_j] - dim(V_j)[1] is just ct(i, j)
  IntMatrix m(k - 1, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 1; j < k; ++j) m.at(j - 1, i) = ct.at(i, j);
  return m;
}

bool is_faithful(const CharacterTable& t, const RepVector& v) {
  if (!v.is_genuine())
    throw InvalidArgument("faithfulness applies to genuine representations");
  std::vector<CyclotomicInt> chi = character_of(t, v);
  CyclotomicInt d(v.dimension(t));
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    if (c == t.identity_class()) continue;
    if (chi[c] == d) return false;
  }
  return true;
}

AbelianGroup critical_group(const CharacterTable& t, const RepVector& v) {
  if (!is_faithful(t, v))
    throw InvalidArgument("critical group requires a faithful representation");
  AbelianGroup via_r0 = cokernel(r0_presentation_matrix(t, v));
  if (via_r0.free_rank() != 0)
    throw IntegrityError("critical group came out infinite");
  AbelianGroup full = cokernel(ctilde_matrix(t, v));
  if (full.free_rank() != 1)
    throw IntegrityError("expected exactly one free summand");
  std::vector<Int> torsion = full.invariant_factors();
  torsion.pop_back();  // canonical order puts the single zero last
  if (!(AbelianGroup::from_invariant_factors(torsion) == via_r0))
    throw IntegrityError("the two critical-group routes disagree");
  return via_r0;
}

Int critical_group_order(const CharacterTable& t, const RepVector& v) {
  if (!is_faithful(t, v))
    throw InvalidArgument("order formula requires a faithful representation");
  std::vector<CyclotomicInt> chi = character_of(t, v);
  CyclotomicInt prod(Int(1));
  CyclotomicInt d(v.dimension(t));
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    if (c == t.identity_class()) continue;
    prod = prod * (d - chi[c]);
  }
  Int value = prod.rational_value();
  if (value <= 0 || !divides(t.order(), value))
    throw IntegrityError("order product failed to be a positive multiple");
  return exact_div(value, t.order());
}

std::vector<std::pair<Int, std::size_t>> repeated_value_subgroups(
    const CharacterTable& t, const RepVector& v) {
  if (!is_faithful(t, v))
    throw InvalidArgument("subgroup bounds require a faithful representation");
  std::vector<CyclotomicInt> chi = character_of(t, v);
  Int d = v.dimension(t);
  std::map<Int, std::size_t> counts;
  for (std::size_t c = 0; c < t.num_classes(); ++c)
    if (chi[c].is_rational_integer()) ++counts[chi[c].rational_value()];
  std::vector<std::pair<Int, std::size_t>> out;
  for (const auto& [a, m] : counts)
    if (m >= 2) out.emplace_back(d - a, m - 1);
  std::sort(out.begin(), out.end());
  return out;
}

RepVector twist(const CharacterTable& t, const RepVector& v,
                const std::vector<std::size_t>& sigma) {
  if (sigma.size() != t.num_irreps() || v.size() != sigma.size())
    throw InvalidArgument("twist permutation has the wrong length");
  std::vector<bool> hit(sigma.size(), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] >= sigma.size() || hit[sigma[i]])
      throw InvalidArgument("twist requires a permutation");
    hit[sigma[i]] = true;
    if (t.dim(i) != t.dim(sigma[i]))
      throw InvalidArgument("twist permutation does not preserve dimensions");
  }
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < sigma.size(); ++i)
    out[sigma[i]] = v.multiplicities()[i];
  return RepVector(std::move(out));
}

std::vector<std::size_t> s6_outer_permutation(const CharacterTable& s6) {
  std::vector<std::size_t> sigma(s6.num_irreps());
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
  const std::pair<const char*, const char*> swaps[] = {
      {"5,1", "2,2,2"}, {"2,1,1,1,1", "3,3"}, {"4,1,1", "3,1,1,1"}};
  for (const auto& [a, b] : swaps) {
    std::size_t ia = s6.irrep_index(a), ib = s6.irrep_index(b);
    sigma[ia] = ib;
    sigma[ib] = ia;
  }
  return sigma;
}

RepVector restrict_rep(const CharacterTable& g, const CharacterTable& h,
                       const ClassFusion& fusion, const RepVector& v) {
  IntMatrix b = restriction_matrix(g, h, fusion);
  std::vector<Int> mults(h.num_irreps());
  for (std::size_t j = 0; j < h.num_irreps(); ++j)
    for (std::size_t i = 0; i < g.num_irreps(); ++i)
      mults[j] += b.at(j, i) * v.multiplicities()[i];
  return RepVector(std::move(mults));
}

CokernelMap res_map_on_critical_groups(const CharacterTable& g,
                                       const CharacterTable& h,
                                       const ClassFusion& fusion,
                                       const RepVector& v) {
  IntMatrix b = restriction_matrix(g, h, fusion);
  RepVector res_v = restrict_rep(g, h, fusion, v);
  if (!is_faithful(h, res_v))
    throw IntegrityError("restriction of a faithful representation must stay "
                         "faithful on a subgroup");
  const std::size_t lg = g.num_irreps(), lh = h.num_irreps();
  IntMatrix f(lh - 1, lg - 1);
  for (std::size_t j = 1; j < lh; ++j)
    for (std::size_t i = 1; i < lg; ++i) f.at(j - 1, i - 1) = b.at(j, i);
  return induced_cokernel_map(f, r0_presentation_matrix(g, v),
                              r0_presentation_matrix(h, res_v));
}

CokernelMap ind_map_on_critical_groups(const CharacterTable& g,
                                       const CharacterTable& h,
                                       const ClassFusion& fusion,
                                       const RepVector& v) {
  IntMatrix b = restriction_matrix(g, h, fusion);
  RepVector res_v = restrict_rep(g, h, fusion, v);
  if (!is_faithful(h, res_v))
    throw IntegrityError("restriction of a faithful representation must stay "
                         "faithful on a subgroup");
  const std::size_t lg = g.num_irreps(), lh = h.num_irreps();
  // induction is the transpose branching, pushed into the dimension-zero
  // basis: Ind(b_j) = sum_i (B(j,i) - dim_j B(0,i)) b_i
  IntMatrix f(lg - 1, lh - 1);
  for (std::size_t i = 1; i < lg; ++i)
    for (std::size_t j = 1; j < lh; ++j)
      f.at(i - 1, j - 1) = b.at(j, i) - h.dim(j) * b.at(0, i);
  return induced_cokernel_map(f, r0_presentation_matrix(h, res_v),
                              r0_presentation_matrix(g, v));
}

}  // namespace critgrp
