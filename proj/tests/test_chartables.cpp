#include <doctest.h>

#include "core/chartable.hpp"
#include "core/posets.hpp"
#include "tests/testutil.hpp"

using namespace critgrp;

namespace {

RepVector unit_rep(const CharacterTable& t, const std::string& irrep) {
  std::vector<Int> m(t.num_irreps());
  m[t.irrep_index(irrep)] = 1;
  return RepVector(std::move(m));
}

RepVector perm_rep_s4(const CharacterTable& s4) {
  // permutation action on 4 points: trivial plus the standard 3-dimensional
  std::vector<Int> m(s4.num_irreps());
  m[s4.irrep_index("4")] = 1;
  m[s4.irrep_index("3,1")] = 1;
  return RepVector(std::move(m));
}

}  // namespace

TEST_CASE("symmetric group character tables") {
  CharacterTable s4 = build_symmetric_table(4);
  SUBCASE("full 5x5 table for n=4") {
    REQUIRE(s4.num_irreps() == 5);
    // rows by descending partition; columns keyed by cycle type
    auto check_row = [&](const char* irrep,
                         std::initializer_list<std::pair<const char*, long>>
                             expected) {
      std::size_t i = s4.irrep_index(irrep);
      for (const auto& [cls, val] : expected)
        CHECK(s4.value(i, s4.class_index(cls)) == CyclotomicInt(val));
    };
    check_row("4", {{"1,1,1,1", 1}, {"2,1,1", 1}, {"3,1", 1}, {"4", 1}, {"2,2", 1}});
    check_row("3,1",
              {{"1,1,1,1", 3}, {"2,1,1", 1}, {"3,1", 0}, {"4", -1}, {"2,2", -1}});
    check_row("2,2",
              {{"1,1,1,1", 2}, {"2,1,1", 0}, {"3,1", -1}, {"4", 0}, {"2,2", 2}});
    check_row("2,1,1",
              {{"1,1,1,1", 3}, {"2,1,1", -1}, {"3,1", 0}, {"4", 1}, {"2,2", -1}});
    check_row("1,1,1,1",
              {{"1,1,1,1", 1}, {"2,1,1", -1}, {"3,1", 1}, {"4", -1}, {"2,2", 1}});
  }
  SUBCASE("trivial and sign rows for several n") {
    for (int n = 2; n <= 6; ++n) {
      CharacterTable t = build_symmetric_table(n);
      std::size_t triv = t.irrep_index(Partition({n}).to_string());
      std::size_t sgn = t.irrep_index(Partition(std::vector<int>(n, 1)).to_string());
      for (std::size_t c = 0; c < t.num_classes(); ++c) {
        CHECK(t.value(triv, c) == CyclotomicInt(1));
        Partition mu = Partition::parse(t.conj_class(c).name);
        long sign = ((n - static_cast<int>(mu.length())) % 2 == 0) ? 1 : -1;
        CHECK(t.value(sgn, c) == CyclotomicInt(sign));
      }
    }
  }
  SUBCASE("n=6 is an 11x11 table with dimension sum 720") {
    CharacterTable s6 = build_symmetric_table(6);
    CHECK(s6.num_irreps() == 11);
    Int sum = 0;
    for (std::size_t i = 0; i < 11; ++i) sum += s6.dim(i) * s6.dim(i);
    CHECK(sum == 720);  // orthogonality was already enforced on build
  }
  CHECK_THROWS_AS(build_symmetric_table(9), InvalidArgument);
}

TEST_CASE("abelian tables") {
  SUBCASE("Z6: powers of a primitive sixth root") {
    CharacterTable z6 = build_abelian_table({6});
    CHECK(z6.order() == 6);
    CHECK(z6.is_abelian());
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b)
        CHECK(z6.value(a, b) ==
              CyclotomicInt::root_power(6, static_cast<long>(a * b)));
  }
  SUBCASE("trivial group") {
    CharacterTable t = build_abelian_table({});
    CHECK(t.num_irreps() == 1);
    CHECK(t.order() == 1);
  }
  SUBCASE("Z2xZ2: four real characters") {
    CharacterTable t = build_abelian_table({2, 2});
    CHECK(t.num_irreps() == 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t c = 0; c < 4; ++c) {
        Int v = t.value(i, c).rational_value();
        CHECK((v == 1 || v == -1));
      }
  }
}

TEST_CASE("dihedral tables") {
  SUBCASE("D5") {
    CharacterTable d5 = build_dihedral_table(5);
    CHECK(d5.num_classes() == 4);
    CHECK(multiset({to_int64(d5.dim(0)).value(), to_int64(d5.dim(1)).value(),
                    to_int64(d5.dim(2)).value(), to_int64(d5.dim(3)).value()}) ==
          multiset({1, 1, 2, 2}));
    // the rotation value of the first two-dimensional character is
    // zeta + zeta^4, not a rational integer
    CyclotomicInt v = d5.value(d5.irrep_index("E1"), d5.class_index("r1"));
    CHECK_FALSE(v.is_rational_integer());
    CHECK(v == CyclotomicInt::root_power(5, 1) + CyclotomicInt::root_power(5, 4));
  }
  SUBCASE("even case passes validation too") {
    CharacterTable d6 = build_dihedral_table(6);
    CHECK(d6.num_classes() == 6);
    CHECK(d6.order() == 12);
  }
  CHECK_THROWS_AS(build_dihedral_table(2), InvalidArgument);
}

TEST_CASE("tensor action and ctilde") {
  CharacterTable s4 = build_symmetric_table(4);
  RepVector v = perm_rep_s4(s4);
  SUBCASE("ctilde matches the reference matrix entry for entry") {
    IntMatrix expected{{3, -1, 0, 0, 0},
                      {-1, 2, -1, -1, 0},
                      {0, -1, 3, -1, 0},
                      {0, -1, -1, 2, -1},
                      {0, 0, 0, -1, 3}};
    CHECK(ctilde_matrix(s4, v) == expected);
  }
  SUBCASE("trivial representation gives the identity action") {
    CHECK(tensor_action_matrix(s4, unit_rep(s4, "4")) ==
          IntMatrix::identity(5));
  }
  SUBCASE("D5 virtual-free 4x4 integer matrix") {
    CharacterTable d5 = build_dihedral_table(5);
    std::vector<Int> m(4);
    m[d5.irrep_index("E1")] = 1;
    m[d5.irrep_index("sgn")] = 1;
    IntMatrix t = tensor_action_matrix(d5, RepVector(m));
    CHECK(t.rows() == 4);
    CHECK(t.cols() == 4);
  }
  SUBCASE("ring homomorphism on tensor products") {
    // [V][W] = [V (x) W] as operators
    RepVector w = unit_rep(s4, "2,2");
    IntMatrix tv = tensor_action_matrix(s4, v);
    IntMatrix tw = tensor_action_matrix(s4, w);
    // multiplicities of V (x) W: row of the trivial character under both
    std::vector<Int> vw(5);
    for (std::size_t j = 0; j < 5; ++j) {
      // (V (x) W) decomposition = row of W-action at index of V's rows summed
      Int acc = 0;
      for (std::size_t k = 0; k < 5; ++k)
        acc += tv.at(s4.irrep_index("4"), k) * tw.at(k, j);
      vw[j] = acc;
    }
    CHECK(tensor_action_matrix(s4, RepVector(vw)) == tw * tv);
  }
}

TEST_CASE("eigenvector identity for table columns") {
  // ctilde applied to each character-table column scales it by
  // dim V - chi_V(g), exactly over the cyclotomics
  auto check_table = [](const CharacterTable& t, const RepVector& v) {
    IntMatrix ct = ctilde_matrix(t, v);
    std::vector<CyclotomicInt> chi_v = character_of(t, v);
    CyclotomicInt d(v.dimension(t));
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
      for (std::size_t i = 0; i < t.num_irreps(); ++i) {
        CyclotomicInt acc;
        for (std::size_t j = 0; j < t.num_irreps(); ++j)
          acc = acc + CyclotomicInt(ct.at(i, j)) * t.value(j, c);
        CHECK(acc == (d - chi_v[c]) * t.value(i, c));
      }
    }
  };
  CharacterTable s4 = build_symmetric_table(4);
  check_table(s4, perm_rep_s4(s4));
  CharacterTable z6 = build_abelian_table({6});
  check_table(z6, RepVector(int_vec({0, 1, 0, 1, 0, 0})));
  CharacterTable d5 = build_dihedral_table(5);
  std::vector<Int> m(4);
  m[d5.irrep_index("E1")] = 1;
  m[d5.irrep_index("sgn")] = 1;
  check_table(d5, RepVector(m));
}

TEST_CASE("faithfulness") {
  CharacterTable s4 = build_symmetric_table(4);
  CHECK(is_faithful(s4, perm_rep_s4(s4)));
  CHECK_FALSE(is_faithful(s4, unit_rep(s4, "4")));
  CHECK_FALSE(is_faithful(s4, unit_rep(s4, "2,2")));  // kernel contains 2,2-type
  // regular representation: multiplicity = dimension
  std::vector<Int> reg;
  for (std::size_t i = 0; i < s4.num_irreps(); ++i) reg.push_back(s4.dim(i));
  CHECK(is_faithful(s4, RepVector(reg)));
}

TEST_CASE("critical groups of representations") {
  CharacterTable s4 = build_symmetric_table(4);
  RepVector v = perm_rep_s4(s4);
  SUBCASE("4-point permutation representation") {
    CHECK(critical_group(s4, v) == AbelianGroup::from_invariant_factors({4}));
    CHECK(critical_group_order(s4, v) == 4);
    auto bounds = repeated_value_subgroups(s4, v);
    REQUIRE(bounds.size() == 1);
    CHECK(bounds[0].first == 4);
    CHECK(bounds[0].second == 1);
  }
  SUBCASE("non-faithful input is rejected") {
    CHECK_THROWS_AS(critical_group(s4, unit_rep(s4, "2,2")), InvalidArgument);
  }
  SUBCASE("dihedral example: K = Z/2 with irrational character values") {
    CharacterTable d5 = build_dihedral_table(5);
    std::vector<Int> m(4);
    m[d5.irrep_index("E1")] = 1;
    m[d5.irrep_index("sgn")] = 1;
    RepVector rep(m);
    CHECK(critical_group(d5, rep) == AbelianGroup::from_invariant_factors({2}));
    CHECK(critical_group_order(d5, rep) == 2);
  }
  SUBCASE("doubled sign character of Z2 has order (2-(-2))/2 = 2") {
    CharacterTable z2 = build_abelian_table({2});
    RepVector doubled_sign(int_vec({0, 2}));
    CHECK(critical_group_order(z2, doubled_sign) == 2);
    CHECK(critical_group(z2, doubled_sign) ==
          AbelianGroup::from_invariant_factors({2}));
    // the regular representation, by contrast, has character value 0 away
    // from the identity and trivial critical group
    RepVector reg(int_vec({1, 1}));
    CHECK(critical_group_order(z2, reg) == 1);
    CHECK(critical_group(z2, reg).is_trivial());
  }
  SUBCASE("order formula equals the group order across small cases") {
    std::vector<std::pair<CharacterTable, RepVector>> cases;
    for (int n = 2; n <= 5; ++n) {
      CharacterTable t = build_symmetric_table(n);
      std::vector<Int> reg;
      for (std::size_t i = 0; i < t.num_irreps(); ++i) reg.push_back(t.dim(i));
      cases.emplace_back(t, RepVector(reg));
    }
    for (const auto& [t, rep] : cases)
      CHECK(*critical_group(t, rep).order() == critical_group_order(t, rep));
  }
}

TEST_CASE("subgroup bounds embed in the critical group") {
  CharacterTable s5 = build_symmetric_table(5);
  std::vector<Int> m(s5.num_irreps());
  m[s5.irrep_index("5")] = 1;
  m[s5.irrep_index("4,1")] = 1;
  RepVector v(m);
  AbelianGroup k = critical_group(s5, v);
  for (const auto& [q, e] : repeated_value_subgroups(s5, v))
    CHECK(k.contains_power_of_cyclic(q, e));
}

TEST_CASE("twists") {
  CharacterTable s6 = build_symmetric_table(6);
  std::vector<std::size_t> sigma = s6_outer_permutation(s6);
  SUBCASE("swap list") {
    CHECK(sigma[s6.irrep_index("5,1")] == s6.irrep_index("2,2,2"));
    CHECK(sigma[s6.irrep_index("3,3")] == s6.irrep_index("2,1,1,1,1"));
    CHECK(sigma[s6.irrep_index("4,1,1")] == s6.irrep_index("3,1,1,1"));
    CHECK(sigma[s6.irrep_index("6")] == s6.irrep_index("6"));
  }
  SUBCASE("identity permutation fixes the vector") {
    std::vector<std::size_t> id(s6.num_irreps());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    RepVector v = unit_rep(s6, "5,1");
    CHECK(twist(s6, v, id) == v);
  }
  SUBCASE("dimension mismatch is rejected") {
    CharacterTable s4 = build_symmetric_table(4);
    std::vector<std::size_t> bad(s4.num_irreps());
    for (std::size_t i = 0; i < bad.size(); ++i) bad[i] = i;
    std::swap(bad[s4.irrep_index("4")], bad[s4.irrep_index("3,1")]);
    CHECK_THROWS_AS(twist(s4, unit_rep(s4, "4"), bad), InvalidArgument);
  }
  SUBCASE("paper pairs: twisting preserves the critical group") {
    const char* reps[] = {"5,1", "2,1,1,1,1", "4,1,1"};
    for (const char* name : reps) {
      RepVector v = unit_rep(s6, name);
      CHECK(critical_group(s6, v) == critical_group(s6, twist(s6, v, sigma)));
    }
  }
}

TEST_CASE("six-letter critical groups match the published list") {
  CharacterTable s6 = build_symmetric_table(6);
  CHECK(critical_group(s6, unit_rep(s6, "5,1")) ==
        AbelianGroup::from_invariant_factors({6, 6, 120}));
  CHECK(critical_group(s6, unit_rep(s6, "2,1,1,1,1")) ==
        AbelianGroup::from_invariant_factors({24, 480}));
  CHECK(critical_group(s6, unit_rep(s6, "4,1,1")) ==
        AbelianGroup::from_invariant_factors({3, 90, 47520}));
}

TEST_CASE("restriction matrices") {
  SUBCASE("S4 to S3 matches the down map in Young's lattice") {
    CharacterTable s4 = build_symmetric_table(4);
    CharacterTable s3 = build_symmetric_table(3);
    IntMatrix b = restriction_matrix(s4, s3, symmetric_group_fusion(4));
    // Res V_{(3,1)} = V_{(3)} + V_{(2,1)}
    std::size_t i31 = s4.irrep_index("3,1");
    CHECK(b.at(s3.irrep_index("3"), i31) == 1);
    CHECK(b.at(s3.irrep_index("2,1"), i31) == 1);
    CHECK(b.at(s3.irrep_index("1,1,1"), i31) == 0);
    // the full matrix is the rank-4 down map up to the partition indexing
    const RankBasis& b4 = rank_basis(1, 4);
    const RankBasis& b3 = rank_basis(1, 3);
    const IntMatrix& d = down_matrix(1, 4);
    for (std::size_t j = 0; j < s3.num_irreps(); ++j)
      for (std::size_t i = 0; i < s4.num_irreps(); ++i) {
        std::size_t pj = b3.index_of(
            MultiPartition({Partition::parse(s3.irrep_name(j))}));
        std::size_t pi = b4.index_of(
            MultiPartition({Partition::parse(s4.irrep_name(i))}));
        CHECK(b.at(j, i) == d.at(pj, pi));
      }
  }
  SUBCASE("trivial restricts to trivial") {
    CharacterTable s4 = build_symmetric_table(4);
    CharacterTable s3 = build_symmetric_table(3);
    IntMatrix b = restriction_matrix(s4, s3, symmetric_group_fusion(4));
    CHECK(b.at(s3.irrep_index("3"), s4.irrep_index("4")) == 1);
  }
  SUBCASE("dihedral to cyclic: the 2-dim irrep splits into two characters") {
    CharacterTable d5 = build_dihedral_table(5);
    CharacterTable c5 = build_abelian_table({5});
    IntMatrix b = restriction_matrix(d5, c5, cyclic_in_dihedral_fusion(5));
    std::size_t e1 = d5.irrep_index("E1");
    CHECK(b.at(c5.irrep_index("1"), e1) == 1);
    CHECK(b.at(c5.irrep_index("4"), e1) == 1);
    CHECK(b.at(c5.irrep_index("0"), e1) == 0);
    CHECK(b.at(c5.irrep_index("2"), e1) == 0);
  }
}

TEST_CASE("restriction and induction maps on critical groups") {
  SUBCASE("D5 to C5: not surjective") {
    CharacterTable d5 = build_dihedral_table(5);
    CharacterTable c5 = build_abelian_table({5});
    std::vector<Int> m(4);
    m[d5.irrep_index("E1")] = 1;
    m[d5.irrep_index("sgn")] = 1;
    RepVector v(m);
    CokernelMap res = res_map_on_critical_groups(
        d5, c5, cyclic_in_dihedral_fusion(5), v);
    CHECK(res.source == AbelianGroup::from_invariant_factors({2}));
    CHECK(res.target == AbelianGroup::from_invariant_factors({5}));
    CHECK_FALSE(res.surjective);
  }
  SUBCASE("identity fusion gives the identity map") {
    CharacterTable s4 = build_symmetric_table(4);
    RepVector v = perm_rep_s4(s4);
    CokernelMap res =
        res_map_on_critical_groups(s4, s4, identity_fusion(s4), v);
    CHECK(res.source == res.target);
    CHECK(res.surjective);
    CHECK(res.injective);
  }
  SUBCASE("abelian tower: surjective restriction, injective induction") {
    CharacterTable z6 = build_abelian_table({6});
    CharacterTable z2 = build_abelian_table({2});
    ClassFusion fusion = abelian_embedding_fusion({2}, {6}, {{3}});
    RepVector v(int_vec({0, 1, 0, 1, 0, 0}));
    CokernelMap res = res_map_on_critical_groups(z6, z2, fusion, v);
    CHECK(res.surjective);
    CokernelMap ind = ind_map_on_critical_groups(z6, z2, fusion, v);
    CHECK(ind.injective);
    CHECK(ind.source == res.target);
    CHECK(ind.target == res.source);
  }
}
