#include <doctest.h>

#include <random>

#include "core/posets.hpp"
#include "core/smith.hpp"
#include "tests/testutil.hpp"

using namespace critgrp;

namespace {

// 10x10 operator matrices on the third rank for r = 2, pinned as reference
// data: U^2 D^2 and U D in the r-lexicographic basis order.
IntMatrix u2d2_rank3_r2() {
  return IntMatrix{{1, 2, 1, 2, 2, 1, 1, 0, 0, 0},
                   {2, 4, 2, 4, 4, 2, 2, 0, 0, 0},
                   {1, 2, 1, 2, 2, 1, 1, 0, 0, 0},
                   {2, 4, 2, 5, 5, 4, 4, 1, 2, 1},
                   {2, 4, 2, 5, 5, 4, 4, 1, 2, 1},
                   {1, 2, 1, 4, 4, 5, 5, 2, 4, 2},
                   {1, 2, 1, 4, 4, 5, 5, 2, 4, 2},
                   {0, 0, 0, 1, 1, 2, 2, 1, 2, 1},
                   {0, 0, 0, 2, 2, 4, 4, 2, 4, 2},
                   {0, 0, 0, 1, 1, 2, 2, 1, 2, 1}};
}

IntMatrix ud_rank3_r2() {
  return IntMatrix{{1, 1, 0, 1, 0, 0, 0, 0, 0, 0},
                   {1, 2, 1, 1, 1, 0, 0, 0, 0, 0},
                   {0, 1, 1, 0, 1, 0, 0, 0, 0, 0},
                   {1, 1, 0, 2, 1, 1, 1, 0, 0, 0},
                   {0, 1, 1, 1, 2, 1, 1, 0, 0, 0},
                   {0, 0, 0, 1, 1, 2, 1, 1, 1, 0},
                   {0, 0, 0, 1, 1, 1, 2, 0, 1, 1},
                   {0, 0, 0, 0, 0, 1, 0, 1, 1, 0},
                   {0, 0, 0, 0, 0, 1, 1, 1, 2, 1},
                   {0, 0, 0, 0, 0, 0, 1, 0, 1, 1}};
}

UDWord random_balanced_word(std::mt19937_64& rng, std::size_t k) {
  std::string s(2 * k, 'D');
  for (std::size_t i = 0; i < k; ++i) s[i] = 'U';
  std::shuffle(s.begin(), s.end(), rng);
  return UDWord(s);
}

}  // namespace

TEST_CASE("partition basics") {
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(7).size() == 15);  // brute-force enumeration count
  CHECK(partition_count(20) == 627);

  Partition p({3, 1});
  CHECK(p.conjugate() == Partition({2, 1, 1}));
  CHECK(p.size() == 4);
  CHECK(Partition({2, 1, 1}).ones() == 2);
  CHECK(Partition::parse("3,1") == p);
  CHECK(p.to_string() == "3,1");
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto all = partitions_of(1 + static_cast<int>(rng() % 9));
    const Partition& q = all[rng() % all.size()];
    CHECK(q.conjugate().conjugate() == q);
    CHECK(q.conjugate().size() == q.size());
  }
}

TEST_CASE("multipartition text form") {
  MultiPartition m({Partition({3, 1}), Partition({2})});
  CHECK(m.to_string() == "3,1|2");
  CHECK(MultiPartition::parse("3,1|2", 2) == m);
  CHECK(MultiPartition::parse("|", 2).size() == 0);
  CHECK_THROWS_AS(MultiPartition::parse("3,1", 2), ParseError);
}

TEST_CASE("rank basis ordering and cardinality") {
  SUBCASE("r=2, n=3 in full") {
    const RankBasis& b = rank_basis(2, 3);
    REQUIRE(b.size() == 10);
    const char* expected[] = {"|1,1,1", "|2,1",   "|3",   "1|1,1", "1|2",
                              "1,1|1",  "2|1",    "1,1,1|", "2,1|", "3|"};
    for (std::size_t i = 0; i < 10; ++i)
      CHECK(b.elements()[i].to_string() == expected[i]);
    for (std::size_t i = 0; i < 10; ++i)
      CHECK(b.index_of(b.elements()[i]) == i);
  }
  CHECK(rank_basis(1, 4).size() == 5);
  CHECK(rank_basis(3, 0).size() == 1);
  CHECK(rank_size(2, 3) == 10);
  CHECK(rank_size(3, 4) == 51);
  CHECK(rank_size(1, -2) == 0);
}

TEST_CASE("up and down matrices") {
  SUBCASE("single-box moves at the bottom of Y") {
    CHECK(up_matrix(1, 1) == IntMatrix{{1}, {1}});  // (1) -> (2) + (1,1)
    CHECK(down_matrix(1, 0) == IntMatrix(0, 1));
  }
  SUBCASE("column of (3,1) in the down map at rank 4") {
    const RankBasis& b4 = rank_basis(1, 4);
    const RankBasis& b3 = rank_basis(1, 3);
    const IntMatrix& d = down_matrix(1, 4);
    std::size_t col = b4.index_of(MultiPartition({Partition({3, 1})}));
    for (std::size_t i = 0; i < b3.size(); ++i) {
      bool expected = b3.elements()[i] == MultiPartition({Partition({3})}) ||
                      b3.elements()[i] == MultiPartition({Partition({2, 1})});
      CHECK(d.at(i, col) == (expected ? 1 : 0));
    }
  }
  SUBCASE("commutator identity across a grid") {
    for (std::size_t r = 1; r <= 3; ++r) {
      for (int n = 0; n <= 5; ++n) {
        std::size_t pn = rank_basis(r, n).size();
        IntMatrix du = down_matrix(r, n + 1) * up_matrix(r, n);
        IntMatrix ud = n > 0 ? up_matrix(r, n - 1) * down_matrix(r, n)
                             : IntMatrix(pn, pn);
        CHECK(du - ud ==
              IntMatrix::identity(pn).scaled(Int(static_cast<long>(r))));
      }
    }
  }
  SUBCASE("up is the transpose of down") {
    for (std::size_t r = 1; r <= 2; ++r)
      for (int n = 1; n <= 5; ++n)
        CHECK(up_matrix(r, n - 1) == down_matrix(r, n).transpose());
  }
}

TEST_CASE("pinned rank-3 operator matrices for r=2") {
  CHECK(ud_power_matrix(2, 3, 2) == u2d2_rank3_r2());
  CHECK(ud_power_matrix(2, 3, 1) == ud_rank3_r2());
  // UDUD evaluated by direct composition agrees with U^2D^2 + 2 UD
  IntMatrix direct = word_operator_matrix(UDWord("UDUD"), 2, 3);
  CHECK(direct == u2d2_rank3_r2() + ud_rank3_r2().scaled(2));
}

TEST_CASE("word normal form") {
  SUBCASE("UDUD rewrites to U^2D^2 + r UD") {
    auto sym = word_normal_form_symbolic(UDWord("UDUD"));
    REQUIRE(sym.size() == 3);
    CHECK(sym[0].is_zero());
    CHECK(sym[1] == IntPoly::monomial(1));  // coefficient r
    CHECK(sym[2] == IntPoly({Int(1)}));
    auto f = WordPolynomial::from_word(UDWord("UDUD"), 2);
    CHECK(f.ud_coefficients() == int_vec({0, 2, 1}));
  }
  SUBCASE("UD and DU") {
    CHECK(WordPolynomial::from_word(UDWord("UD"), 5).ud_coefficients() ==
          int_vec({0, 1}));
    CHECK(WordPolynomial::from_word(UDWord("DU"), 5).ud_coefficients() ==
          int_vec({5, 1}));
  }
  SUBCASE("unbalanced words are rejected") {
    CHECK_THROWS_AS(WordPolynomial::from_word(UDWord("UUD"), 1),
                    InvalidArgument);
    CHECK_THROWS_AS(word_normal_form_symbolic(UDWord("UU")), InvalidArgument);
  }
  SUBCASE("ell") {
    CHECK(word_ell(UDWord("UDUD")) == 1);
    CHECK(word_ell(UDWord("UUDD")) == 2);
    CHECK(word_ell(UDWord("DU")) == 0);
  }
  SUBCASE("coefficients of balanced words are divisible by r below the top") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      UDWord w = random_balanced_word(rng, 1 + trial % 4);
      auto sym = word_normal_form_symbolic(w);
      CHECK(sym.back() == IntPoly({Int(1)}));
      for (std::size_t i = 0; i + 1 < sym.size(); ++i)
        CHECK(sym[i].coeff(0) == 0);  // no constant term in r
    }
  }
}

TEST_CASE("word operators") {
  SUBCASE("UD at rank 2 of Y") {
    CHECK(word_operator_matrix(UDWord("UD"), 1, 2) == IntMatrix{{1, 1}, {1, 1}});
  }
  SUBCASE("empty word is the identity") {
    CHECK(word_operator_matrix(UDWord(""), 2, 3) == IntMatrix::identity(10));
  }
  SUBCASE("dips below the bottom rank give the zero map") {
    CHECK(word_operator_matrix(UDWord("UD"), 1, 0) == IntMatrix(1, 1));
    CHECK(word_operator_matrix(UDWord("UUDD"), 2, 1).is_zero());
  }
  SUBCASE("direct evaluation equals the normal-form evaluation") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t r = 1 + trial % 3;
      int n = 1 + static_cast<int>(rng() % 4);
      UDWord w = random_balanced_word(rng, 1 + rng() % std::size_t(n));
      auto f = WordPolynomial::from_word(w, Int(static_cast<long>(r)));
      CHECK(word_operator_matrix(w, r, n) == word_operator_matrix(f, r, n));
    }
  }
}

TEST_CASE("alpha values") {
  SUBCASE("U^2D^2 at r=1: alpha_i = i(i-1)") {
    auto f = WordPolynomial::from_word(UDWord("UUDD"), 1);
    CHECK(alpha_values(f, 1, 4) == int_vec({0, 0, 2, 6, 12}));
  }
  SUBCASE("UD: alpha_i = r i") {
    auto f = WordPolynomial::from_word(UDWord("UD"), 3);
    CHECK(alpha_values(f, 3, 3) == int_vec({0, 3, 6, 9}));
  }
  SUBCASE("UDUD at r=2: alpha_i = (2i)^2") {
    auto f = WordPolynomial::from_word(UDWord("UDUD"), 2);
    CHECK(alpha_values(f, 2, 3) == int_vec({0, 4, 16, 36}));
  }
  SUBCASE("alphas are the eigenvalues: characteristic polynomial check") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
      std::size_t r = 1 + trial % 3;
      int n = 2 + static_cast<int>(rng() % 3);
      UDWord w = random_balanced_word(rng, 1 + rng() % 2);
      auto f = WordPolynomial::from_word(w, Int(static_cast<long>(r)));
      auto alphas = alpha_values(f, r, n);
      std::vector<std::pair<Int, std::size_t>> roots;
      for (int i = 0; i <= n; ++i) {
        Int mult = delta_p(r, n - i);
        if (mult > 0)
          roots.emplace_back(alphas[i],
                             static_cast<std::size_t>(*to_int64(mult)));
      }
      CHECK(char_poly(word_operator_matrix(f, r, n)) ==
            IntPoly::from_roots(roots));
    }
  }
}

TEST_CASE("rank increments and m0") {
  CHECK(delta_p(1, 0) == 1);
  CHECK(delta_p(2, 0) == 1);
  CHECK(delta_p(3, 0) == 1);
  CHECK(delta_p(1, -3) == 0);
  CHECK(delta_p(1, 2) == 1);
  CHECK(delta_p(1, 4) == 2);
  CHECK(m0(1, 1, 10) == 2);
  CHECK(m0(1, 2, 10) == 4);
  CHECK(delta_p(2, 1) == 1);
  CHECK(delta_p(2, 2) == 3);
  CHECK(m0(2, 2, 10) == 2);
  CHECK(m0(2, 3, 10) == 2);
  CHECK(m0(1, 100, 6) == -1);
}

TEST_CASE("path counts") {
  CHECK(path_count(MultiPartition({Partition({2, 1})})) == 2);
  CHECK(path_count(MultiPartition({Partition(), Partition()})) == 1);
  SUBCASE("squares sum to r^n n!") {
    for (std::size_t r = 1; r <= 3; ++r) {
      for (int n = 0; n <= 5; ++n) {
        Int total = 0;
        for (const MultiPartition& m : rank_basis(r, n).elements()) {
          Int e = path_count(m);
          total += e * e;
        }
        CHECK(total ==
              int_pow(Int(static_cast<long>(r)), static_cast<unsigned long>(n)) *
                  factorial(static_cast<unsigned long>(n)));
      }
    }
  }
  CHECK(path_count(MultiPartition({Partition({2}), Partition({1})})) == 3);
}

TEST_CASE("down maps are surjective over the integers") {
  for (std::size_t r = 1; r <= 3; ++r) {
    int nmax = r == 1 ? 7 : (r == 2 ? 5 : 4);
    for (int n = 1; n <= nmax; ++n) {
      auto s = smith_normal_form(down_matrix(r, n));
      for (const Int& d : s.diagonal) CHECK(d == 1);
    }
  }
}

TEST_CASE("kernel of the down map is the zero eigenspace of UD") {
  for (std::size_t r = 1; r <= 2; ++r) {
    for (int n = 1; n <= 5; ++n) {
      const IntMatrix& d = down_matrix(r, n);
      IntMatrix ud = ud_power_matrix(r, n, 1);
      IntMatrix kd = kernel_basis(d);
      IntMatrix kud = kernel_basis(ud);
      CHECK(Int(static_cast<long>(kd.cols())) ==
            rank_size(r, n) - rank_size(r, n - 1));
      CHECK(same_column_lattice(kd, kud));
    }
  }
}

TEST_CASE("characteristic polynomial of UD factors over rank increments") {
  for (std::size_t r = 1; r <= 3; ++r) {
    int nmax = r == 1 ? 6 : 4;
    for (int n = 1; n <= nmax; ++n) {
      std::vector<std::pair<Int, std::size_t>> roots;
      for (int i = 0; i <= n; ++i) {
        Int mult = delta_p(r, n - i);
        if (mult > 0)
          roots.emplace_back(Int(static_cast<long>(r)) * i,
                             static_cast<std::size_t>(*to_int64(mult)));
      }
      CHECK(char_poly(ud_power_matrix(r, n, 1)) == IntPoly::from_roots(roots));
    }
  }
}
