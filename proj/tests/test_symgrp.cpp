#include <catch_amalgamated.hpp>

#include <set>

#include "qschur/symgrp.hpp"
#include "qschur/tableaux.hpp"

using namespace qschur;

TEST_CASE("lengths") {
  CHECK(Permutation::identity(4).length() == 0);
  CHECK(Permutation::simple(2, 1).length() == 1);
  CHECK(Permutation({3, 2, 1}).length() == 3);
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      REQUIRE(static_cast<int>(w.reduced_word().size()) == w.length());
      REQUIRE(Permutation::from_word(n, w.reduced_word()) == w);
      for (int i = 1; i < n; ++i) {
        const int d = (w * Permutation::simple(n, i)).length() - w.length();
        REQUIRE((d == 1 || d == -1));
        REQUIRE(w.right_descent(i) == (d == -1));
        REQUIRE(w.left_descent(i) == ((Permutation::simple(n, i) * w).length() < w.length()));
      }
    }
}

TEST_CASE("composition follows the right action") {
  Permutation u({2, 3, 1}), v({1, 3, 2});
  for (int p = 1; p <= 3; ++p) CHECK((u * v)(p) == v(u(p)));
  CHECK(u * u.inverse() == Permutation::identity(3));
  CHECK(Permutation({2, 3, 1}).inverse() == Permutation({3, 1, 2}));
  // s1 s2 under (u v)(p) = v(u(p)): 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
  CHECK(Permutation::simple(3, 1) * Permutation::simple(3, 2) == Permutation({3, 1, 2}));
  CHECK_THROWS_AS(Permutation::identity(2) * Permutation::identity(3), std::invalid_argument);
  CHECK_THROWS(Permutation({1, 1}));
}

TEST_CASE("ranks round trip") {
  for (int n = 1; n <= 5; ++n) {
    auto all = all_permutations(n);
    for (std::size_t k = 0; k < all.size(); ++k) {
      REQUIRE(perm_rank(all[k]) == k);
      REQUIRE(perm_unrank(n, k) == all[k]);
    }
  }
}

TEST_CASE("young subgroups") {
  CHECK(young_subgroup(CompositionBlocks({3})).size() == 6);
  CHECK(young_subgroup(CompositionBlocks({1, 1, 1})).size() == 1);
  auto s21 = young_subgroup(CompositionBlocks({2, 1}));
  CHECK(s21 == std::vector<Permutation>{Permutation::identity(3), Permutation::simple(3, 1)});
  CHECK(young_subgroup(CompositionBlocks({2, 0, 2})).size() == 4);
}

TEST_CASE("minimal coset representatives") {
  CHECK(coset_reps_min(CompositionBlocks({3})) == std::vector<Permutation>{Permutation::identity(3)});
  CHECK(coset_reps_min(CompositionBlocks({1, 1})).size() == 2);
  auto d = coset_reps_min(CompositionBlocks({2, 1}));
  std::set<Permutation> expected{Permutation::identity(3), Permutation::simple(3, 2),
                                 Permutation::simple(3, 2) * Permutation::simple(3, 1)};
  CHECK(std::set<Permutation>(d.begin(), d.end()) == expected);
}

TEST_CASE("coset factorization is unique and length additive") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& parts : std::vector<std::vector<int>>{{n}, {1, n - 1}, {n - 1, 1}, {2, n - 2}}) {
      if (parts.back() < 0 || parts.front() < 0) continue;
      CompositionBlocks b(parts);
      auto sub = young_subgroup(b);
      auto reps = coset_reps_min(b);
      for (const auto& w : all_permutations(n)) {
        int count = 0;
        for (const auto& u : sub)
          for (const auto& d : reps)
            if (u * d == w) {
              ++count;
              REQUIRE(u.length() + d.length() == w.length());
            }
        REQUIRE(count == 1);
      }
    }
}

TEST_CASE("double cosets partition the group") {
  CompositionBlocks all({3});
  auto one = double_cosets(all, all);
  REQUIRE(one.size() == 1);
  CHECK(one[0].rep.is_identity());
  CHECK(double_cosets(CompositionBlocks({1, 1, 1}), CompositionBlocks({1, 1, 1})).size() == 6);
  for (int n = 2; n <= 5; ++n) {
    CompositionBlocks a({2, n - 2}), b({1, n - 1});
    std::set<Permutation> seen;
    std::size_t total = 0;
    for (const auto& dc : double_cosets(a, b)) {
      total += dc.elements.size();
      seen.insert(dc.elements.begin(), dc.elements.end());
      for (const auto& w : dc.elements) REQUIRE(dc.rep.length() <= w.length());
      int minimal = 0;
      for (const auto& w : dc.elements) minimal += w.length() == dc.rep.length();
      REQUIRE(minimal == 1);
    }
    CHECK(total == factorial(n));
    CHECK(seen.size() == factorial(n));
  }
  auto dcs = double_cosets(CompositionBlocks({2, 1}), CompositionBlocks({1, 2}));
  std::size_t total = 0;
  for (const auto& dc : dcs) total += dc.elements.size();
  CHECK(total == 6);
}

TEST_CASE("trivial intersection for partitions up to 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : enumerate_multipartitions(MultiShape{{n}, n})) {
      const Composition p = lam.comp[0];
      const Permutation w = w_lambda(lam);
      CompositionBlocks conj(conjugate(lam.trimmed().comp[0]));
      for (const auto& u : young_subgroup(CompositionBlocks(p))) {
        const Permutation c = w.inverse() * u * w;
        if (conj.contains(c)) REQUIRE(c.is_identity());
      }
    }
}
