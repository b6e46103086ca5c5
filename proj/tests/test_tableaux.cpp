#include <catch_amalgamated.hpp>

#include <set>

#include "qschur/ring.hpp"
#include "qschur/tableaux.hpp"

using namespace qschur;

namespace {

Multicomposition mc(std::vector<Composition> c) { return Multicomposition(std::move(c)); }

// shapes with n boxes and r components, bounded by n rows each
std::vector<Multipartition> all_shapes(int n, int r) {
  return enumerate_multipartitions(MultiShape{std::vector<int>(static_cast<std::size_t>(r), std::max(n, 1)), n});
}

}  // namespace

TEST_CASE("multicomposition enumeration") {
  CHECK(enumerate_multicompositions(MultiShape{{2, 2}, 2}).size() == 10);
  CHECK(enumerate_multicompositions(MultiShape{{2, 2}, 0}).size() == 1);
  auto parts = enumerate_multipartitions(MultiShape{{2}, 2});
  CHECK(parts == std::vector<Multipartition>{mc({{1, 1}}), mc({{2, 0}})});
  for (int n = 0; n <= 4; ++n)
    for (const auto& m : std::vector<std::vector<int>>{{1}, {2, 1}, {1, 2, 2}, {3, 3}}) {
      MultiShape s{m, n};
      auto all = enumerate_multicompositions(s);
      CHECK(all.size() == multicomposition_count(s));
      CHECK(std::set<Multicomposition>(all.begin(), all.end()).size() == all.size());
      CHECK(std::is_sorted(all.begin(), all.end()));
    }
}

TEST_CASE("duals") {
  CHECK(conjugate({3, 2}) == Composition{2, 2, 1});
  CHECK(dual(mc({{3, 1}, {2, 1}, {2}})).trimmed() == mc({{1, 1}, {2, 1}, {2, 1, 1}}));
  CHECK(dual(mc({{1, 1, 1}})).trimmed() == mc({{3}}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : all_shapes(n, 2)) CHECK(dual(dual(lam)).trimmed() == lam.trimmed());
}

TEST_CASE("bar and bracket") {
  auto lam = mc({{3, 1}, {2, 1}, {2}});
  CHECK(lam.bar() == Composition{3, 1, 2, 1, 2});
  CHECK(lam.bracket() == std::vector<int>{0, 4, 7, 9});
  CHECK(mc({{0}, {0}, {1, 1}}).bracket() == std::vector<int>{0, 0, 0, 2});
  CHECK(mc({{}, {}}).bar().empty());
  CHECK(mc({{}, {}}).bracket() == std::vector<int>{0, 0, 0});
}

TEST_CASE("dominance orders") {
  CHECK(composition_dominated({1, 1}, {2, 0}));
  CHECK_FALSE(composition_dominated({2, 0}, {1, 1}));
  auto lam = mc({{2, 1}, {1, 0}});
  CHECK(multipartition_dominates(lam, lam));
  CHECK(multipartition_dominates(mc({{2, 0}, {0, 0}}), mc({{1, 0}, {1, 0}})));
  CHECK_THROWS_AS(multipartition_dominates(mc({{1}}), mc({{1, 0}})), ArityError);
  CHECK(bracket_leq({0, 1, 2}, {0, 2, 2}));
  CHECK_FALSE(bracket_leq({0, 2, 2}, {0, 1, 2}));
}

TEST_CASE("dominance implies bracket order") {
  for (int n = 1; n <= 4; ++n) {
    auto shapes = enumerate_multipartitions(MultiShape{{n, n}, n});
    for (const auto& a : shapes)
      for (const auto& b : shapes)
        if (multipartition_dominates(a, b)) REQUIRE(bracket_leq(b.bracket(), a.bracket()));
  }
}

using Filling = std::vector<std::vector<std::vector<int>>>;

TEST_CASE("canonical tableaux of the worked examples") {
  auto lam = mc({{3, 1}, {2, 1}, {2}});
  CHECK(tableau_sup(lam).entries == Filling{{{1, 2, 3}, {4}}, {{5, 6}, {7}}, {{8, 9}}});
  CHECK(tableau_sub(lam).entries == Filling{{{6, 8, 9}, {7}}, {{3, 5}, {4}}, {{1, 2}}});
  auto p = mc({{3, 2}});
  CHECK(tableau_sup(p).entries == Filling{{{1, 2, 3}, {4, 5}}});
  CHECK(tableau_sub(p).entries == Filling{{{1, 3, 5}, {2, 4}}});
  CHECK(tableau_sup(mc({{4}})) == tableau_sub(mc({{4}})));
}

TEST_CASE("w_lambda") {
  CHECK(w_lambda(mc({{3, 2}})) == Permutation({1, 3, 5, 2, 4}));
  CHECK(w_lambda(mc({{3}})).is_identity());
  CHECK(w_lambda(mc({{1, 1, 1}})).is_identity());
  CHECK(w_lambda(mc({{3, 1}, {2, 1}, {2}})) == Permutation({6, 8, 9, 7, 3, 5, 4, 1, 2}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : all_shapes(n, 2)) REQUIRE(tableau_sup(lam).act(w_lambda(lam)) == tableau_sub(lam));
}

TEST_CASE("w_lambda factors through the block reversal") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : all_shapes(n, 3)) {
      Permutation prod = Permutation::identity(n);
      for (const auto& f : w_lambda_factors(lam)) prod = prod * f;
      REQUIRE(prod * w_bracket(lam.bracket()) == w_lambda(lam));
    }
}

TEST_CASE("chi matrices") {
  auto t = tableau_sup(mc({{2, 1}}));
  CHECK(chi(t, t) == ChiMatrix{{1, 2, 2}, {2, 3, 3}, {2, 3, 3}});
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : all_shapes(n, 1)) {
      auto c = chi(tableau_sup(lam), tableau_sub(lam));
      CHECK(c.back().back() == n);
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) {
          if (i + 1 < c.size()) CHECK(c[i][j] <= c[i + 1][j]);
          if (j + 1 < c.size()) CHECK(c[i][j] <= c[i][j + 1]);
        }
    }
}

TEST_CASE("chi identities for all tableau pairs up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto rep = chi_identities(n);
    CHECK(rep.checks > rep.pairs);
    CHECK(rep.ok());
  }
  // the Young subgroup forms for the canonical tableaux
  const auto lam = mc({{3, 1}}), mu = mc({{2, 2}});
  const auto t1 = tableau_sup(lam), t2 = tableau_sub(mu);
  for (const auto& w : young_subgroup(CompositionBlocks({3, 1}))) CHECK(chi(t1.act(w), t2) == chi(t1, t2));
  for (const auto& w : young_subgroup(CompositionBlocks(conjugate({2, 2})))) CHECK(chi(t1, t2.act(w)) == chi(t1, t2));
}

TEST_CASE("w_S worked example") {
  // S of shape (3,2) with rows [1,2,3],[1,2]; t^(3,2) w = [[1,2,4],[3,5]]
  const Permutation w({1, 2, 4, 3, 5});
  REQUIRE(tableau_sup(mc({{3, 2}})).act(w).entries == Filling{{{1, 2, 4}, {3, 5}}});
  const Permutation ws = w_S(w, {3, 2}, {{1, 2, 3}, {1, 2}}, {2, 2, 1});
  CHECK(tableau_sup(mc({{2, 2, 1}})).act(ws).entries == Filling{{{1, 3}, {2, 5}, {4}}});
}

TEST_CASE("w_S lands in the distinguished representatives") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : all_shapes(n, 2)) {
      const auto m = lam.bounds();
      for (const auto& a : enumerate_ssyt(lam, m)) {
        const Permutation d = one_A(a, m);
        REQUIRE(is_min_coset_rep(CompositionBlocks(a.type(m).bar()), d));
        const FlatTableau f = bar_tableau(a, m);
        for (const auto& row : f.rows) REQUIRE(std::is_sorted(row.begin(), row.end()));
      }
      REQUIRE(one_A(superstandard(lam), m).is_identity());
    }
}

TEST_CASE("flattened symbols") {
  CHECK(flatten_symbol({1, 2}, {2, 2}) == 3);
  CHECK(flatten_symbol({2, 2}, {2, 2}) == 4);
  CHECK(flatten_symbol({3, 1}, {4}) == 3);
}

TEST_CASE("semistandard enumeration") {
  CHECK(enumerate_ssyt(mc({{2}}), {2}).size() == 3);
  CHECK(enumerate_ssyt(mc({{1, 1}}), {2}).size() == 1);
  CHECK(enumerate_ssyt(mc({{1}, {1}}), {2, 2}).size() == 8);
  CHECK_THROWS(enumerate_ssyt(mc({{1, 2}}), {2}));
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : all_shapes(n, 2)) {
      const auto m = lam.bounds();
      std::size_t by_type = 0;
      for (const auto& mu : enumerate_multicompositions(MultiShape{m, n})) {
        for (const auto& t : enumerate_ssyt(lam, m, mu)) {
          REQUIRE(t.is_semistandard(m));
          REQUIRE(t.type(m) == mu);
          ++by_type;
        }
      }
      REQUIRE(by_type == enumerate_ssyt(lam, m).size());
    }
}

TEST_CASE("removable and addable nodes") {
  auto lam = mc({{3, 1}, {2, 2}, {1}});
  auto rem = removable_nodes(lam);
  CHECK(rem == std::vector<Node>{{1, 1, 3}, {2, 2, 2}, {2, 1, 1}, {1, 3, 1}});
  for (std::size_t i = 1; i < rem.size(); ++i) CHECK(node_succ(rem[i], rem[i - 1]));
  CHECK(removable_nodes(mc({{4}})) == std::vector<Node>{{1, 4, 1}});
  CHECK(removable_nodes(mc({{1, 1, 1}})) == std::vector<Node>{{3, 1, 1}});
  CHECK(addable_nodes(mc({{2, 0}})) == std::vector<Node>{{2, 1, 1}, {1, 3, 1}});
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : all_shapes(n, 2))
      for (const auto& x : removable_nodes(l)) REQUIRE(remove_node(l, x).is_multipartition());
}

TEST_CASE("branching tableaux") {
  auto lam = mc({{1}, {1}});
  auto t2 = t_lambda_x(lam, {1, 1, 2}, {2, 2});
  CHECK(t2.at({1, 1, 1}) == Symbol{1, 1});
  CHECK(t2.at({1, 1, 2}) == Symbol{2, 2});
  auto t1 = t_lambda_x(lam, {1, 1, 1}, {2, 2});
  CHECK(t1.at({1, 1, 1}) == Symbol{2, 2});
  CHECK(t1.at({1, 1, 2}) == Symbol{1, 2});
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : all_shapes(n, 2)) {
      std::vector<int> m(2, n + 1);
      const auto lm = l.with_bounds(m);
      for (const auto& x : removable_nodes(lm)) {
        const auto t = t_lambda_x(lm, x, m);
        REQUIRE(t.is_semistandard(m));
        const auto stripped = strip_last_symbol(t, m);
        REQUIRE(stripped);
        REQUIRE(stripped->first == x);
        REQUIRE(stripped->second == superstandard(remove_node(lm, x).with_bounds(shorten_last(m))));
      }
    }
}

TEST_CASE("gamma") {
  CHECK(gamma(mc({{1}, {0}}), {1, 2}) == mc({{1}, {0, 1}}));
  const std::vector<int> m{2, 3};
  std::set<Multicomposition> images;
  for (const auto& l : enumerate_multicompositions(MultiShape{shorten_last(m), 2})) {
    const auto g = gamma(l, m);
    REQUIRE(in_gamma_image(g, m));
    REQUIRE(gamma_inverse(g, m) == l);
    images.insert(g);
  }
  CHECK(images.size() == multicomposition_count(MultiShape{shorten_last(m), 2}));
  CHECK_THROWS(gamma(mc({{1}, {0, 0}}), m));
}

TEST_CASE("branching bijection on tableaux") {
  for (int n1 = 2; n1 <= 4; ++n1)
    for (int r = 1; r <= 2; ++r) {
      std::vector<int> m(static_cast<std::size_t>(r), n1);
      const auto mp = shorten_last(m);
      for (const auto& lam : enumerate_multipartitions(MultiShape{m, n1})) {
        std::set<std::pair<Node, TypedTableau>> image;
        std::size_t count = 0;
        for (const auto& a : enumerate_ssyt(lam, m)) {
          if (!in_gamma_image(a.type(m), m)) continue;
          auto s = strip_last_symbol(a, m);
          REQUIRE(s);
          REQUIRE(s->second.is_semistandard(mp));
          REQUIRE(s->second.shape == remove_node(lam, s->first).with_bounds(mp));
          image.insert(*s);
          ++count;
        }
        REQUIRE(image.size() == count);
        std::size_t target = 0;
        for (const auto& x : removable_nodes(lam))
          target += enumerate_ssyt(remove_node(lam, x).with_bounds(mp), mp).size();
        REQUIRE(count == target);
      }
    }
}
