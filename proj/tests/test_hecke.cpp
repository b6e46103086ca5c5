#include <catch_amalgamated.hpp>

#include <random>
#include <thread>

#include "qschur/checks.hpp"
#include "qschur/hecke.hpp"

using namespace qschur;

namespace {

struct Exact {
  explicit Exact(int n, int r) : alg(ExactAlgebra::create(n, exact_params(r))), ctx(r) {}
  std::shared_ptr<const ExactAlgebra> alg;
  ScalarContext ctx;
  ExactScalar q(int e = 1) const { return ExactScalar::q_power(ctx, e); }
  ExactScalar Q(int k) const { return ExactScalar::Q_power(ctx, k); }
  ExactScalar k(long v) const { return ExactScalar::constant(ctx, v); }
  ExactElement T(std::vector<int> w) const { return alg->T(Permutation(std::move(w))); }
  ExactElement L(std::vector<int> c) const { return alg->L_power(c); }
};

}  // namespace

TEST_CASE("generator examples") {
  Exact h(2, 2);
  auto s1 = h.T({2, 1});
  CHECK(s1 * s1 == (h.q() - h.q(-1)) * s1 + h.alg->one());
  CHECK(h.alg->one() * h.alg->generator(0) == h.L({1, 0}));
  CHECK(h.L({1, 0}) * h.alg->generator(0) == (h.Q(1) + h.Q(2)) * h.L({1, 0}) - (h.Q(1) * h.Q(2)) * h.alg->one());
  CHECK(s1 * h.L({1, 0}) == h.q() * (h.L({0, 1}) * s1) - (h.q(2) - h.k(1)) * h.L({0, 1}));
  CHECK(h.alg->jucys_murphy(2) == h.L({0, 1}));
  CHECK(h.alg->jucys_murphy(2) == h.q(-1) * (s1 * h.alg->generator(0) * s1));
}

TEST_CASE("left and right generator actions agree with the product") {
  Exact h(3, 2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(h.alg->dim() - 1));
  for (int t = 0; t < 100; ++t) {
    auto b = h.alg->basis(pick(rng));
    for (int j = 0; j < 3; ++j) {
      REQUIRE(h.alg->mul_gen_left(j, b) == h.alg->generator(j) * b);
      REQUIRE(h.alg->mul_gen_right(b, j) == b * h.alg->generator(j));
    }
  }
}

TEST_CASE("defining relations annihilate every basis element") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {2, 3}, {2, 1}, {3, 1}}) {
    Exact h(n, r);
    for (const auto& rel : relation_operators(*h.alg)) {
      for (std::uint32_t b = 0; b < h.alg->dim(); ++b) {
        REQUIRE((rel * h.alg->basis(b)).is_zero());
        REQUIRE((h.alg->basis(b) * rel).is_zero());
      }
    }
  }
}

TEST_CASE("associativity on random basis triples") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    Exact h(n, r);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n * 10 + r));
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(h.alg->dim() - 1));
    for (int t = 0; t < 500; ++t) {
      auto a = h.alg->basis(pick(rng)), b = h.alg->basis(pick(rng)), c = h.alg->basis(pick(rng));
      REQUIRE((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("unit, braid instance and normal form") {
  Exact h(3, 2);
  auto s1 = h.T({2, 1, 3}), s2 = h.T({1, 3, 2});
  CHECK((s1 * s2) * s1 == s1 * (s2 * s1));
  CHECK(s1 * s2 * s1 == h.T({3, 2, 1}));
  for (std::uint32_t b = 0; b < h.alg->dim(); b += 7) {
    auto e = h.alg->basis(b);
    CHECK(e * h.alg->one() == e);
    CHECK(h.alg->one() * e == e);
    CHECK(h.alg->L_power(h.alg->exponents(b)) * h.alg->T(h.alg->perm(b)) == e);
  }
}

TEST_CASE("Jucys-Murphy elements commute") {
  Exact h(3, 2);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(h.alg->jucys_murphy(i) * h.alg->jucys_murphy(j) == h.alg->jucys_murphy(j) * h.alg->jucys_murphy(i));
}

TEST_CASE("distinguished elements") {
  Exact h(2, 2);
  auto& a = *h.alg;
  CHECK(u_plus(a, {0, 0, 2}) == a.one());
  CHECK(u_plus(a, {0, 1, 2}) == h.L({1, 0}) - a.scalar(h.Q(2)));
  CHECK(u_plus(a, {0, 2, 2}) == (h.L({1, 0}) - a.scalar(h.Q(2))) * (h.L({0, 1}) - a.scalar(h.Q(2))));
  CHECK(u_minus(a, {0, 1, 2}) == h.L({1, 0}) - a.scalar(h.Q(1)));
  CHECK_THROWS(u_plus(a, {0, 2, 1}));
  CHECK_THROWS(u_plus(a, {0, 1, 3}));
  CHECK(m_sum(a, {2}, MConvention::Plain) == a.one() + h.T({2, 1}));
  CHECK(m_sum(a, {2}, MConvention::QWeighted) == a.one() + h.q() * h.T({2, 1}));
  CHECK(m_sum(a, {1, 1}, MConvention::Plain) == a.one());
  Multicomposition lam({{2}, {0, 0}});
  for (auto m : {MConvention::Plain, MConvention::QWeighted}) {
    Conventions c{m, YConvention::Plain, LConvention::Literal};
    CHECK(x_elem(a, lam, c) == u_plus(a, {0, 2, 2}) * m_sum(a, {2, 0, 0}, m));
  }
}

TEST_CASE("x commutes between its factors under the symmetric normalization") {
  Exact h(3, 2);
  auto& a = *h.alg;
  for (const auto& lam : enumerate_multicompositions(MultiShape{{3, 3}, 3}))
    for (auto m : {MConvention::Plain, MConvention::QWeighted}) {
      const auto u = u_plus(a, lam.bracket(), LConvention::Symmetric);
      REQUIRE(u * m_sum(a, lam.bar(), m) == m_sum(a, lam.bar(), m) * u);
    }
}

TEST_CASE("literal Jucys-Murphy sums are not central") {
  // with L_2 = q^-1 T_1 L_1 T_1 and (T_1 - q)(T_1 + q^-1) = 0, L_1 + L_2 does not commute with T_1
  Exact h(2, 2);
  auto& a = *h.alg;
  const auto u = u_plus(a, {0, 2, 2});
  CHECK(u * m_sum(a, {2, 0, 0}, MConvention::Plain) != m_sum(a, {2, 0, 0}, MConvention::Plain) * u);
  const auto e1 = a.jucys_murphy(1) + a.jucys_murphy(2);
  CHECK(e1 * a.generator(1) != a.generator(1) * e1);
  const auto e1s = a.jucys_murphy(1) + h.q() * a.jucys_murphy(2);
  CHECK(e1s * a.generator(1) == a.generator(1) * e1s);
}

TEST_CASE("convention flags parse and print") {
  for (const auto& c : all_conventions()) CHECK(parse_conventions(c.str()) == c);
  CHECK(all_conventions().front() == Conventions{});
  CHECK(parse_conventions("m_convention=q_weighted").m == MConvention::QWeighted);
  CHECK_THROWS(parse_conventions("m_convention=bogus"));
  CHECK_THROWS(parse_conventions("color=red"));
}

TEST_CASE("double coset sums") {
  Exact h(3, 1);
  auto& a = *h.alg;
  CHECK(double_coset_sum(a, {3}, Permutation::identity(3), {3}, MConvention::Plain) == m_sum(a, {3}, MConvention::Plain));
  const Permutation w({3, 1, 2});
  CHECK(double_coset_sum(a, {1, 1, 1}, w, {1, 1, 1}, MConvention::Plain) == a.T(w));
  auto dc = double_coset_sum(a, {2, 1}, Permutation::identity(3), {1, 2}, MConvention::Plain);
  auto brute = double_coset_of(CompositionBlocks({2, 1}), Permutation::identity(3), CompositionBlocks({1, 2}));
  ExactElement expected = a.zero();
  for (const auto& e : brute.elements) expected += a.T(e);
  CHECK(dc == expected);
  CHECK(dc.size() == 4);
  // a non-minimal representative is normalized
  CHECK(double_coset_sum(a, {2, 1}, Permutation::simple(3, 1), {1, 2}, MConvention::Plain) == dc);
}

TEST_CASE("regular closure dimension") {
  for (auto [n, r, d] : std::vector<std::tuple<int, int, std::size_t>>{{2, 2, 8}, {3, 2, 48}, {2, 3, 18}}) {
    auto alg = SpecAlgebra::create(n, specialized_params(random_specialization(r, 1)));
    CHECK(regular_closure_dim(*alg) == d);
  }
}

TEST_CASE("specialization commutes with multiplication") {
  Exact h(2, 2);
  auto s = random_specialization(2, 3);
  auto spec = SpecAlgebra::create(2, specialized_params(s));
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(h.alg->dim() - 1));
  for (int t = 0; t < 100; ++t) {
    auto a = h.alg->basis(pick(rng)) + h.alg->basis(pick(rng)), b = h.alg->basis(pick(rng));
    REQUIRE(specialize(a * b, spec) == specialize(a, spec) * specialize(b, spec));
  }
  auto e = specialize(h.alg->generator(1), spec);
  CHECK(from_vector(spec, to_vector(e)) == e);
}

TEST_CASE("elements of different algebras do not mix") {
  auto a = ExactAlgebra::create(2, exact_params(2));
  auto b = ExactAlgebra::create(2, exact_params(2));
  CHECK_THROWS_AS(a->one() * b->one(), ContextMismatch);
  CHECK_THROWS_AS(a->one() + b->one(), ContextMismatch);
  CHECK_THROWS(a->generator(2));
  CHECK_THROWS(a->jucys_murphy(0));
}

TEST_CASE("concurrent products on a shared algebra") {
  auto alg = ExactAlgebra::create(3, exact_params(2));
  auto reference = ExactAlgebra::create(3, exact_params(2));
  std::vector<std::thread> pool;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] {
      std::mt19937_64 rng(static_cast<std::uint64_t>(t));
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(alg->dim() - 1));
      for (int i = 0; i < 200; ++i) {
        const auto x = pick(rng), y = pick(rng);
        (void)alg->basis_product(x, y);
        (void)(alg->basis(x) * alg->basis(y));
      }
    });
  for (auto& th : pool) th.join();
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(alg->dim() - 1));
  for (int i = 0; i < 200; ++i) {
    const auto x = pick(rng), y = pick(rng);
    const auto& p = alg->basis_product(x, y);
    const auto& q = reference->basis_product(x, y);
    if (p.size() != q.size()) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("bracket enumeration") {
  CHECK(enumerate_brackets(2, 2) == std::vector<std::vector<int>>{{0, 0, 2}, {0, 1, 2}, {0, 2, 2}});
  CHECK(enumerate_brackets(3, 3).size() == 10);
  CHECK(enumerate_brackets(2, 1) == std::vector<std::vector<int>>{{0, 2}});
}

TEST_CASE("u+ H u- vanishes off the bracket order under the symmetric normalization") {
  for (int n = 1; n <= 3; ++n) {
    auto alg = ExactAlgebra::create(n, exact_params(2));
    const auto rep = bracket_vanishing(*alg, LConvention::Symmetric);
    CHECK(rep.pairs == static_cast<std::size_t>((n + 1) * (n + 1)));
    CHECK(rep.zero_pairs == static_cast<std::size_t>(n * (n + 1) / 2));
    CHECK(rep.ok());
  }
}

TEST_CASE("literal normalization breaks the bracket vanishing") {
  auto alg = ExactAlgebra::create(2, exact_params(2));
  CHECK(bracket_vanishing(*alg, LConvention::Literal).violations > 0);
}

TEST_CASE("v_a T_w are independent and the Hecke part spans") {
  for (auto l : {LConvention::Literal, LConvention::Symmetric})
    for (int n = 1; n <= 3; ++n) {
      auto alg = SpecAlgebra::create(n, specialized_params(random_specialization(2, 5)));
      const auto rep = bracket_freeness(*alg, l);
      CHECK(rep.brackets == static_cast<std::size_t>(n + 1));
      CHECK(rep.full_rank == rep.brackets);
      if (l == LConvention::Symmetric) CHECK(rep.hecke_spans == rep.brackets);
    }
}

TEST_CASE("literal normalization needs more than the Hecke part to span") {
  auto alg = SpecAlgebra::create(2, specialized_params(random_specialization(2, 5)));
  CHECK(bracket_freeness(*alg, LConvention::Literal).hecke_spans < 3);
}

TEST_CASE("relation and associativity reports") {
  auto alg = ExactAlgebra::create(2, exact_params(2));
  const auto rel = check_relations(*alg);
  CHECK(rel.relations == 3);
  CHECK(rel.checks == 3 * 8 * 2);
  CHECK(rel.ok());
  CHECK(check_associativity(*alg, 50, 1).ok());
}
