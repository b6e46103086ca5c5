#include <catch_amalgamated.hpp>

#include <random>

#include "qschur/ring.hpp"

using namespace qschur;

namespace {

ExactScalar random_scalar(std::mt19937_64& rng, ScalarContext ctx) {
  std::uniform_int_distribution<int> nterms(0, 4), coef(-5, 5), qe(-3, 3), Qe(0, 2);
  std::vector<ExactScalar::Term> terms;
  for (int t = nterms(rng); t > 0; --t) {
    Monomial m;
    m.e[0] = static_cast<std::int16_t>(qe(rng));
    for (int k = 1; k <= ctx.r(); ++k) m.e[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(Qe(rng));
    terms.emplace_back(m, Integer(coef(rng)));
  }
  return ExactScalar::from_terms(ctx, terms);
}

}  // namespace

TEST_CASE("unit and inverse relations") {
  ScalarContext ctx(2);
  auto q = ExactScalar::q_power(ctx, 1), qi = ExactScalar::q_power(ctx, -1);
  CHECK((q * qi).is_one());
  CHECK(((q - qi) + (qi - q)).is_zero());
  auto Q1 = ExactScalar::Q_power(ctx, 1), Q2 = ExactScalar::Q_power(ctx, 2);
  CHECK((Q1 + Q2) * (Q1 - Q2) == ExactScalar::Q_power(ctx, 1, 2) - ExactScalar::Q_power(ctx, 2, 2));
}

TEST_CASE("context mismatch is rejected") {
  auto a = ExactScalar::one(ScalarContext(1));
  auto b = ExactScalar::one(ScalarContext(2));
  CHECK_THROWS_AS(a + b, ContextMismatch);
  CHECK_THROWS_AS(a * b, ContextMismatch);
  CHECK_THROWS_AS(void(a == b), ContextMismatch);
  CHECK_THROWS(ScalarContext(0));
}

TEST_CASE("specialization examples") {
  ScalarContext ctx(2);
  Specialization s{Rational(2), {Rational(3), Rational(5)}};
  CHECK(specialize(ExactScalar::q_power(ctx, -1), s) == Rational(1, 2));
  CHECK(specialize(ExactScalar::Q_power(ctx, 1) * ExactScalar::Q_power(ctx, 2), s) == 15);
  Specialization one{Rational(1), {Rational(3), Rational(5)}};
  CHECK(specialize(ExactScalar::q_power(ctx, 1) - ExactScalar::q_power(ctx, -1), one) == 0);
  CHECK_THROWS_AS(specialize(ExactScalar::one(ctx), Specialization{Rational(2), {Rational(1)}}), ArityError);
  CHECK_THROWS_AS(specialize(ExactScalar::one(ctx), Specialization{Rational(0), {Rational(1), Rational(2)}}),
                  std::domain_error);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  ScalarContext ctx(3);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_scalar(rng, ctx), b = random_scalar(rng, ctx), c = random_scalar(rng, ctx);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * b == b * a);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("specialization is a homomorphism") {
  std::mt19937_64 rng(11);
  ScalarContext ctx(2);
  for (int i = 0; i < 300; ++i) {
    auto a = random_scalar(rng, ctx), b = random_scalar(rng, ctx), c = random_scalar(rng, ctx);
    auto s = random_specialization(2, static_cast<std::uint64_t>(i));
    REQUIRE(specialize(a * b + c, s) == specialize(a, s) * specialize(b, s) + specialize(c, s));
    Specializer ev(s, 2);
    REQUIRE(ev(a * b + c) == specialize(a * b + c, s));
  }
}

TEST_CASE("canonical form drops zero terms and sorts") {
  ScalarContext ctx(1);
  Monomial m1, m2;
  m1.e[0] = 2;
  m2.e[0] = -1;
  auto s = ExactScalar::from_terms(ctx, {{m1, Integer(3)}, {m2, Integer(1)}, {m1, Integer(-3)}});
  REQUIRE(s.size() == 1);
  CHECK(s.terms()[0].first.q() == -1);
  CHECK(ExactScalar::from_terms(ctx, {{m1, Integer(0)}}).is_zero());
}

TEST_CASE("random specializations are generic and reproducible") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto s = random_specialization(3, seed);
    CHECK(s == random_specialization(3, seed));
    CHECK(s.q != 0);
    CHECK(s.q * s.q != 1);
    std::vector<Rational> all{s.q};
    all.insert(all.end(), s.Q.begin(), s.Q.end());
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
  }
}
