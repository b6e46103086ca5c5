#include <catch_amalgamated.hpp>

#include <random>

#include "qschur/io.hpp"

using namespace qschur;

namespace {

ExactScalar random_scalar(std::mt19937_64& rng, ScalarContext ctx) {
  std::uniform_int_distribution<int> nterms(0, 3), coef(-7, 7), qe(-3, 3), Qe(0, 2);
  std::vector<ExactScalar::Term> terms;
  for (int t = nterms(rng); t > 0; --t) {
    Monomial m;
    m.e[0] = static_cast<std::int16_t>(qe(rng));
    for (int k = 1; k <= ctx.r(); ++k) m.e[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(Qe(rng));
    terms.emplace_back(m, Integer(coef(rng)));
  }
  return ExactScalar::from_terms(ctx, terms);
}

ExactElement random_element(std::mt19937_64& rng, const std::shared_ptr<const ExactAlgebra>& alg) {
  std::uniform_int_distribution<std::uint32_t> idx(0, static_cast<std::uint32_t>(alg->dim() - 1));
  std::uniform_int_distribution<int> nterms(0, 4);
  ExactElement e = alg->zero();
  for (int t = nterms(rng); t > 0; --t) e += random_scalar(rng, ScalarContext(alg->r())) * alg->basis(idx(rng));
  return e;
}

}  // namespace

TEST_CASE("scalar text form") {
  ScalarContext ctx(2);
  const auto s = ExactScalar::q_power(ctx, -1) - ExactScalar::q_power(ctx, 1) +
                 ExactScalar::Q_power(ctx, 1) * ExactScalar::Q_power(ctx, 2) * Integer(2);
  CHECK(to_text(s) == "1*q^-1 - 1*q^1 + 2*Q1^1*Q2^1");
  CHECK(to_text(ExactScalar::zero(ctx)) == "0");
  CHECK(to_text(ExactScalar::constant(ctx, -3)) == "-3");
  CHECK(parse_scalar("1*q^-1 - 1*q^1 + 2*Q1^1*Q2^1", ctx) == s);
  CHECK(parse_scalar("0", ctx).is_zero());
}

TEST_CASE("scalar JSON form") {
  ScalarContext ctx(2);
  const auto s = ExactScalar::q_power(ctx, 2, 5) * ExactScalar::Q_power(ctx, 2);
  const Json j = to_json(s);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["c"] == "5");
  CHECK(j["terms"][0]["q"] == 2);
  CHECK(j["terms"][0]["Q"] == Json::array({0, 1}));
  CHECK(scalar_from_json(j, ctx) == s);
}

TEST_CASE("malformed scalars are rejected") {
  ScalarContext ctx(2);
  CHECK_THROWS_AS(parse_scalar("1*Q3^1", ctx), ParseError);
  CHECK_THROWS_AS(parse_scalar("1*q^", ctx), ParseError);
  CHECK_THROWS_AS(parse_scalar("abc", ctx), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"terms":[{"c":"x","q":0,"Q":[0,0]}]})"), ctx), ParseError);
}

TEST_CASE("element text form") {
  auto alg = ExactAlgebra::create(2, exact_params(1));
  const auto e = alg->one() + alg->generator(1);
  CHECK(to_text(e) == "1 + 1*T[2,1]");
  CHECK(to_text(alg->zero()) == "0");
  auto alg2 = ExactAlgebra::create(2, exact_params(2));
  CHECK(to_text(alg2->jucys_murphy(2)) == "1*L2^1");
  CHECK(parse_element("1 + 1*T[2,1]", alg) == e);
}

TEST_CASE("malformed elements are rejected") {
  auto alg = ExactAlgebra::create(2, exact_params(2));
  CHECK_THROWS_AS(parse_element("1*T[1,1]", alg), ParseError);
  CHECK_THROWS_AS(parse_element("1*L3^1", alg), ParseError);
  CHECK_THROWS_AS(parse_element("1*T[2,1", alg), ParseError);
}

TEST_CASE("1000 random elements round-trip through text and JSON") {
  std::mt19937_64 rng(2024);
  auto alg = ExactAlgebra::create(2, exact_params(2));
  for (int i = 0; i < 1000; ++i) {
    const auto e = random_element(rng, alg);
    REQUIRE(parse_element(to_text(e), alg) == e);
    REQUIRE(element_from_json(Json::parse(to_json(e).dump()), alg) == e);
  }
}

TEST_CASE("combinatorial JSON") {
  const std::vector<int> m{2, 2};
  const auto mu = parse_multicomposition("[[2],[1]]", &m);
  CHECK(mu == Multicomposition({{2, 0}, {1, 0}}));
  CHECK(multicomposition_from_json(to_json(mu), &m) == mu);
  CHECK(parse_int_list("[3, 1, 2]") == std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(parse_multicomposition("[[2],[x]]"), ParseError);
  CHECK_THROWS_AS(parse_int_list("3,1"), ParseError);
  const Permutation w({3, 1, 2});
  CHECK(permutation_from_json(to_json(w)) == w);
  for (const auto& t : enumerate_ssyt(Multipartition({{2}, {1}}), m)) CHECK(tableau_from_json(to_json(t)) == t);
  const Node x{2, 1, 3};
  CHECK(node_from_json(to_json(x)) == x);
}
