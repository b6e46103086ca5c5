// Structural checks on H_{n,r}: defining relations, associativity, and the
// bracket identities for u⁺_a H u⁻_b'.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qschur/hecke.hpp"

namespace qschur {

/// Left-hand sides of the defining relations: (T_0 - Q_1)...(T_0 - Q_r),
/// (T_i - q)(T_i + q^-1), T_0T_1T_0T_1 - T_1T_0T_1T_0, braids, far commutations.
template <class S>
std::vector<AKElement<S>> relation_operators(const AKAlgebra<S>& a) {
  const int n = a.n();
  std::vector<AKElement<S>> rels;
  auto g = [&](int j) { return a.generator(j); };
  auto cyc = a.one();
  for (int k = 1; k <= a.r(); ++k) cyc = cyc * (g(0) - a.scalar(a.params().Q(k)));
  rels.push_back(cyc);
  for (int i = 1; i < n; ++i) rels.push_back((g(i) - a.scalar(a.params().q())) * (g(i) + a.scalar(a.params().qinv())));
  if (n >= 2) rels.push_back(g(0) * g(1) * g(0) * g(1) - g(1) * g(0) * g(1) * g(0));
  for (int i = 1; i + 1 < n; ++i) rels.push_back(g(i) * g(i + 1) * g(i) - g(i + 1) * g(i) * g(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) rels.push_back(g(i) * g(j) - g(j) * g(i));
  return rels;
}

struct RelationReport {
  std::size_t relations = 0, checks = 0, failures = 0;
  bool ok() const { return failures == 0; }
};

/// Every relation operator times every basis element, on both sides.
template <class S>
RelationReport check_relations(const AKAlgebra<S>& a) {
  RelationReport rep;
  const auto rels = relation_operators(a);
  rep.relations = rels.size();
  for (const auto& rel : rels)
    for (std::uint32_t b = 0; b < a.dim(); ++b) {
      const auto e = a.basis(b);
      rep.checks += 2;
      if (!(rel * e).is_zero()) ++rep.failures;
      if (!(e * rel).is_zero()) ++rep.failures;
    }
  return rep;
}

/// (ab)c = a(bc) on random basis triples.
template <class S>
RelationReport check_associativity(const AKAlgebra<S>& a, int samples, std::uint64_t seed) {
  RelationReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(a.dim() - 1));
  for (int t = 0; t < samples; ++t) {
    const auto x = a.basis(pick(rng)), y = a.basis(pick(rng)), z = a.basis(pick(rng));
    ++rep.checks;
    if ((x * y) * z != x * (y * z)) ++rep.failures;
  }
  return rep;
}

/// Brackets [0, a_1, ..., a_{r-1}, n] with nondecreasing entries.
std::vector<std::vector<int>> enumerate_brackets(int n, int r);

struct VanishingReport {
  std::size_t pairs = 0;       // bracket pairs checked
  std::size_t zero_pairs = 0;  // pairs with a ⋠ b, all required to vanish
  std::size_t violations = 0;
  bool ok() const { return violations == 0; }
};

/// u⁺_a h u⁻_{b'} = 0 for every basis h whenever a ⋠ b.
VanishingReport bracket_vanishing(const ExactAlgebra& alg, LConvention l);

struct FreenessReport {
  std::size_t brackets = 0, full_rank = 0, expected_rank = 0;
  std::size_t hecke_spans = 0;  // brackets where the Hecke part already spans u⁺_a H u⁻_a'
  bool ok() const { return full_rank == brackets && hecke_spans == brackets; }
};

/// rank {v_a T_w : w ∈ S_n} = n! for every bracket a, and u⁺_a H u⁻_a' = u⁺_a H(S_n) u⁻_a'.
FreenessReport bracket_freeness(const SpecAlgebra& alg, LConvention l);

}  // namespace qschur
