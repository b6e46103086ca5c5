#include "qschur/checks.hpp"

namespace qschur {

std::vector<std::vector<int>> enumerate_brackets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(r) + 1, 0);
  a.back() = n;
  auto rec = [&](auto&& self, int k, int lo) -> void {
    if (k == r) {
      out.push_back(a);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      a[static_cast<std::size_t>(k)] = v;
      self(self, k + 1, v);
    }
  };
  rec(rec, 1, 0);
  return out;
}

VanishingReport bracket_vanishing(const ExactAlgebra& alg, LConvention l) {
  VanishingReport rep;
  const auto brackets = enumerate_brackets(alg.n(), alg.r());
  for (const auto& a : brackets) {
    const auto up = u_plus(alg, a, l);
    for (const auto& b : brackets) {
      ++rep.pairs;
      if (bracket_leq(a, b)) continue;
      ++rep.zero_pairs;
      const auto um = u_minus(alg, dual_bracket(b), l);
      for (std::uint32_t h = 0; h < alg.dim(); ++h)
        if (!(up * alg.basis(h) * um).is_zero()) {
          ++rep.violations;
          break;
        }
    }
  }
  return rep;
}

FreenessReport bracket_freeness(const SpecAlgebra& alg, LConvention l) {
  FreenessReport rep;
  rep.expected_rank = alg.nfact();
  const auto d = static_cast<Eigen::Index>(alg.dim());
  for (const auto& a : enumerate_brackets(alg.n(), alg.r())) {
    ++rep.brackets;
    const auto v = v_elem(alg, a, l);
    RowSpace free_part(d);
    for (const auto& w : alg.permutations()) free_part.add(to_vector(v * alg.T(w)));
    if (free_part.rank() == alg.nfact()) ++rep.full_rank;
    const auto up = u_plus(alg, a, l), um = u_minus(alg, dual_bracket(a), l);
    RowSpace hecke(d), all(d);
    for (const auto& w : alg.permutations()) hecke.add(to_vector(up * alg.T(w) * um));
    for (std::uint32_t h = 0; h < alg.dim(); ++h) all.add(to_vector(up * alg.basis(h) * um));
    if (hecke.rank() == all.rank()) ++rep.hecke_spans;
  }
  return rep;
}

}  // namespace qschur
