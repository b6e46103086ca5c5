// Template definitions for schur.hpp; include schur.hpp instead.
#pragma once

namespace qschur {

template <class S>
AKElement<S> z_lambda(const AKAlgebra<S>& alg, const Multipartition& lambda, const Conventions& conv) {
  if (!lambda.is_multipartition()) throw std::invalid_argument("z_lambda needs a multipartition");
  return x_elem(alg, lambda, conv) * alg.T(w_lambda(lambda)) * y_elem(alg, dual(lambda), conv);
}

template <class S>
AKElement<S> weyl_basis_vector(const AKAlgebra<S>& alg, const TypedTableau& a, const std::vector<int>& m,
                               const Conventions& conv) {
  if (!a.is_semistandard(m)) throw std::invalid_argument("tableau is not semistandard");
  const Multipartition& lambda = a.shape;
  const Multicomposition mu = a.type(m);
  const AKElement<S> dc = double_coset_sum(alg, mu.bar(), one_A(a, m), lambda.bar(), conv.m);
  return dc * u_plus(alg, lambda.bracket(), conv.l) * alg.T(w_lambda(lambda)) * y_elem(alg, dual(lambda), conv);
}

template <class S>
std::optional<AKElement<S>> ef_multiplier(const AKAlgebra<S>& alg, const Multicomposition& mu, EFIndex idx,
                                          EFKind kind, const Conventions& conv) {
  const auto nu = ef_target(mu, idx, kind);
  if (!nu) return std::nullopt;
  const std::vector<int> m = mu.bounds();
  int p = idx.i;  // flat position of row (i, k)
  for (int j = 1; j < idx.k; ++j) p += m[static_cast<std::size_t>(j - 1)];
  const Composition mb = mu.bar(), nb = nu->bar();
  // S_ν̄ ∩ S_μ̄ is the Young subgroup of the common refinement
  const CompositionBlocks bn(nb), bm(mb);
  std::vector<int> cuts;
  for (int v : bn.bounds()) cuts.push_back(v);
  for (int v : bm.bounds()) cuts.push_back(v);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Composition meet;
  for (std::size_t t = 1; t < cuts.size(); ++t) meet.push_back(cuts[t] - cuts[t - 1]);
  const CompositionBlocks bmeet(meet);
  AKElement<S> sum = alg.zero();
  for (const auto& x : young_subgroup(bn)) {
    if (!is_min_coset_rep(bmeet, x)) continue;
    sum += alg.params().qpow(x.length()) * alg.T(x.inverse());
  }
  const int shift = kind == EFKind::E ? -mb[static_cast<std::size_t>(p)] + 1 : -mb[static_cast<std::size_t>(p - 1)] + 1;
  AKElement<S> g = alg.params().qpow(shift) * sum;
  if (kind == EFKind::E && idx.i == m[static_cast<std::size_t>(idx.k - 1)]) {
    const int N = mu.bracket()[static_cast<std::size_t>(idx.k)];
    AKElement<S> L = alg.jucys_murphy(N + 1);
    if (conv.l == LConvention::Symmetric) L = alg.params().qpow(N) * L;
    g = g * (L - alg.scalar(alg.params().Q(idx.k + 1)));
  }
  return g;
}

}  // namespace qschur
