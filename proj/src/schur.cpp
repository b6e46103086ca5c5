#include "qschur/schur.hpp"

#include <map>
#include <stdexcept>

namespace qschur {

std::size_t weyl_dim_count(const Multipartition& lambda, const std::vector<int>& m) {
  return enumerate_ssyt(lambda, m).size();
}

PermutationModule::PermutationModule(std::shared_ptr<const SpecAlgebra> alg, const Multicomposition& mu,
                                     const Conventions& conv)
    : alg_(std::move(alg)), mu_(mu), x_(x_elem(*alg_, mu, conv)), space_(static_cast<Eigen::Index>(alg_->dim())) {
  const auto d = static_cast<Eigen::Index>(alg_->dim());
  images_ = RationalMatrix::Zero(d, d);
  for (Eigen::Index b = 0; b < d; ++b) {
    const SpecElement img = x_ * alg_->basis(static_cast<std::uint32_t>(b));
    for (const auto& [idx, c] : img.terms()) images_(static_cast<Eigen::Index>(idx), b) = c;
    space_.add(to_vector(img));
  }
  const RationalMatrix ns = nullspace(images_);
  for (Eigen::Index j = 0; j < ns.cols(); ++j) ann_.push_back(from_vector(alg_, ns.col(j)));
}

bool PermutationModule::contains(const SpecElement& e) const { return space_.contains(to_vector(e)); }

std::optional<SpecElement> PermutationModule::preimage(const SpecElement& e) const {
  auto h = solve(images_, to_vector(e));
  if (!h) return std::nullopt;
  return from_vector(alg_, *h);
}

bool in_span(const std::vector<SpecElement>& basis, const SpecElement& e) {
  if (e.is_zero()) return true;
  RowSpace rs(static_cast<Eigen::Index>(e.algebra()->dim()));
  for (const auto& b : basis) rs.add(to_vector(b));
  return rs.contains(to_vector(e));
}

std::vector<SpecElement> hom_space(const PermutationModule& source, const PermutationModule& target) {
  const auto& alg = target.generator().algebra();
  // spanning set of M^ν, reduced to a basis
  RowSpace rs(static_cast<Eigen::Index>(alg->dim()));
  std::vector<SpecElement> basis;
  for (std::uint32_t b = 0; b < alg->dim(); ++b) {
    SpecElement v = target.generator() * alg->basis(b);
    if (rs.add(to_vector(v))) basis.push_back(std::move(v));
  }
  const auto& ann = source.annihilator();
  const auto d = static_cast<Eigen::Index>(alg->dim());
  // columns: basis vectors; rows: coordinates of v * h for every annihilator h
  RationalMatrix sys = RationalMatrix::Zero(d * static_cast<Eigen::Index>(std::max<std::size_t>(ann.size(), 1)),
                                            static_cast<Eigen::Index>(basis.size()));
  for (std::size_t t = 0; t < ann.size(); ++t)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const SpecElement prod = basis[j] * ann[t];
      for (const auto& [idx, c] : prod.terms())
        sys(static_cast<Eigen::Index>(t) * d + static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(j)) = c;
    }
  const RationalMatrix ns = nullspace(sys);
  std::vector<SpecElement> out;
  for (Eigen::Index c = 0; c < ns.cols(); ++c) {
    SpecElement e = alg->zero();
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (ns(static_cast<Eigen::Index>(j), c) != 0) e += ns(static_cast<Eigen::Index>(j), c) * basis[j];
    out.push_back(std::move(e));
  }
  return out;
}

SpecElement idempotent_apply(const Multicomposition& lambda, const PermutationModule& m_mu, const SpecElement& e) {
  if (!m_mu.contains(e)) throw std::invalid_argument("element is not in M^" + m_mu.weight().str());
  return lambda == m_mu.weight() ? e : e.algebra()->zero();
}

std::vector<EFIndex> gamma_prime(const std::vector<int>& m) {
  std::vector<EFIndex> out;
  const int r = static_cast<int>(m.size());
  for (int k = 1; k <= r; ++k)
    for (int i = 1; i <= m[static_cast<std::size_t>(k - 1)]; ++i)
      if (!(k == r && i == m.back())) out.push_back({i, k});
  return out;
}

std::optional<Multicomposition> ef_target(const Multicomposition& mu, EFIndex idx, EFKind kind) {
  const std::vector<int> m = mu.bounds();
  const int r = mu.r();
  if (idx.k < 1 || idx.k > r || idx.i < 1 || idx.i > m[static_cast<std::size_t>(idx.k - 1)] ||
      (idx.k == r && idx.i == m.back()))
    throw std::out_of_range("index outside Γ'(m)");
  // the row after (i, k): (i+1, k), or the first row of the next nonempty-bounded component
  int i2 = idx.i + 1, k2 = idx.k;
  while (i2 > m[static_cast<std::size_t>(k2 - 1)]) {
    i2 = 1;
    ++k2;
  }
  Multicomposition nu = mu;
  int& a = nu.comp[static_cast<std::size_t>(idx.k - 1)][static_cast<std::size_t>(idx.i - 1)];
  int& b = nu.comp[static_cast<std::size_t>(k2 - 1)][static_cast<std::size_t>(i2 - 1)];
  if (kind == EFKind::E) {
    if (b == 0) return std::nullopt;
    ++a;
    --b;
  } else {
    if (a == 0) return std::nullopt;
    --a;
    ++b;
  }
  return nu;
}

BasisReport verify_basis_independence(const Multipartition& lambda, const std::vector<int>& m,
                                      const Conventions& conv, std::uint64_t seed, int retries,
                                      bool check_membership) {
  BasisReport rep;
  rep.lambda = lambda;
  rep.m = m;
  rep.conv = conv;
  const auto tableaux = enumerate_ssyt(lambda, m);
  rep.count = tableaux.size();
  rep.expected = weyl_dim_count(lambda, m);
  const int n = lambda.size(), r = lambda.r();
  for (int attempt = 0; attempt <= retries; ++attempt) {
    rep.attempts = attempt + 1;
    rep.point = random_specialization(r, seed + static_cast<std::uint64_t>(attempt));
    auto alg = SpecAlgebra::create(std::max(n, 1), specialized_params(rep.point));
    // the vectors live in the direct sum of the M^μ, so rank splits over types
    std::map<Multicomposition, RowSpace> spaces;
    std::map<Multicomposition, PermutationModule> modules;
    rep.members = 0;
    for (const auto& a : tableaux) {
      const Multicomposition mu = a.type(m);
      const SpecElement h = weyl_basis_vector(*alg, a, m, conv);
      auto it = spaces.try_emplace(mu, static_cast<Eigen::Index>(alg->dim())).first;
      it->second.add(to_vector(h));
      if (check_membership) {
        auto mt = modules.find(mu);
        if (mt == modules.end()) mt = modules.emplace(mu, PermutationModule(alg, mu, conv)).first;
        if (mt->second.contains(h)) ++rep.members;
      }
    }
    rep.rank = 0;
    for (const auto& [mu, rs] : spaces) rep.rank += rs.rank();
    rep.membership = check_membership ? rep.members == rep.count : std::optional<bool>{};
    rep.certified = rep.rank == rep.count && rep.count == rep.expected && rep.membership.value_or(true);
    if (rep.certified) break;
  }
  return rep;
}

Conventions validated_conventions() {
  return {MConvention::QWeighted, YConvention::Signed, LConvention::Symmetric};
}

BasisCertificate certify_basis(const Multipartition& lambda, const std::vector<int>& m, std::uint64_t seed) {
  BasisCertificate out;
  out.literal = verify_basis_independence(lambda, m, Conventions{}, seed);
  if (!out.literal.certified) out.fallback = verify_basis_independence(lambda, m, validated_conventions(), seed);
  return out;
}

}  // namespace qschur
