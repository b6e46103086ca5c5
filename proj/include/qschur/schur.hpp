// Permutation modules M^μ, the elements z_λ and h_A, and the E/F operators.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qschur/hecke.hpp"
#include "qschur/tableaux.hpp"

namespace qschur {

/// z_λ = x_λ T_{w_λ} y_{λ'}
template <class S>
AKElement<S> z_lambda(const AKAlgebra<S>& alg, const Multipartition& lambda, const Conventions& conv);

/// h_A = (Σ_{d ∈ S_μ̄ 1_A S_λ̄} T_d) u⁺_[λ] T_{w_λ} y_{λ'} for A of shape λ and type μ over m.
template <class S>
AKElement<S> weyl_basis_vector(const AKAlgebra<S>& alg, const TypedTableau& a, const std::vector<int>& m,
                               const Conventions& conv);

/// |∪_μ T^ss_μ(λ)|
std::size_t weyl_dim_count(const Multipartition& lambda, const std::vector<int>& m);

/// The right ideal x_μ H at a specialization, as a row space of coefficient vectors.
class PermutationModule {
 public:
  PermutationModule(std::shared_ptr<const SpecAlgebra> alg, const Multicomposition& mu, const Conventions& conv);

  const Multicomposition& weight() const { return mu_; }
  const SpecElement& generator() const { return x_; }
  std::size_t dim() const { return space_.rank(); }
  bool contains(const SpecElement& e) const;
  /// Some h with x_μ h = e, or nothing when e is not in the module.
  std::optional<SpecElement> preimage(const SpecElement& e) const;
  /// Basis of {h : x_μ h = 0}.
  const std::vector<SpecElement>& annihilator() const { return ann_; }

 private:
  std::shared_ptr<const SpecAlgebra> alg_;
  Multicomposition mu_;
  SpecElement x_;
  RowSpace space_;
  RationalMatrix images_;  // column b = coefficients of x_μ T_b
  std::vector<SpecElement> ann_;
};

/// Basis of Hom(M^μ, M^ν) described by images of x_μ: {e ∈ M^ν : e Ann(x_μ) = 0}.
std::vector<SpecElement> hom_space(const PermutationModule& source, const PermutationModule& target);
/// e lies in the span of the given elements.
bool in_span(const std::vector<SpecElement>& basis, const SpecElement& e);

/// 1_λ applied to e ∈ M^μ; throws when membership cannot be certified.
SpecElement idempotent_apply(const Multicomposition& lambda, const PermutationModule& m_mu, const SpecElement& e);

// ---------------------------------------------------------------- E/F

enum class EFKind { E, F };

/// (i, k) in Γ'(m): 1 <= k <= r, 1 <= i <= m_k, (i, k) != (m_r, r).
struct EFIndex {
  int i = 1, k = 1;
  auto operator<=>(const EFIndex&) const = default;
  bool operator==(const EFIndex&) const = default;
};
std::vector<EFIndex> gamma_prime(const std::vector<int>& m);

/// μ ± α_(i,k), or nothing when it leaves Λ_{n,r}(m).
std::optional<Multicomposition> ef_target(const Multicomposition& mu, EFIndex idx, EFKind kind);

/// g with E(x_μ h) = g x_μ h (resp. F), following the E/F displays with
/// T*_x = T_{x^{-1}}, X the minimal representatives of (S_ν̄ ∩ S_μ̄)\S_ν̄,
/// N = a_k of [μ] and m_μ read as x_μ. Nothing when the target leaves Λ.
template <class S>
std::optional<AKElement<S>> ef_multiplier(const AKAlgebra<S>& alg, const Multicomposition& mu, EFIndex idx,
                                          EFKind kind, const Conventions& conv);

// ---------------------------------------------------------------- basis verification

struct BasisReport {
  Multipartition lambda;
  std::vector<int> m;
  std::size_t count = 0;  // number of h_A
  std::size_t rank = 0;
  std::size_t expected = 0;  // weyl_dim_count
  std::size_t members = 0;   // h_A found in M^{type(A)}
  std::optional<bool> membership;
  bool certified = false;
  int attempts = 0;
  Conventions conv;
  Specialization point;
};

/// Builds all h_A at random specializations drawn from seed, retrying up to
/// `retries` times while the rank falls short. Certified means rank = count =
/// weyl_dim_count and, when checked, every h_A lies in M^{type(A)}.
BasisReport verify_basis_independence(const Multipartition& lambda, const std::vector<int>& m,
                                      const Conventions& conv, std::uint64_t seed, int retries = 3,
                                      bool check_membership = true);

/// q-weighted m, signed y, symmetric Jucys-Murphy family: the one flag set
/// under which h_A ∈ M^μ, h_{superstandard} = z_λ and the E/F images land in M^ν.
Conventions validated_conventions();

/// Literal flags first, then validated_conventions() when they do not certify.
struct BasisCertificate {
  BasisReport literal;
  std::optional<BasisReport> fallback;
  const BasisReport& used() const { return fallback ? *fallback : literal; }
  bool certified() const { return used().certified; }
};
BasisCertificate certify_basis(const Multipartition& lambda, const std::vector<int>& m, std::uint64_t seed);

}  // namespace qschur

#include "qschur/schur_impl.hpp"
