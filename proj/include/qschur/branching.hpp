// Restriction of q-Schur modules from n+1 to n and its filtration by removable nodes.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qschur/schur.hpp"

namespace qschur {

/// λ ∈ Λ⁺_{n+1,r}(m) with m_k >= n+1, and m' = (m_1, ..., m_r - 1).
struct BranchContext {
  Multipartition lambda;
  std::vector<int> m, m_prime;

  /// Pads λ to m and checks the size constraints.
  BranchContext(const Multipartition& lambda, std::vector<int> m);
  /// The minimal choice m_k = n + 1.
  static BranchContext minimal(const Multipartition& lambda);
};

/// Semistandard λ-tableaux whose type lies in the image of γ.
std::vector<TypedTableau> restriction_basis(const BranchContext& ctx);

/// How removable nodes are numbered: AscendingSucc puts the ≻-least node
/// first (𝔫_i ≻ 𝔫_j for i > j), DescendingSucc the ≻-greatest.
enum class LayerOrder { AscendingSucc, DescendingSucc };
std::string to_string(LayerOrder o);

struct FiltrationLayer {
  int index = 0;  // 1-based
  Node node;
  std::vector<TypedTableau> span_labels;      // A(𝔫_j) = (m_r, r) for some j >= index
  std::vector<TypedTableau> quotient_labels;  // A(𝔫_index) = (m_r, r)
};

std::vector<Node> ordered_nodes(const Multipartition& lambda, LayerOrder order);
std::vector<FiltrationLayer> filtration_layers(const BranchContext& ctx, LayerOrder order = LayerOrder::AscendingSucc);

struct LayerCount {
  Node node;
  std::size_t quotient_dim = 0, weyl_dim = 0;
  bool bijective = false;  // A -> A without (m_r, r) is a bijection onto T^ss(λ∖node) over m'
  bool match = false;
};

struct BranchReport {
  Multipartition lambda;
  std::vector<LayerCount> layers;
  std::size_t restricted_dim = 0;
  bool identity_holds = false;
};

BranchReport branch_dim_identity(const BranchContext& ctx, LayerOrder order = LayerOrder::AscendingSucc);

/// Basis vectors h_A of the restriction at one specialization, grouped by type.
class RestrictedModule {
 public:
  RestrictedModule(const BranchContext& ctx, std::shared_ptr<const SpecAlgebra> alg, const Conventions& conv);

  const BranchContext& context() const { return ctx_; }
  const std::shared_ptr<const SpecAlgebra>& algebra() const { return alg_; }
  const Conventions& conventions() const { return conv_; }
  const std::vector<TypedTableau>& labels() const { return labels_; }
  const SpecElement& vector(const TypedTableau& a) const;
  /// Coordinates of e in {h_B : B of type ν}, or nothing when e is outside their span.
  std::optional<std::vector<Rational>> expand(const SpecElement& e, const Multicomposition& nu) const;
  /// The h_B of type ν are linearly independent.
  bool independent(const Multicomposition& nu) const;
  std::vector<TypedTableau> labels_of_type(const Multicomposition& nu) const;

 private:
  BranchContext ctx_;
  std::shared_ptr<const SpecAlgebra> alg_;
  Conventions conv_;
  std::vector<TypedTableau> labels_;
  std::map<TypedTableau, SpecElement> vectors_;
};

struct HighestWeightReport {
  int layer = 0;
  Node node;
  std::size_t operators = 0;  // E_(j,l) applied
  std::size_t failures = 0;
  bool certified = false;
};

/// E_(j,l) h_X ∈ span(M_{i+1}) for X = T^λ_{𝔫_i} and every (j,l) ∈ Γ'(m').
HighestWeightReport highest_weight_check(const RestrictedModule& mod, int layer, LayerOrder order);

struct TriangularityReport {
  std::size_t expansions = 0, violations = 0, undetermined = 0;
  bool certified = false;
};

/// E (or F) h_A expanded in {h_B} only involves B with shape(B∖(m_r,r)) ⊵ shape(A∖(m_r,r)).
TriangularityReport triangularity_check(const RestrictedModule& mod, EFIndex idx, EFKind kind, const TypedTableau& a);

}  // namespace qschur
