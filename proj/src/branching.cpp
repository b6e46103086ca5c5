#include "qschur/branching.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qschur {

BranchContext::BranchContext(const Multipartition& lam, std::vector<int> bounds) : m(std::move(bounds)) {
  if (!lam.is_multipartition()) throw std::invalid_argument("branching needs a multipartition");
  if (lam.r() != static_cast<int>(m.size())) throw ArityError("bounds do not match the number of components");
  const int n1 = lam.size();
  if (n1 < 2) throw std::invalid_argument("branching needs n + 1 >= 2");
  for (int mk : m)
    if (mk < n1) throw std::invalid_argument("every bound must be at least n + 1");
  lambda = lam.with_bounds(m);
  m_prime = shorten_last(m);
}

BranchContext BranchContext::minimal(const Multipartition& lam) {
  return BranchContext(lam, std::vector<int>(static_cast<std::size_t>(lam.r()), lam.size()));
}

std::vector<TypedTableau> restriction_basis(const BranchContext& ctx) {
  std::vector<TypedTableau> out;
  for (auto& a : enumerate_ssyt(ctx.lambda, ctx.m))
    if (in_gamma_image(a.type(ctx.m), ctx.m)) out.push_back(std::move(a));
  return out;
}

std::string to_string(LayerOrder o) { return o == LayerOrder::AscendingSucc ? "ascending" : "descending"; }

std::vector<Node> ordered_nodes(const Multipartition& lambda, LayerOrder order) {
  auto nodes = removable_nodes(lambda);
  if (order == LayerOrder::DescendingSucc) std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

namespace {

Symbol symbol_at(const TypedTableau& a, const Node& x) { return a.at({x.i, x.j, x.k}); }

}  // namespace

std::vector<FiltrationLayer> filtration_layers(const BranchContext& ctx, LayerOrder order) {
  const auto nodes = ordered_nodes(ctx.lambda, order);
  const auto basis = restriction_basis(ctx);
  const Symbol last{ctx.m.back(), static_cast<int>(ctx.m.size())};
  std::vector<FiltrationLayer> layers;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    FiltrationLayer layer;
    layer.index = static_cast<int>(i) + 1;
    layer.node = nodes[i];
    for (const auto& a : basis) {
      if (symbol_at(a, nodes[i]) == last) layer.quotient_labels.push_back(a);
      for (std::size_t j = i; j < nodes.size(); ++j)
        if (symbol_at(a, nodes[j]) == last) {
          layer.span_labels.push_back(a);
          break;
        }
    }
    layers.push_back(std::move(layer));
  }
  return layers;
}

BranchReport branch_dim_identity(const BranchContext& ctx, LayerOrder order) {
  BranchReport rep;
  rep.lambda = ctx.lambda;
  rep.restricted_dim = restriction_basis(ctx).size();
  std::size_t total = 0;
  bool ok = true;
  for (const auto& layer : filtration_layers(ctx, order)) {
    LayerCount lc;
    lc.node = layer.node;
    lc.quotient_dim = layer.quotient_labels.size();
    const Multipartition smaller = remove_node(ctx.lambda, layer.node).with_bounds(ctx.m_prime);
    const auto targets = enumerate_ssyt(smaller, ctx.m_prime);
    lc.weyl_dim = targets.size();
    std::set<TypedTableau> image;
    bool valid = true;
    for (const auto& a : layer.quotient_labels) {
      const auto s = strip_last_symbol(a, ctx.m);
      if (!s || !(s->first == layer.node) || !s->second.is_semistandard(ctx.m_prime)) {
        valid = false;
        continue;
      }
      image.insert(s->second);
    }
    lc.bijective = valid && image.size() == layer.quotient_labels.size() &&
                   image == std::set<TypedTableau>(targets.begin(), targets.end());
    lc.match = lc.bijective && lc.quotient_dim == lc.weyl_dim;
    ok = ok && lc.match;
    total += lc.quotient_dim;
    rep.layers.push_back(lc);
  }
  rep.identity_holds = ok && total == rep.restricted_dim;
  return rep;
}

RestrictedModule::RestrictedModule(const BranchContext& ctx, std::shared_ptr<const SpecAlgebra> alg,
                                   const Conventions& conv)
    : ctx_(ctx), alg_(std::move(alg)), conv_(conv), labels_(restriction_basis(ctx)) {
  if (alg_->n() != ctx.lambda.size() || alg_->r() != ctx.lambda.r())
    throw ContextMismatch("algebra does not match the branching context");
  for (const auto& a : labels_) vectors_.emplace(a, weyl_basis_vector(*alg_, a, ctx.m, conv));
}

const SpecElement& RestrictedModule::vector(const TypedTableau& a) const {
  auto it = vectors_.find(a);
  if (it == vectors_.end()) throw std::invalid_argument("tableau is not a restriction basis label");
  return it->second;
}

std::vector<TypedTableau> RestrictedModule::labels_of_type(const Multicomposition& nu) const {
  std::vector<TypedTableau> out;
  for (const auto& a : labels_)
    if (a.type(ctx_.m) == nu) out.push_back(a);
  return out;
}

bool RestrictedModule::independent(const Multicomposition& nu) const {
  RowSpace rs(static_cast<Eigen::Index>(alg_->dim()));
  const auto ls = labels_of_type(nu);
  for (const auto& b : ls)
    if (!rs.add(to_vector(vector(b)))) return false;
  return true;
}

std::optional<std::vector<Rational>> RestrictedModule::expand(const SpecElement& e, const Multicomposition& nu) const {
  const auto ls = labels_of_type(nu);
  const auto d = static_cast<Eigen::Index>(alg_->dim());
  RationalMatrix a = RationalMatrix::Zero(d, static_cast<Eigen::Index>(ls.size()));
  for (std::size_t j = 0; j < ls.size(); ++j)
    for (const auto& [idx, c] : vector(ls[j]).terms()) a(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(j)) = c;
  const auto x = solve(a, to_vector(e));
  if (!x) return std::nullopt;
  return std::vector<Rational>(x->data(), x->data() + x->size());
}

HighestWeightReport highest_weight_check(const RestrictedModule& mod, int layer, LayerOrder order) {
  const auto& ctx = mod.context();
  const auto layers = filtration_layers(ctx, order);
  if (layer < 1 || layer > static_cast<int>(layers.size())) throw std::out_of_range("layer index out of range");
  HighestWeightReport rep;
  rep.layer = layer;
  rep.node = layers[static_cast<std::size_t>(layer - 1)].node;
  const TypedTableau x = t_lambda_x(ctx.lambda, rep.node, ctx.m);
  const Multicomposition tau = x.type(ctx.m);
  const SpecElement& hx = mod.vector(x);
  const std::vector<TypedTableau> next =
      layer < static_cast<int>(layers.size()) ? layers[static_cast<std::size_t>(layer)].span_labels : std::vector<TypedTableau>{};
  for (const EFIndex idx : gamma_prime(ctx.m_prime)) {
    const auto g = ef_multiplier(*mod.algebra(), tau, idx, EFKind::E, mod.conventions());
    ++rep.operators;
    if (!g) continue;  // target weight outside Λ: E acts as zero
    const SpecElement image = *g * hx;
    std::vector<SpecElement> span;
    const Multicomposition nu = *ef_target(tau, idx, EFKind::E);
    for (const auto& b : next)
      if (b.type(ctx.m) == nu) span.push_back(mod.vector(b));
    if (!in_span(span, image)) ++rep.failures;
  }
  rep.certified = rep.failures == 0;
  return rep;
}

TriangularityReport triangularity_check(const RestrictedModule& mod, EFIndex idx, EFKind kind, const TypedTableau& a) {
  const auto& ctx = mod.context();
  TriangularityReport rep;
  const Multicomposition mu = a.type(ctx.m);
  const auto g = ef_multiplier(*mod.algebra(), mu, idx, kind, mod.conventions());
  if (!g) {
    rep.certified = true;
    return rep;
  }
  const Multicomposition nu = *ef_target(mu, idx, kind);
  if (!in_gamma_image(nu, ctx.m)) throw std::invalid_argument("operator leaves the restriction");
  const SpecElement image = *g * mod.vector(a);
  ++rep.expansions;
  if (!mod.independent(nu)) {
    ++rep.undetermined;
    return rep;
  }
  const auto coeffs = mod.expand(image, nu);
  if (!coeffs) {
    ++rep.undetermined;
    return rep;
  }
  const auto sa = strip_last_symbol(a, ctx.m);
  const auto bs = mod.labels_of_type(nu);
  for (std::size_t j = 0; j < bs.size(); ++j) {
    if ((*coeffs)[j] == 0) continue;
    const auto sb = strip_last_symbol(bs[j], ctx.m);
    if (!sa || !sb || !multipartition_dominates(sb->second.shape, sa->second.shape)) ++rep.violations;
  }
  rep.certified = rep.violations == 0 && rep.undetermined == 0;
  return rep;
}

}  // namespace qschur
