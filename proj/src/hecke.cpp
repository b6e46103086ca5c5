#include "qschur/hecke.hpp"

#include <deque>
#include <stdexcept>

namespace qschur {

template class Params<ExactScalar>;
template class Params<Rational>;
template class AKElement<ExactScalar>;
template class AKElement<Rational>;
template class AKAlgebra<ExactScalar>;
template class AKAlgebra<Rational>;

Params<ExactScalar> exact_params(int r) {
  ScalarContext ctx(r);
  std::vector<ExactScalar> Q;
  for (int k = 1; k <= r; ++k) Q.push_back(ExactScalar::Q_power(ctx, k, 1));
  return Params<ExactScalar>(ExactScalar::one(ctx), ExactScalar::q_power(ctx, 1), ExactScalar::q_power(ctx, -1),
                             std::move(Q));
}

Params<Rational> specialized_params(const Specialization& s) {
  if (s.q == 0) throw std::domain_error("q must be nonzero");
  return Params<Rational>(Rational(1), s.q, Rational(1) / s.q, s.Q);
}

SpecElement specialize(const ExactElement& e, const std::shared_ptr<const SpecAlgebra>& target) {
  const auto& src = e.algebra();
  if (!src || src->n() != target->n() || src->r() != target->r())
    throw ContextMismatch("specialization target has a different shape");
  Specialization s{target->params().q(), {}};
  for (int k = 1; k <= target->r(); ++k) s.Q.push_back(target->params().Q(k));
  Specializer ev(s, src->r());
  SpecElement::Terms t;
  for (const auto& [idx, c] : e.terms()) {
    Rational v = ev(c);
    if (v != 0) t.emplace(idx, std::move(v));
  }
  return SpecElement(target, std::move(t));
}

RationalVector to_vector(const SpecElement& e) {
  RationalVector v = RationalVector::Zero(static_cast<Eigen::Index>(e.algebra()->dim()));
  for (const auto& [idx, c] : e.terms()) v(static_cast<Eigen::Index>(idx)) = c;
  return v;
}

SpecElement from_vector(const std::shared_ptr<const SpecAlgebra>& alg, const RationalVector& v) {
  if (static_cast<std::size_t>(v.size()) != alg->dim()) throw ArityError("vector length does not match the algebra");
  SpecElement::Terms t;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) t.emplace(static_cast<std::uint32_t>(i), v(i));
  return SpecElement(alg, std::move(t));
}

std::string to_string(MConvention c) { return c == MConvention::Plain ? "plain" : "q_weighted"; }
std::string to_string(YConvention c) { return c == YConvention::Plain ? "plain" : "signed"; }

MConvention parse_m_convention(const std::string& s) {
  if (s == "plain") return MConvention::Plain;
  if (s == "q_weighted") return MConvention::QWeighted;
  throw std::invalid_argument("unknown m convention: " + s);
}

YConvention parse_y_convention(const std::string& s) {
  if (s == "plain") return YConvention::Plain;
  if (s == "signed") return YConvention::Signed;
  throw std::invalid_argument("unknown y convention: " + s);
}

std::string to_string(LConvention c) { return c == LConvention::Literal ? "literal" : "symmetric"; }

LConvention parse_l_convention(const std::string& s) {
  if (s == "literal") return LConvention::Literal;
  if (s == "symmetric") return LConvention::Symmetric;
  throw std::invalid_argument("unknown jm convention: " + s);
}

std::string Conventions::str() const {
  return "m_convention=" + to_string(m) + ",y_convention=" + to_string(y) + ",jm_convention=" + to_string(l);
}

Conventions parse_conventions(const std::string& s) {
  Conventions c;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    const std::string item = s.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed flag: " + item);
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "m_convention")
      c.m = parse_m_convention(value);
    else if (key == "y_convention")
      c.y = parse_y_convention(value);
    else if (key == "jm_convention")
      c.l = parse_l_convention(value);
    else
      throw std::invalid_argument("unknown flag: " + key);
    pos = end + 1;
  }
  return c;
}

std::vector<Conventions> all_conventions() {
  std::vector<Conventions> out;
  for (auto l : {LConvention::Literal, LConvention::Symmetric})
    for (auto m : {MConvention::Plain, MConvention::QWeighted})
      for (auto y : {YConvention::Plain, YConvention::Signed}) out.push_back({m, y, l});
  return out;
}

std::vector<int> dual_bracket(const std::vector<int>& a) {
  if (a.size() < 2) throw std::invalid_argument("bracket needs at least two entries");
  const int n = a.back();
  std::vector<int> out{0};
  for (std::size_t k = a.size() - 2; k >= 1; --k) out.push_back(n - a[k]);
  out.push_back(n);
  return out;
}

std::size_t regular_closure_dim(const SpecAlgebra& alg) {
  RowSpace space(static_cast<Eigen::Index>(alg.dim()));
  std::deque<SpecElement> queue;
  auto push = [&](const SpecElement& e) {
    if (space.add(to_vector(e))) queue.push_back(e);
  };
  push(alg.one());
  while (!queue.empty()) {
    SpecElement e = queue.front();
    queue.pop_front();
    for (int j = 0; j < alg.n(); ++j) push(alg.mul_gen_right(e, j));
  }
  return space.rank();
}

}  // namespace qschur
