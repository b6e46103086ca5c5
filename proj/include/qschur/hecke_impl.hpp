// Template definitions for hecke.hpp; include hecke.hpp instead.
#pragma once

#include <algorithm>
#include <stdexcept>

namespace qschur {

// ---------------------------------------------------------------- Params

template <class S>
Params<S>::Params(S one, S q, S qinv, std::vector<S> Q)
    : zero_(one - one), one_(one), q_(q), qinv_(qinv), c_(q - qinv), Q_(std::move(Q)) {
  e_.assign(Q_.size() + 1, zero_);
  e_[0] = one_;
  for (std::size_t k = 0; k < Q_.size(); ++k)
    for (std::size_t j = k + 1; j >= 1; --j) e_[j] = e_[j] + e_[j - 1] * Q_[k];
  qpows_.assign(2 * kSpan + 1, one_);
  for (int e = 1; e <= kSpan; ++e) {
    qpows_[static_cast<std::size_t>(kSpan + e)] = qpows_[static_cast<std::size_t>(kSpan + e - 1)] * q_;
    qpows_[static_cast<std::size_t>(kSpan - e)] = qpows_[static_cast<std::size_t>(kSpan - e + 1)] * qinv_;
  }
}

template <class S>
S Params<S>::qpow(int e) const {
  if (e >= -kSpan && e <= kSpan) return qpows_[static_cast<std::size_t>(e + kSpan)];
  S v = qpows_[static_cast<std::size_t>(e > 0 ? 2 * kSpan : 0)];
  const S& step = e > 0 ? q_ : qinv_;
  for (int i = kSpan; i < std::abs(e); ++i) v = v * step;
  return v;
}

// ---------------------------------------------------------------- AKElement

template <class S>
const AKAlgebra<S>& AKElement<S>::algebra_checked(const AKElement& o) const {
  if (!alg_ || alg_ != o.alg_) throw ContextMismatch("elements belong to different algebras");
  return *alg_;
}

template <class S>
AKElement<S> AKElement<S>::operator-() const {
  AKElement out = *this;
  for (auto& [k, v] : out.terms_) v = -v;
  return out;
}

template <class S>
AKElement<S>& AKElement<S>::operator+=(const AKElement& o) {
  algebra_checked(o);
  for (const auto& [k, v] : o.terms_) {
    auto [it, inserted] = terms_.emplace(k, v);
    if (!inserted) {
      it->second = it->second + v;
      if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

template <class S>
AKElement<S>& AKElement<S>::operator-=(const AKElement& o) {
  return *this += -o;
}

template <class S>
AKElement<S> AKElement<S>::scaled(const S& s) const {
  AKElement out(alg_, {});
  for (const auto& [k, v] : terms_) {
    S p = s * v;
    if (!ScalarTraits<S>::is_zero(p)) out.terms_.emplace(k, std::move(p));
  }
  return out;
}

template <class S>
bool AKElement<S>::operator==(const AKElement& o) const {
  algebra_checked(o);
  return terms_ == o.terms_;
}

// ---------------------------------------------------------------- AKAlgebra

template <class S>
std::shared_ptr<const AKAlgebra<S>> AKAlgebra<S>::create(int n, Params<S> params) {
  return std::make_shared<const AKAlgebra<S>>(Key{}, n, std::move(params));
}

template <class S>
AKAlgebra<S>::AKAlgebra(Key, int n, Params<S> params) : n_(n), params_(std::move(params)) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  nfact_ = factorial(n);
  rn_ = 1;
  for (int i = 0; i < n; ++i) rn_ *= static_cast<std::size_t>(r());
  dim_ = nfact_ * rn_;
  if (dim_ > (std::size_t{1} << 31)) throw ResourceLimit("algebra dimension too large");
  perms_ = all_permutations(n);
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    lengths_.push_back(perms_[i].length());
    perm_lookup_.emplace(perms_[i].images(), i);
  }
  simple_idx_.assign(static_cast<std::size_t>(n), 0);
  lmul_s_.assign(static_cast<std::size_t>(n), {});
  rmul_s_.assign(static_cast<std::size_t>(n), {});
  for (int i = 1; i < n; ++i) {
    const Permutation s = Permutation::simple(n, i);
    simple_idx_[static_cast<std::size_t>(i)] = perm_index(s);
    for (const auto& w : perms_) {
      lmul_s_[static_cast<std::size_t>(i)].push_back(perm_index(s * w));
      rmul_s_[static_cast<std::size_t>(i)].push_back(perm_index(w * s));
    }
  }
}

template <class S>
std::size_t AKAlgebra<S>::perm_index(const Permutation& w) const {
  auto it = perm_lookup_.find(w.images());
  if (it == perm_lookup_.end()) throw ArityError("permutation degree does not match the algebra");
  return it->second;
}

template <class S>
std::size_t AKAlgebra<S>::c_rank(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != n_) throw ArityError("exponent vector has the wrong length");
  std::size_t k = 0;
  for (int v : c) {
    if (v < 0 || v >= r()) throw std::out_of_range("exponent outside 0..r-1");
    k = k * static_cast<std::size_t>(r()) + static_cast<std::size_t>(v);
  }
  return k;
}

template <class S>
std::uint32_t AKAlgebra<S>::index(const std::vector<int>& c, const Permutation& w) const {
  return static_cast<std::uint32_t>(c_rank(c) * nfact_ + perm_index(w));
}

template <class S>
std::vector<int> AKAlgebra<S>::exponents(std::uint32_t idx) const {
  std::size_t k = idx / nfact_;
  std::vector<int> c(static_cast<std::size_t>(n_));
  for (int i = n_ - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(k % static_cast<std::size_t>(r()));
    k /= static_cast<std::size_t>(r());
  }
  return c;
}

template <class S>
void AKAlgebra<S>::add_to(Terms& t, std::uint32_t idx, const S& coeff) {
  if (ScalarTraits<S>::is_zero(coeff)) return;
  auto [it, inserted] = t.emplace(idx, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (ScalarTraits<S>::is_zero(it->second)) t.erase(it);
  }
}

template <class S>
void AKAlgebra<S>::check_owner(const Element& e) const {
  if (e.algebra().get() != this) throw ContextMismatch("element belongs to a different algebra");
}

template <class S>
AKElement<S> AKAlgebra<S>::zero() const {
  return Element(this->shared_from_this(), {});
}

template <class S>
AKElement<S> AKAlgebra<S>::one() const {
  return basis(0);
}

template <class S>
AKElement<S> AKAlgebra<S>::scalar(const S& s) const {
  Terms t;
  add_to(t, 0, s);
  return Element(this->shared_from_this(), std::move(t));
}

template <class S>
AKElement<S> AKAlgebra<S>::basis(std::uint32_t idx) const {
  if (idx >= dim_) throw std::out_of_range("basis index out of range");
  return Element(this->shared_from_this(), Terms{{idx, params_.one()}});
}

template <class S>
AKElement<S> AKAlgebra<S>::T(const Permutation& w) const {
  return basis(static_cast<std::uint32_t>(perm_index(w)));
}

template <class S>
AKElement<S> AKAlgebra<S>::generator(int j) const {
  if (j < 0 || j >= n_) throw std::out_of_range("generator index out of range");
  if (j == 0) return jucys_murphy(1);
  return T(Permutation::simple(n_, j));
}

template <class S>
AKElement<S> AKAlgebra<S>::L_power(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != n_) throw ArityError("exponent vector has the wrong length");
  for (int v : c)
    if (v < 0) throw std::out_of_range("negative exponent");
  return Element(this->shared_from_this(), reduce_monomial(c));
}

template <class S>
AKElement<S> AKAlgebra<S>::jucys_murphy(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("Jucys-Murphy index out of range");
  std::vector<int> c(static_cast<std::size_t>(n_), 0);
  c[static_cast<std::size_t>(i - 1)] = 1;
  return L_power(c);
}

template <class S>
const typename AKAlgebra<S>::PermTerms& AKAlgebra<S>::hecke_product(std::size_t x, std::size_t y) const {
  const std::uint64_t key = static_cast<std::uint64_t>(x) * nfact_ + y;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = hecke_cache_.find(key);
    if (it != hecke_cache_.end()) return it->second;
  }
  std::map<std::uint32_t, S> cur{{static_cast<std::uint32_t>(x), params_.one()}};
  for (int s : perms_[y].reduced_word()) {
    std::map<std::uint32_t, S> next;
    for (const auto& [w, a] : cur) {
      const std::size_t ws = rmul_s_[static_cast<std::size_t>(s)][w];
      add_to(next, static_cast<std::uint32_t>(ws), a);
      if (lengths_[ws] < lengths_[w]) add_to(next, w, a * params_.c());
    }
    cur = std::move(next);
  }
  PermTerms out(cur.begin(), cur.end());
  std::lock_guard<std::mutex> lock(mu_);
  return hecke_cache_.emplace(key, std::move(out)).first->second;
}

template <class S>
typename AKAlgebra<S>::Terms AKAlgebra<S>::right_hecke(const Terms& t, std::size_t z) const {
  Terms out;
  for (const auto& [idx, coeff] : t) {
    const std::uint32_t base = static_cast<std::uint32_t>(idx / nfact_ * nfact_);
    for (const auto& [v, h] : hecke_product(idx % nfact_, z)) add_to(out, base + v, coeff * h);
  }
  return out;
}

// T_i L^c T_u: T_i x^a y^b = q^{a-b} x^b y^a T_i + (correction without T_i),
// with x = L_i, y = L_{i+1}.
template <class S>
typename AKAlgebra<S>::Terms AKAlgebra<S>::left_simple(int i, std::uint32_t idx) const {
  std::vector<int> c = exponents(idx);
  const std::size_t u = idx % nfact_;
  const int a = c[static_cast<std::size_t>(i - 1)], b = c[static_cast<std::size_t>(i)];
  Terms out;
  std::vector<int> sw = c;
  std::swap(sw[static_cast<std::size_t>(i - 1)], sw[static_cast<std::size_t>(i)]);
  const std::uint32_t base = static_cast<std::uint32_t>(c_rank(sw) * nfact_);
  const S lead = params_.qpow(a - b);
  for (const auto& [v, h] : hecke_product(simple_idx_[static_cast<std::size_t>(i)], u)) add_to(out, base + v, lead * h);
  auto put = [&](int ex, int ey, const S& coeff) {
    std::vector<int> d = c;
    d[static_cast<std::size_t>(i - 1)] = ex;
    d[static_cast<std::size_t>(i)] = ey;
    add_to(out, static_cast<std::uint32_t>(c_rank(d) * nfact_ + u), coeff);
  };
  if (a > b) {
    for (int j = 0; j < a - b; ++j) put(b + j, a - j, -(params_.c() * params_.qpow(a - b - j)));
  } else if (a < b) {
    for (int j = 0; j < b - a; ++j) put(a + j, b - j, params_.c() * params_.qpow(-j));
  }
  return out;
}

template <class S>
const typename AKAlgebra<S>::Terms& AKAlgebra<S>::t_w_l(std::size_t w, std::size_t crank) const {
  const std::uint64_t key = static_cast<std::uint64_t>(w) * rn_ + crank;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = twl_cache_.find(key);
    if (it != twl_cache_.end()) return it->second;
  }
  Terms out;
  if (lengths_[w] == 0) {
    out.emplace(static_cast<std::uint32_t>(crank * nfact_), params_.one());
  } else {
    int i = 1;
    while (!perms_[w].left_descent(i)) ++i;
    const std::size_t shorter = lmul_s_[static_cast<std::size_t>(i)][w];
    for (const auto& [idx, coeff] : t_w_l(shorter, crank))
      for (const auto& [j, v] : left_simple(i, idx)) add_to(out, j, coeff * v);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return twl_cache_.emplace(key, std::move(out)).first->second;
}

// L_1^r from the cyclotomic relation; L_k^r = q^-r T L_{k-1}^r T + c Σ_a q^-a L_{k-1}^a L_k^{r-a} T
// with T = T_{k-1}.
template <class S>
const typename AKAlgebra<S>::Terms& AKAlgebra<S>::lk_power_r(int k) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = lpow_cache_.find(k);
    if (it != lpow_cache_.end()) return it->second;
  }
  const int r = this->r();
  Terms out;
  std::vector<int> c(static_cast<std::size_t>(n_), 0);
  if (k == 1) {
    for (int j = 0; j < r; ++j) {
      c[0] = j;
      S coeff = params_.e(r - j);
      if ((r - j) % 2 == 0) coeff = -coeff;
      add_to(out, static_cast<std::uint32_t>(c_rank(c) * nfact_), coeff);
    }
  } else {
    const std::size_t sk = simple_idx_[static_cast<std::size_t>(k - 1)];
    Terms left;
    for (const auto& [idx, coeff] : lk_power_r(k - 1))
      for (const auto& [j, v] : left_simple(k - 1, idx)) add_to(left, j, coeff * v);
    const S scale = params_.qpow(-r);
    for (const auto& [idx, coeff] : right_hecke(left, sk)) add_to(out, idx, scale * coeff);
    for (int a = 1; a < r; ++a) {
      c[static_cast<std::size_t>(k - 2)] = a;
      c[static_cast<std::size_t>(k - 1)] = r - a;
      add_to(out, static_cast<std::uint32_t>(c_rank(c) * nfact_ + sk), params_.c() * params_.qpow(-a));
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return lpow_cache_.emplace(k, std::move(out)).first->second;
}

// Terminates: each step lowers the total degree, or keeps it and lowers the
// exponent at the largest overflowing position with higher positions fixed.
template <class S>
const typename AKAlgebra<S>::Terms& AKAlgebra<S>::reduce_monomial(const std::vector<int>& e) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = reduce_cache_.find(e);
    if (it != reduce_cache_.end()) return it->second;
  }
  const int r = this->r();
  int k = 0;
  for (int i = n_; i >= 1; --i)
    if (e[static_cast<std::size_t>(i - 1)] >= r) {
      k = i;
      break;
    }
  Terms out;
  if (k == 0) {
    out.emplace(static_cast<std::uint32_t>(c_rank(e) * nfact_), params_.one());
  } else {
    std::vector<int> rest = e;
    rest[static_cast<std::size_t>(k - 1)] -= r;
    for (const auto& [idx, coeff] : lk_power_r(k)) {
      std::vector<int> f = rest;
      const std::vector<int> d = exponents(idx);
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += d[i];
      const Terms sub = right_hecke(reduce_monomial(f), idx % nfact_);
      for (const auto& [j, v] : sub) add_to(out, j, coeff * v);
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return reduce_cache_.emplace(e, std::move(out)).first->second;
}

// (L^a T_x)(L^c T_y) = Σ_{(d,u) in T_x L^c} L^{a+d} T_u T_y
template <class S>
const typename AKAlgebra<S>::Terms& AKAlgebra<S>::basis_product(std::uint32_t a, std::uint32_t b) const {
  const std::uint64_t key = static_cast<std::uint64_t>(a) * dim_ + b;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = prod_cache_.find(key);
    if (it != prod_cache_.end()) return it->second;
  }
  const std::vector<int> ca = exponents(a);
  const std::size_t x = a % nfact_, y = b % nfact_;
  Terms out;
  for (const auto& [idx, coeff] : t_w_l(x, b / nfact_)) {
    std::vector<int> f = exponents(idx);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += ca[i];
    const Terms sub = right_hecke(right_hecke(reduce_monomial(f), idx % nfact_), y);
    for (const auto& [j, v] : sub) add_to(out, j, coeff * v);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return prod_cache_.emplace(key, std::move(out)).first->second;
}

template <class S>
AKElement<S> AKAlgebra<S>::mul(const Element& a, const Element& b) const {
  check_owner(a);
  check_owner(b);
  Terms out;
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, y] : b.terms()) {
      const S xy = x * y;
      for (const auto& [k, v] : basis_product(i, j)) add_to(out, k, xy * v);
    }
  return Element(this->shared_from_this(), std::move(out));
}

template <class S>
AKElement<S> AKAlgebra<S>::mul_gen_left(int j, const Element& e) const {
  check_owner(e);
  if (j < 0 || j >= n_) throw std::out_of_range("generator index out of range");
  Terms out;
  for (const auto& [idx, coeff] : e.terms()) {
    Terms t;
    if (j == 0) {
      std::vector<int> c = exponents(idx);
      ++c[0];
      t = right_hecke(reduce_monomial(c), idx % nfact_);
    } else {
      t = left_simple(j, idx);
    }
    for (const auto& [k, v] : t) add_to(out, k, coeff * v);
  }
  return Element(this->shared_from_this(), std::move(out));
}

template <class S>
AKElement<S> AKAlgebra<S>::mul_gen_right(const Element& e, int j) const {
  check_owner(e);
  if (j < 0 || j >= n_) throw std::out_of_range("generator index out of range");
  if (j == 0) return mul(e, jucys_murphy(1));
  return Element(this->shared_from_this(), right_hecke(e.terms(), simple_idx_[static_cast<std::size_t>(j)]));
}

template <class S>
std::vector<S> AKAlgebra<S>::coefficients(const Element& e) const {
  check_owner(e);
  std::vector<S> v(dim_, params_.zero());
  for (const auto& [idx, coeff] : e.terms()) v[idx] = coeff;
  return v;
}

template <class S>
std::string AKAlgebra<S>::basis_label(std::uint32_t idx) const {
  std::string s;
  const auto c = exponents(idx);
  for (int i = 0; i < n_; ++i)
    if (c[static_cast<std::size_t>(i)] != 0) {
      if (!s.empty()) s += '*';
      s += "L" + std::to_string(i + 1) + "^" + std::to_string(c[static_cast<std::size_t>(i)]);
    }
  const Permutation& w = perm(idx);
  if (!w.is_identity()) {
    if (!s.empty()) s += '*';
    s += "T" + w.str();
  }
  return s;
}

// ---------------------------------------------------------------- distinguished elements

template <class S>
AKElement<S> pi(const AKAlgebra<S>& alg, int a, const S& x, LConvention l) {
  AKElement<S> out = alg.one();
  for (int j = 1; j <= a; ++j) {
    AKElement<S> L = alg.jucys_murphy(j);
    if (l == LConvention::Symmetric) L = alg.params().qpow(j - 1) * L;
    out = out * (L - alg.scalar(x));
  }
  return out;
}

template <class S>
AKElement<S> u_plus(const AKAlgebra<S>& alg, const std::vector<int>& bracket, LConvention l) {
  const int r = static_cast<int>(bracket.size()) - 1;
  if (r != alg.r() || bracket.front() != 0 || bracket.back() != alg.n()) throw std::invalid_argument("malformed bracket");
  for (std::size_t i = 1; i < bracket.size(); ++i)
    if (bracket[i] < bracket[i - 1]) throw std::invalid_argument("malformed bracket");
  AKElement<S> out = alg.one();
  for (int k = 1; k <= r - 1; ++k) out = out * pi(alg, bracket[static_cast<std::size_t>(k)], alg.params().Q(k + 1), l);
  return out;
}

template <class S>
AKElement<S> u_minus(const AKAlgebra<S>& alg, const std::vector<int>& bracket, LConvention l) {
  const int r = static_cast<int>(bracket.size()) - 1;
  if (r != alg.r() || bracket.front() != 0 || bracket.back() != alg.n()) throw std::invalid_argument("malformed bracket");
  for (std::size_t i = 1; i < bracket.size(); ++i)
    if (bracket[i] < bracket[i - 1]) throw std::invalid_argument("malformed bracket");
  AKElement<S> out = alg.one();
  for (int s = 1; s <= r - 1; ++s) out = out * pi(alg, bracket[static_cast<std::size_t>(s)], alg.params().Q(r - s), l);
  return out;
}

template <class S>
AKElement<S> m_sum(const AKAlgebra<S>& alg, const Composition& comp, MConvention conv) {
  AKElement<S> out = alg.zero();
  for (const auto& w : young_subgroup(CompositionBlocks(comp))) {
    const S wt = conv == MConvention::Plain ? alg.params().one() : alg.params().qpow(w.length());
    out += wt * alg.T(w);
  }
  return out;
}

template <class S>
AKElement<S> y_sum(const AKAlgebra<S>& alg, const Composition& comp, const Conventions& conv) {
  if (conv.y == YConvention::Plain) return m_sum(alg, comp, conv.m);
  AKElement<S> out = alg.zero();
  for (const auto& w : young_subgroup(CompositionBlocks(comp))) {
    S wt = alg.params().qpow(-w.length());
    if (w.length() % 2) wt = -wt;
    out += wt * alg.T(w);
  }
  return out;
}

template <class S>
AKElement<S> x_elem(const AKAlgebra<S>& alg, const Multicomposition& lambda, const Conventions& conv) {
  return u_plus(alg, lambda.bracket(), conv.l) * m_sum(alg, lambda.bar(), conv.m);
}

template <class S>
AKElement<S> y_elem(const AKAlgebra<S>& alg, const Multicomposition& lambda, const Conventions& conv) {
  return u_minus(alg, lambda.bracket(), conv.l) * y_sum(alg, lambda.bar(), conv);
}

template <class S>
AKElement<S> v_elem(const AKAlgebra<S>& alg, const std::vector<int>& bracket, LConvention l) {
  return u_plus(alg, bracket, l) * alg.T(w_bracket(bracket)) * u_minus(alg, dual_bracket(bracket), l);
}

template <class S>
AKElement<S> double_coset_sum(const AKAlgebra<S>& alg, const Composition& lambda, const Permutation& d,
                              const Composition& mu, MConvention conv) {
  const DoubleCoset dc = double_coset_of(CompositionBlocks(lambda), d, CompositionBlocks(mu));
  const int base = dc.rep.length();
  AKElement<S> out = alg.zero();
  for (const auto& w : dc.elements) {
    const S wt = conv == MConvention::Plain ? alg.params().one() : alg.params().qpow(w.length() - base);
    out += wt * alg.T(w);
  }
  return out;
}

extern template class Params<ExactScalar>;
extern template class Params<Rational>;
extern template class AKElement<ExactScalar>;
extern template class AKElement<Rational>;
extern template class AKAlgebra<ExactScalar>;
extern template class AKAlgebra<Rational>;

}  // namespace qschur
