// The Ariki-Koike algebra H_{n,r} on the basis L_1^{c_1}...L_n^{c_n} T_w.
//
// The algebra is templated on its coefficient type: ExactScalar for exact
// work over Z[q^±1, Q_1..Q_r], Rational for work at a specialization.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qschur/linalg.hpp"
#include "qschur/ring.hpp"
#include "qschur/symgrp.hpp"
#include "qschur/tableaux.hpp"

namespace qschur {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactScalar> {
  static bool is_zero(const ExactScalar& s) { return s.is_zero(); }
  static ExactScalar from_int(const ExactScalar& one, long v) { return one * Integer(v); }
};

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& s) { return s == 0; }
  static Rational from_int(const Rational&, long v) { return Rational(v); }
};

/// The values of q, q^-1, Q_1..Q_r in the coefficient type.
template <class S>
class Params {
 public:
  Params(S one, S q, S qinv, std::vector<S> Q);

  int r() const { return static_cast<int>(Q_.size()); }
  const S& zero() const { return zero_; }
  const S& one() const { return one_; }
  const S& q() const { return q_; }
  const S& qinv() const { return qinv_; }
  /// q - q^-1
  const S& c() const { return c_; }
  const S& Q(int k) const { return Q_.at(static_cast<std::size_t>(k - 1)); }
  /// Elementary symmetric polynomial e_j(Q_1..Q_r).
  const S& e(int j) const { return e_.at(static_cast<std::size_t>(j)); }
  S qpow(int e) const;
  S integer(long v) const { return ScalarTraits<S>::from_int(one_, v); }

 private:
  S zero_, one_, q_, qinv_, c_;
  std::vector<S> Q_, e_;
  std::vector<S> qpows_;  // q^-kSpan .. q^kSpan
  static constexpr int kSpan = 24;
};

Params<ExactScalar> exact_params(int r);
Params<Rational> specialized_params(const Specialization& s);

template <class S>
class AKAlgebra;

/// Element of H_{n,r}: basis index -> coefficient, no zero coefficients.
template <class S>
class AKElement {
 public:
  using Algebra = AKAlgebra<S>;
  using Terms = std::map<std::uint32_t, S>;

  AKElement() = default;
  AKElement(std::shared_ptr<const Algebra> alg, Terms t) : alg_(std::move(alg)), terms_(std::move(t)) {}

  const std::shared_ptr<const Algebra>& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  AKElement operator-() const;
  AKElement& operator+=(const AKElement& o);
  AKElement& operator-=(const AKElement& o);
  friend AKElement operator+(AKElement a, const AKElement& b) { return a += b; }
  friend AKElement operator-(AKElement a, const AKElement& b) { return a -= b; }
  friend AKElement operator*(const AKElement& a, const AKElement& b) { return a.algebra_checked(b).mul(a, b); }
  friend AKElement operator*(const S& s, const AKElement& a) { return a.scaled(s); }
  AKElement scaled(const S& s) const;

  bool operator==(const AKElement& o) const;
  bool operator!=(const AKElement& o) const { return !(*this == o); }

 private:
  const Algebra& algebra_checked(const AKElement& o) const;
  std::shared_ptr<const Algebra> alg_;
  Terms terms_;
};

/// H_{n,r} with memoized structure constants. Caches are guarded by a mutex;
/// concurrent use from several threads is supported.
template <class S>
class AKAlgebra : public std::enable_shared_from_this<AKAlgebra<S>> {
 public:
  using Element = AKElement<S>;
  using Terms = typename Element::Terms;

  static std::shared_ptr<const AKAlgebra> create(int n, Params<S> params);

  int n() const { return n_; }
  int r() const { return params_.r(); }
  const Params<S>& params() const { return params_; }
  std::size_t dim() const { return dim_; }
  std::size_t nfact() const { return nfact_; }

  // basis bookkeeping: index = rank(c) * n! + rank(w), both lexicographic
  std::uint32_t index(const std::vector<int>& c, const Permutation& w) const;
  std::vector<int> exponents(std::uint32_t idx) const;
  const Permutation& perm(std::uint32_t idx) const { return perms_[idx % nfact_]; }
  const std::vector<Permutation>& permutations() const { return perms_; }
  std::size_t perm_index(const Permutation& w) const;

  Element zero() const;
  Element one() const;
  Element scalar(const S& s) const;
  Element basis(std::uint32_t idx) const;
  Element T(const Permutation& w) const;
  /// T_0 for j = 0, T_j = T_{s_j} otherwise.
  Element generator(int j) const;
  /// L^c (exponents reduced into range when needed)
  Element L_power(const std::vector<int>& c) const;
  Element jucys_murphy(int i) const;

  Element mul(const Element& a, const Element& b) const;
  Element mul_gen_left(int j, const Element& e) const;
  Element mul_gen_right(const Element& e, int j) const;

  /// Coefficient vector in the basis order.
  std::vector<S> coefficients(const Element& e) const;

  std::string basis_label(std::uint32_t idx) const;

  // structure constants, exposed for tests
  const Terms& basis_product(std::uint32_t a, std::uint32_t b) const;
  const Terms& lk_power_r(int k) const;

  struct Key {};  // restricts construction to create()
  AKAlgebra(Key, int n, Params<S> params);

 private:
  using PermTerms = std::vector<std::pair<std::uint32_t, S>>;

  void check_owner(const Element& e) const;
  static void add_to(Terms& t, std::uint32_t idx, const S& coeff);
  const PermTerms& hecke_product(std::size_t x, std::size_t y) const;
  const Terms& t_w_l(std::size_t w, std::size_t crank) const;
  const Terms& reduce_monomial(const std::vector<int>& e) const;
  Terms left_simple(int i, std::uint32_t idx) const;
  Terms right_hecke(const Terms& t, std::size_t z) const;
  std::size_t c_rank(const std::vector<int>& c) const;

  int n_;
  Params<S> params_;
  std::size_t nfact_, rn_, dim_;
  std::vector<Permutation> perms_;
  std::vector<int> lengths_;
  std::vector<std::size_t> simple_idx_;
  std::vector<std::vector<std::size_t>> lmul_s_, rmul_s_;  // s_i * w and w * s_i
  std::map<std::vector<int>, std::size_t> perm_lookup_;

  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, PermTerms> hecke_cache_;
  mutable std::unordered_map<std::uint64_t, Terms> twl_cache_;
  mutable std::map<std::vector<int>, Terms> reduce_cache_;
  mutable std::map<int, Terms> lpow_cache_;
  mutable std::unordered_map<std::uint64_t, Terms> prod_cache_;
};

using ExactAlgebra = AKAlgebra<ExactScalar>;
using SpecAlgebra = AKAlgebra<Rational>;
using ExactElement = AKElement<ExactScalar>;
using SpecElement = AKElement<Rational>;

/// Coefficientwise evaluation of an exact element in a specialized algebra of the same n.
SpecElement specialize(const ExactElement& e, const std::shared_ptr<const SpecAlgebra>& target);
RationalVector to_vector(const SpecElement& e);
SpecElement from_vector(const std::shared_ptr<const SpecAlgebra>& alg, const RationalVector& v);

// ---------------------------------------------------------------- distinguished elements

enum class MConvention { Plain, QWeighted };
enum class YConvention { Plain, Signed };
/// Which Jucys-Murphy elements enter π_a: the L_i themselves (Literal) or
/// q^{i-1} L_i, the family with L'_{i+1} = T_i L'_i T_i (Symmetric). Only the
/// latter has symmetric polynomials central in the Hecke subalgebra under the
/// quadratic relation (T_i - q)(T_i + q^-1) = 0.
enum class LConvention { Literal, Symmetric };

/// Which sums stand for m_λ and the y-side sum. Plain/Plain/Literal is the
/// literal reading (both sides use Σ T_w).
struct Conventions {
  MConvention m = MConvention::Plain;
  YConvention y = YConvention::Plain;
  LConvention l = LConvention::Literal;
  bool operator==(const Conventions&) const = default;
  std::string str() const;
};

std::string to_string(MConvention c);
std::string to_string(YConvention c);
std::string to_string(LConvention c);
MConvention parse_m_convention(const std::string& s);
YConvention parse_y_convention(const std::string& s);
LConvention parse_l_convention(const std::string& s);
/// Parses "m_convention=...,y_convention=...,jm_convention=..." (keys optional).
Conventions parse_conventions(const std::string& s);
/// Every flag combination, literal first.
std::vector<Conventions> all_conventions();

/// π_a(x) = (L_1 - x)...(L_a - x), π_0 = 1.
template <class S>
AKElement<S> pi(const AKAlgebra<S>& alg, int a, const S& x, LConvention l = LConvention::Literal);
/// u⁺_a = π_{a_1}(Q_2)...π_{a_{r-1}}(Q_r); u⁻_a = π_{a_1}(Q_{r-1})...π_{a_{r-1}}(Q_1).
template <class S>
AKElement<S> u_plus(const AKAlgebra<S>& alg, const std::vector<int>& bracket, LConvention l = LConvention::Literal);
template <class S>
AKElement<S> u_minus(const AKAlgebra<S>& alg, const std::vector<int>& bracket, LConvention l = LConvention::Literal);
/// Dual bracket [0, n - a_{r-1}, ..., n - a_1, n].
std::vector<int> dual_bracket(const std::vector<int>& a);

/// Σ_{w ∈ S_comp} wt(w) T_w with wt = 1 or q^{l(w)}.
template <class S>
AKElement<S> m_sum(const AKAlgebra<S>& alg, const Composition& comp, MConvention conv);
/// The y-side sum: the m-sum (Plain) or Σ (-q)^{-l(w)} T_w (Signed).
template <class S>
AKElement<S> y_sum(const AKAlgebra<S>& alg, const Composition& comp, const Conventions& conv);

template <class S>
AKElement<S> x_elem(const AKAlgebra<S>& alg, const Multicomposition& lambda, const Conventions& conv);
template <class S>
AKElement<S> y_elem(const AKAlgebra<S>& alg, const Multicomposition& lambda, const Conventions& conv);
/// v_a = u⁺_a T_{w_a} u⁻_{a'}
template <class S>
AKElement<S> v_elem(const AKAlgebra<S>& alg, const std::vector<int>& bracket, LConvention l = LConvention::Literal);

/// Σ over the double coset S_lambda d S_mu, weights following the m convention
/// (q^{l(w) - l(d)} when q-weighted). d is replaced by the minimal representative.
template <class S>
AKElement<S> double_coset_sum(const AKAlgebra<S>& alg, const Composition& lambda, const Permutation& d,
                              const Composition& mu, MConvention conv);

/// Dimension of the closure of {1} under right multiplication by the generators.
std::size_t regular_closure_dim(const SpecAlgebra& alg);

}  // namespace qschur

#include "qschur/hecke_impl.hpp"
