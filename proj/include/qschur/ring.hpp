// Exact coefficient ring Z[q, q^-1, Q_1, ..., Q_r] and its specializations.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace qschur {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised when two values built for different parameter counts are combined.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a list argument has the wrong number of entries.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation would exceed a configured resource limit.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest supported number of cyclotomic parameters.
inline constexpr int kMaxParams = 7;

/// Number of cyclotomic parameters Q_1..Q_r shared by a family of scalars.
class ScalarContext {
 public:
  explicit ScalarContext(int r);
  int r() const { return r_; }
  bool operator==(const ScalarContext&) const = default;

 private:
  int r_;
};

/// Exponent vector of a monomial: slot 0 holds the (signed) power of q,
/// slot k holds the power of Q_k.
struct Monomial {
  std::array<std::int16_t, kMaxParams + 1> e{};

  int q() const { return e[0]; }
  int Q(int k) const { return e[static_cast<std::size_t>(k)]; }
  auto operator<=>(const Monomial&) const = default;
  Monomial operator*(const Monomial& o) const;
};

/// A Laurent polynomial in q with polynomial dependence on Q_1..Q_r and
/// integer coefficients. Terms are kept sorted by exponent vector
/// (lexicographic on (e_q, e_Q1, ..., e_Qr)) with no zero coefficients.
class ExactScalar {
 public:
  using Term = std::pair<Monomial, Integer>;

  ExactScalar() = default;  // zero with r = 1
  explicit ExactScalar(ScalarContext ctx) : r_(ctx.r()) {}
  ExactScalar(ScalarContext ctx, const Integer& c);

  static ExactScalar zero(ScalarContext ctx) { return ExactScalar(ctx); }
  static ExactScalar one(ScalarContext ctx) { return ExactScalar(ctx, Integer(1)); }
  static ExactScalar constant(ScalarContext ctx, long c) { return ExactScalar(ctx, Integer(c)); }
  /// c * q^e
  static ExactScalar q_power(ScalarContext ctx, int e, long c = 1);
  /// Q_k^e, 1 <= k <= r
  static ExactScalar Q_power(ScalarContext ctx, int k, int e = 1);
  /// Builds from unsorted, possibly repeated terms.
  static ExactScalar from_terms(ScalarContext ctx, std::vector<Term> terms);

  ScalarContext context() const { return ScalarContext(r_); }
  int r() const { return r_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator*=(const Integer& c);
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(ExactScalar a, const Integer& c) { return a *= c; }

  /// Multiplies by q^e in place (exact, q is a unit).
  ExactScalar& shift_q(int e);

  bool operator==(const ExactScalar& o) const;
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }
  /// Total order used for deterministic sorting; not a ring order.
  bool operator<(const ExactScalar& o) const;

 private:
  void check_same(const ExactScalar& o) const;
  void canonicalize();

  int r_ = 1;
  std::vector<Term> terms_;
};

/// Point of evaluation for q, Q_1..Q_r.
struct Specialization {
  Rational q;
  std::vector<Rational> Q;

  bool operator==(const Specialization&) const = default;
};

/// Evaluates a at s. Throws ArityError when s has the wrong number of
/// Q-values and std::domain_error when s.q == 0.
Rational specialize(const ExactScalar& a, const Specialization& s);

/// Evaluation with cached powers; use for many scalars at one point.
class Specializer {
 public:
  Specializer(const Specialization& s, int r);
  Rational operator()(const ExactScalar& a) const;
  const Specialization& point() const { return s_; }

 private:
  const Rational& power(int slot, int e) const;

  Specialization s_;
  int r_;
  mutable std::vector<std::map<int, Rational>> powers_;
};

/// Draws a point with pairwise-distinct nonzero rationals, q^2 != 1.
Specialization random_specialization(int r, std::uint64_t seed);

}  // namespace qschur
