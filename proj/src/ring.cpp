#include "qschur/ring.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace qschur {

ScalarContext::ScalarContext(int r) : r_(r) {
  if (r < 1 || r > kMaxParams)
    throw std::invalid_argument("parameter count must lie in 1.." + std::to_string(kMaxParams));
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    int v = e[i] + o.e[i];
    if (v > INT16_MAX || v < INT16_MIN) throw std::overflow_error("monomial exponent overflow");
    m.e[i] = static_cast<std::int16_t>(v);
  }
  return m;
}

ExactScalar::ExactScalar(ScalarContext ctx, const Integer& c) : r_(ctx.r()) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

ExactScalar ExactScalar::q_power(ScalarContext ctx, int e, long c) {
  ExactScalar s(ctx);
  if (c != 0) {
    Monomial m;
    m.e[0] = static_cast<std::int16_t>(e);
    s.terms_.emplace_back(m, Integer(c));
  }
  return s;
}

ExactScalar ExactScalar::Q_power(ScalarContext ctx, int k, int e) {
  if (k < 1 || k > ctx.r()) throw std::out_of_range("Q index out of range");
  if (e < 0) throw std::invalid_argument("Q exponents must be non-negative");
  ExactScalar s(ctx);
  Monomial m;
  m.e[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(e);
  s.terms_.emplace_back(m, Integer(1));
  return s;
}

ExactScalar ExactScalar::from_terms(ScalarContext ctx, std::vector<Term> terms) {
  ExactScalar s(ctx);
  for (const auto& [m, c] : terms) {
    for (int k = ctx.r() + 1; k <= kMaxParams; ++k)
      if (m.Q(k) != 0) throw ArityError("monomial uses a Q index beyond r");
    for (int k = 1; k <= ctx.r(); ++k)
      if (m.Q(k) < 0) throw std::invalid_argument("Q exponents must be non-negative");
  }
  s.terms_ = std::move(terms);
  s.canonicalize();
  return s;
}

void ExactScalar::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (out.back().second == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

bool ExactScalar::is_one() const {
  return terms_.size() == 1 && terms_[0].first == Monomial{} && terms_[0].second == 1;
}

void ExactScalar::check_same(const ExactScalar& o) const {
  if (r_ != o.r_) throw ContextMismatch("scalars from different parameter contexts");
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

namespace {

template <class Combine>
std::vector<ExactScalar::Term> merge_terms(const std::vector<ExactScalar::Term>& a,
                                           const std::vector<ExactScalar::Term>& b, Combine op) {
  std::vector<ExactScalar::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, op(Integer(0), b[j].second));
      ++j;
    } else {
      Integer c = op(a[i].second, b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  check_same(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const Integer& x, const Integer& y) { return Integer(x + y); });
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  check_same(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const Integer& x, const Integer& y) { return Integer(x - y); });
  return *this;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  a.check_same(b);
  ExactScalar s(a.context());
  if (a.is_zero() || b.is_zero()) return s;
  s.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) s.terms_.emplace_back(ma * mb, ca * cb);
  s.canonicalize();
  return s;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  *this = *this * o;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

ExactScalar& ExactScalar::shift_q(int e) {
  for (auto& t : terms_) {
    int v = t.first.e[0] + e;
    if (v > INT16_MAX || v < INT16_MIN) throw std::overflow_error("q exponent overflow");
    t.first.e[0] = static_cast<std::int16_t>(v);
  }
  return *this;
}

bool ExactScalar::operator==(const ExactScalar& o) const {
  check_same(o);
  return terms_ == o.terms_;
}

bool ExactScalar::operator<(const ExactScalar& o) const {
  if (r_ != o.r_) return r_ < o.r_;
  return terms_ < o.terms_;
}

Rational specialize(const ExactScalar& a, const Specialization& s) {
  return Specializer(s, a.r())(a);
}

Specializer::Specializer(const Specialization& s, int r) : s_(s), r_(r) {
  if (static_cast<int>(s.Q.size()) != r)
    throw ArityError("specialization has " + std::to_string(s.Q.size()) + " Q-values, expected " +
                     std::to_string(r));
  if (s.q == 0) throw std::domain_error("q must specialize to a nonzero value");
  powers_.resize(static_cast<std::size_t>(r) + 1);
}

const Rational& Specializer::power(int slot, int e) const {
  auto& cache = powers_[static_cast<std::size_t>(slot)];
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  Rational base = slot == 0 ? s_.q : s_.Q[static_cast<std::size_t>(slot - 1)];
  if (e < 0) base = Rational(1) / base;
  Rational v = 1;
  for (int i = 0; i < std::abs(e); ++i) v *= base;
  return cache.emplace(e, std::move(v)).first->second;
}

Rational Specializer::operator()(const ExactScalar& a) const {
  if (a.r() != r_) throw ArityError("scalar and specialization disagree on the parameter count");
  Rational sum = 0;
  for (const auto& [m, c] : a.terms()) {
    Rational t = Rational(c);
    for (int k = 0; k <= r_; ++k)
      if (m.e[static_cast<std::size_t>(k)] != 0) t *= power(k, m.e[static_cast<std::size_t>(k)]);
    sum += t;
  }
  return sum;
}

Specialization random_specialization(int r, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> num(-50, 49);
  std::uniform_int_distribution<int> den(1, 20);
  auto draw = [&] {
    int p = num(gen);
    if (p >= 0) ++p;  // skip zero
    return Rational(p, den(gen));
  };
  Specialization s;
  std::set<Rational> used;
  do {
    s.q = draw();
  } while (s.q * s.q == 1);
  used.insert(s.q);
  while (static_cast<int>(s.Q.size()) < r) {
    Rational v = draw();
    if (used.insert(v).second) s.Q.push_back(v);
  }
  return s;
}

}  // namespace qschur
