#include "qschur/linalg.hpp"

#include <utility>

namespace qschur {

using Eigen::Index;

std::size_t rank_exact(IntegerMatrix m) {
  const Index rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  Index rank = 0;
  for (Index col = 0; col < cols && rank < rows; ++col) {
    Index p = rank;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) m.row(p).swap(m.row(rank));
    const Integer pivot = m(rank, col);
    for (Index i = rank + 1; i < rows; ++i) {
      const Integer f = m(i, col);
      for (Index j = col + 1; j < cols; ++j) {
        Integer v = pivot * m(i, j) - f * m(rank, j);
        m(i, j) = v / prev;  // exact by Sylvester's identity
      }
      m(i, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

std::size_t rank_exact(const RationalMatrix& m) {
  IntegerMatrix z(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Index j = 0; j < m.cols(); ++j) {
      const Integer d = boost::multiprecision::denominator(m(i, j));
      l = boost::multiprecision::lcm(l, d);
    }
    for (Index j = 0; j < m.cols(); ++j)
      z(i, j) = boost::multiprecision::numerator(m(i, j)) * (l / boost::multiprecision::denominator(m(i, j)));
  }
  return rank_exact(std::move(z));
}

RationalMatrix rref(RationalMatrix m, std::vector<Index>* pivots) {
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j)
      if (m(row, j) != 0) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (Index j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return m;
}

RationalMatrix nullspace(const RationalMatrix& m) {
  std::vector<Index> piv;
  RationalMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  const Index nfree = m.cols() - static_cast<Index>(piv.size());
  RationalMatrix ns = RationalMatrix::Zero(m.cols(), nfree);
  Index k = 0;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    ns(f, k) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) ns(piv[i], k) = -r(static_cast<Index>(i), f);
    ++k;
  }
  return ns;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw ArityError("right-hand side length does not match the row count");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Index> piv;
  RationalMatrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  RationalVector x = RationalVector::Zero(a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x(piv[i]) = r(static_cast<Index>(i), a.cols());
  return x;
}

RationalVector RowSpace::reduce(RationalVector v) const {
  if (v.size() != dim_) throw ArityError("vector length does not match the row space");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v(pivots_[i]);
    if (f == 0) continue;
    const RationalVector& row = rows_[i];
    for (Index j = pivots_[i]; j < dim_; ++j)
      if (row(j) != 0) v(j) -= f * row(j);
  }
  return v;
}

bool RowSpace::contains(const RationalVector& v) const { return reduce(v).isZero(); }

bool RowSpace::add(const RationalVector& v) {
  RationalVector w = reduce(v);
  Index p = 0;
  while (p < dim_ && w(p) == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = Rational(1) / w(p);
  for (Index j = p; j < dim_; ++j)
    if (w(j) != 0) w(j) *= inv;
  // keep existing rows reduced against the new pivot
  for (auto& row : rows_) {
    const Rational f = row(p);
    if (f == 0) continue;
    for (Index j = p; j < dim_; ++j)
      if (w(j) != 0) row(j) -= f * w(j);
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

RationalMatrix RowSpace::basis() const {
  RationalMatrix b(static_cast<Index>(rows_.size()), dim_);
  for (std::size_t i = 0; i < rows_.size(); ++i) b.row(static_cast<Index>(i)) = rows_[i].transpose();
  return b;
}

}  // namespace qschur
