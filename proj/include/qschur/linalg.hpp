// Exact linear algebra over the rationals on Eigen dense types.
#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "qschur/ring.hpp"

namespace qschur {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank_exact(const RationalMatrix& m);
std::size_t rank_exact(IntegerMatrix m);

/// Reduced row echelon form; pivot columns are appended to *pivots if given.
RationalMatrix rref(RationalMatrix m, std::vector<Eigen::Index>* pivots = nullptr);

/// Columns form a basis of {x : m x = 0}.
RationalMatrix nullspace(const RationalMatrix& m);

/// Some x with a x = b, or nothing when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

/// Incrementally maintained row space, kept in reduced echelon form.
class RowSpace {
 public:
  explicit RowSpace(Eigen::Index dim) : dim_(dim) {}

  Eigen::Index dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Adds v; returns true when the rank grew.
  bool add(const RationalVector& v);
  bool contains(const RationalVector& v) const;
  /// v minus its projection onto the pivot coordinates.
  RationalVector reduce(RationalVector v) const;
  RationalMatrix basis() const;

 private:
  Eigen::Index dim_;
  std::vector<RationalVector> rows_;  // pivot entry normalized to 1
  std::vector<Eigen::Index> pivots_;
};

}  // namespace qschur
