// Symmetric group combinatorics: permutations acting on the right of points.
#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace qschur {

/// Permutation of {1..n} in one-line notation. Products follow the right
/// action: (u*v)(p) = v(u(p)), so T_u T_v = T_{uv} whenever lengths add.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that images is a permutation of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The simple transposition s_i = (i, i+1), 1 <= i < n.
  static Permutation simple(int n, int i);
  /// s_{w[0]} * s_{w[1]} * ...
  static Permutation from_word(int n, const std::vector<int>& word);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int p) const { return img_[static_cast<std::size_t>(p - 1)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& v) const;
  Permutation inverse() const;
  int length() const;
  bool is_identity() const;
  /// l(s_i w) < l(w)
  bool left_descent(int i) const { return img_[static_cast<std::size_t>(i - 1)] > img_[static_cast<std::size_t>(i)]; }
  /// l(w s_i) < l(w)
  bool right_descent(int i) const;
  /// A reduced word j_1..j_k with w = s_{j_1} * ... * s_{j_k}.
  std::vector<int> reduced_word() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

  std::string str() const;  // "[2,3,1]"

 private:
  std::vector<int> img_;
};

/// Lexicographic rank of the one-line notation, in [0, n!).
std::size_t perm_rank(const Permutation& w);
Permutation perm_unrank(int n, std::size_t k);
std::size_t factorial(int n);

/// All permutations of 1..n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Composition of n cut into consecutive blocks; bounds() is (a_0=0, a_1, ...).
class CompositionBlocks {
 public:
  explicit CompositionBlocks(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  const std::vector<int>& bounds() const { return bounds_; }
  int n() const { return bounds_.back(); }
  /// Index of the block containing point p (blocks of size 0 are skipped).
  int block_of(int p) const;
  bool contains(const Permutation& w) const;  // w in the Young subgroup

 private:
  std::vector<int> parts_;
  std::vector<int> bounds_;
};

/// All elements of the Young subgroup, lexicographic order.
std::vector<Permutation> young_subgroup(const CompositionBlocks& b);

/// Minimal-length representatives of the right cosets S_b w, lexicographic.
std::vector<Permutation> coset_reps_min(const CompositionBlocks& b);
bool is_min_coset_rep(const CompositionBlocks& b, const Permutation& d);

/// Minimal-length representatives of the left cosets w S_b.
std::vector<Permutation> left_coset_reps_min(const CompositionBlocks& b);

struct DoubleCoset {
  Permutation rep;                    // unique element of minimal length
  std::vector<Permutation> elements;  // lexicographic
};

/// The double cosets S_lambda d S_mu, ordered by representative.
std::vector<DoubleCoset> double_cosets(const CompositionBlocks& lambda, const CompositionBlocks& mu);

/// The double coset containing w.
DoubleCoset double_coset_of(const CompositionBlocks& lambda, const Permutation& w, const CompositionBlocks& mu);

}  // namespace qschur
