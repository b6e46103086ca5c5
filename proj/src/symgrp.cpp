#include "qschur/symgrp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qschur/ring.hpp"

namespace qschur {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int v : img_) {
    if (v < 1 || v > n() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n()));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation w;
  w.img_.resize(static_cast<std::size_t>(n));
  std::iota(w.img_.begin(), w.img_.end(), 1);
  return w;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("simple transposition index out of range");
  Permutation w = identity(n);
  std::swap(w.img_[static_cast<std::size_t>(i - 1)], w.img_[static_cast<std::size_t>(i)]);
  return w;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  Permutation w = identity(n);
  for (int i : word) w = w * simple(n, i);
  return w;
}

Permutation Permutation::operator*(const Permutation& v) const {
  if (v.n() != n()) throw ArityError("permutations of different degree");
  Permutation w;
  w.img_.resize(img_.size());
  for (std::size_t p = 0; p < img_.size(); ++p) w.img_[p] = v(img_[p]);
  return w;
}

Permutation Permutation::inverse() const {
  Permutation w;
  w.img_.resize(img_.size());
  for (std::size_t p = 0; p < img_.size(); ++p) w.img_[static_cast<std::size_t>(img_[p] - 1)] = static_cast<int>(p) + 1;
  return w;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool Permutation::right_descent(int i) const {
  // w s_i swaps the values i and i+1
  auto pi = std::find(img_.begin(), img_.end(), i);
  auto pj = std::find(img_.begin(), img_.end(), i + 1);
  return pj < pi;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  for (;;) {
    int i = 1;
    while (i < n() && !w.left_descent(i)) ++i;
    if (i >= n()) break;
    word.push_back(i);
    std::swap(w.img_[static_cast<std::size_t>(i - 1)], w.img_[static_cast<std::size_t>(i)]);
  }
  return word;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

std::size_t perm_rank(const Permutation& w) {
  const int n = w.n();
  std::size_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++smaller;
    rank += static_cast<std::size_t>(smaller) * factorial(n - i);
  }
  return rank;
}

Permutation perm_unrank(int n, std::size_t k) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> img;
  for (int i = n; i >= 1; --i) {
    std::size_t f = factorial(i - 1);
    std::size_t d = k / f;
    k %= f;
    img.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation(img);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

CompositionBlocks::CompositionBlocks(std::vector<int> parts) : parts_(std::move(parts)) {
  bounds_.push_back(0);
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
    bounds_.push_back(bounds_.back() + p);
  }
}

int CompositionBlocks::block_of(int p) const {
  for (std::size_t b = 1; b < bounds_.size(); ++b)
    if (p <= bounds_[b]) return static_cast<int>(b) - 1;
  throw std::out_of_range("point outside the composition");
}

bool CompositionBlocks::contains(const Permutation& w) const {
  if (w.n() != n()) throw ArityError("permutation degree does not match the composition");
  for (int p = 1; p <= n(); ++p)
    if (block_of(p) != block_of(w(p))) return false;
  return true;
}

std::vector<Permutation> young_subgroup(const CompositionBlocks& b) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(b.n()))
    if (b.contains(w)) out.push_back(w);
  return out;
}

bool is_min_coset_rep(const CompositionBlocks& b, const Permutation& d) {
  // d is minimal in S_b d iff it increases on every block
  for (int p = 1; p < b.n(); ++p)
    if (b.block_of(p) == b.block_of(p + 1) && d(p) > d(p + 1)) return false;
  return true;
}

std::vector<Permutation> coset_reps_min(const CompositionBlocks& b) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(b.n()))
    if (is_min_coset_rep(b, w)) out.push_back(w);
  return out;
}

std::vector<Permutation> left_coset_reps_min(const CompositionBlocks& b) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(b.n()))
    if (is_min_coset_rep(b, w.inverse())) out.push_back(w);
  return out;
}

DoubleCoset double_coset_of(const CompositionBlocks& lambda, const Permutation& w, const CompositionBlocks& mu) {
  std::set<Permutation> elems;
  const auto sl = young_subgroup(lambda);
  const auto sm = young_subgroup(mu);
  for (auto& u : sl)
    for (auto& v : sm) elems.insert(u * w * v);
  DoubleCoset dc;
  dc.elements.assign(elems.begin(), elems.end());
  dc.rep = *std::min_element(dc.elements.begin(), dc.elements.end(), [](const Permutation& a, const Permutation& b) {
    return a.length() < b.length();
  });
  return dc;
}

std::vector<DoubleCoset> double_cosets(const CompositionBlocks& lambda, const CompositionBlocks& mu) {
  if (lambda.n() != mu.n()) throw ArityError("compositions of different sizes");
  std::vector<DoubleCoset> out;
  std::set<Permutation> covered;
  for (auto& w : all_permutations(lambda.n())) {
    if (covered.count(w)) continue;
    DoubleCoset dc = double_coset_of(lambda, w, mu);
    covered.insert(dc.elements.begin(), dc.elements.end());
    out.push_back(std::move(dc));
  }
  std::sort(out.begin(), out.end(), [](const DoubleCoset& a, const DoubleCoset& b) { return a.rep < b.rep; });
  return out;
}

}  // namespace qschur
