// Multicompositions, multipartitions and tableaux.
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qschur/symgrp.hpp"

namespace qschur {

using Composition = std::vector<int>;

/// r-tuple of compositions; component k keeps all m_k entries, zeros included.
struct Multicomposition {
  std::vector<Composition> comp;

  Multicomposition() = default;
  explicit Multicomposition(std::vector<Composition> c) : comp(std::move(c)) {}

  int r() const { return static_cast<int>(comp.size()); }
  int size() const;                      // n
  int size(int k) const;                 // |component k|, 1-based k
  std::vector<int> bounds() const;       // m_k = component lengths
  bool is_multipartition() const;
  /// Concatenation of the components.
  Composition bar() const;
  /// [a_0 = 0, a_1, ..., a_r] with a_k the size of the first k components.
  std::vector<int> bracket() const;
  /// Component k padded or trimmed to length len (trimming drops zeros only).
  Multicomposition with_bounds(const std::vector<int>& m) const;
  Multicomposition trimmed() const;

  auto operator<=>(const Multicomposition&) const = default;
  bool operator==(const Multicomposition&) const = default;
  std::string str() const;  // [[3,1],[2,1],[2]]
};

using Multipartition = Multicomposition;

/// Component bounds m together with the size n.
struct MultiShape {
  std::vector<int> m;
  int n = 0;
  int r() const { return static_cast<int>(m.size()); }
  int total_rows() const;
};

/// All of Λ_{n,r}(m) in lexicographic order.
std::vector<Multicomposition> enumerate_multicompositions(const MultiShape& s);
/// The multipartitions among them.
std::vector<Multipartition> enumerate_multipartitions(const MultiShape& s);
/// C(n + M - 1, M - 1), M = Σ m_k.
std::size_t multicomposition_count(const MultiShape& s);

/// Conjugate partition of p, of length max(p_1, 1).
Composition conjugate(const Composition& p);
/// (λ^(r)', ..., λ^(1)')
Multipartition dual(const Multipartition& lambda);

/// a ⊴ b for compositions of the same size (shorter one zero-padded).
bool composition_dominated(const Composition& a, const Composition& b);
/// a ⊵ b in the multipartition order; requires equal bounds.
bool multipartition_dominates(const Multicomposition& a, const Multicomposition& b);
/// a ⪯ b componentwise on bracket vectors of equal length.
bool bracket_leq(const std::vector<int>& a, const std::vector<int>& b);

/// Box of a multi-diagram, all 1-based: row a, column b, component c.
struct Box {
  int a = 0, b = 0, c = 0;
  auto operator<=>(const Box&) const = default;
  bool operator==(const Box&) const = default;
};

/// Diagram boxes in reading order: component, then row, then column.
std::vector<Box> boxes(const Multicomposition& shape);

/// Filling of a diagram by 1..n; entries[c][a][b], 0-based indices.
struct NumericTableau {
  Multicomposition shape;
  std::vector<std::vector<std::vector<int>>> entries;

  int at(const Box& x) const;
  /// Replace every entry e by w(e).
  NumericTableau act(const Permutation& w) const;
  /// Rows of every component stacked in order (the barred one-component form).
  std::vector<std::vector<int>> rows() const;
  /// Columns of the barred form: column j collects the j-th entry of every row.
  std::vector<std::vector<int>> columns() const;
  bool operator==(const NumericTableau&) const = default;
  std::string str() const;
};

/// Row reading, first component first.
NumericTableau tableau_sup(const Multicomposition& lambda);
/// Column reading, last component first.
NumericTableau tableau_sub(const Multicomposition& lambda);

/// The permutation w with t^λ w = t_λ.
Permutation w_lambda(const Multicomposition& lambda);
/// Within-component factors w_(1), ..., w_(r) (each fixes points outside its block).
std::vector<Permutation> w_lambda_factors(const Multicomposition& lambda);
/// Block reversal for a bracket [a_0..a_r]: (a_{k-1}, a_k] moves to the end-aligned slot.
Permutation w_bracket(const std::vector<int>& a);

/// Row stabilizer and column stabilizer of a numeric tableau.
std::vector<Permutation> row_stabilizer(const NumericTableau& t);
std::vector<Permutation> column_stabilizer(const NumericTableau& t);

/// n x n matrix of |first i rows of t1 ∩ first j columns of t2|.
using ChiMatrix = std::vector<std::vector<int>>;
ChiMatrix chi(const NumericTableau& t1, const NumericTableau& t2);
bool chi_geq(const ChiMatrix& a, const ChiMatrix& b);
bool chi_greater(const ChiMatrix& a, const ChiMatrix& b);

struct ChiIdentityReport {
  std::size_t pairs = 0, checks = 0, failures = 0;
  bool ok() const { return failures == 0; }
};
/// Over all pairs (t1, t2) of one-component tableaux of size n:
/// χ(t1 w, t2 w) = χ(t1, t2) for w ∈ S_n; χ(t1 w, t2) = χ(t1, t2) for w in the
/// row stabilizer of t1 (S_λ when t1 = t^λ); χ(t1, t2 w) = χ(t1, t2) for w in the
/// column stabilizer of t2 (S_μ' when t2 = t_μ).
ChiIdentityReport chi_identities(int n);

/// Tableau entry (i, s): row index i of component s.
struct Symbol {
  int i = 1, s = 1;
  /// component-major order
  auto operator<=>(const Symbol& o) const {
    if (s != o.s) return s <=> o.s;
    return i <=> o.i;
  }
  bool operator==(const Symbol&) const = default;
};

/// Diagram of λ filled with symbols; entries[c][a][b], 0-based.
struct TypedTableau {
  Multipartition shape;
  std::vector<std::vector<std::vector<Symbol>>> entries;

  Symbol at(const Box& x) const;
  Symbol& at(const Box& x);
  /// Occurrence counts of each symbol as a multicomposition over m.
  Multicomposition type(const std::vector<int>& m) const;
  bool is_semistandard(const std::vector<int>& m) const;
  bool operator==(const TypedTableau&) const = default;
  auto operator<=>(const TypedTableau&) const = default;
  std::string str() const;
};

/// Entries flattened to i + m_1 + ... + m_{s-1}; the shape is flattened to bar.
struct FlatTableau {
  Composition shape;                       // bar of the original shape
  std::vector<std::vector<int>> rows;      // flattened entries
};
FlatTableau bar_tableau(const TypedTableau& t, const std::vector<int>& m);
int flatten_symbol(const Symbol& x, const std::vector<int>& m);

/// Semistandard λ-tableaux over m, optionally restricted to one type.
std::vector<TypedTableau> enumerate_ssyt(const Multipartition& lambda, const std::vector<int>& m,
                                         const std::optional<Multicomposition>& type = std::nullopt);

/// The tableau of shape λ and type λ with entry (a, c) in row a of component c.
TypedTableau superstandard(const Multipartition& lambda);

/// The coset representative w_S in D_type for a one-component tableau S of
/// shape `shape` (rows of symbols 1..k) and t^shape w; see w_S of the
/// row-filling rule: i lies in row a of t^type w_S iff S holds a where t^shape w holds i.
Permutation w_S(const Permutation& w, const Composition& shape, const std::vector<std::vector<int>>& s_rows,
                const Composition& type);
/// 1_A: w_S with w = identity applied to the flattened tableau; lies in D_{bar(type)}.
Permutation one_A(const TypedTableau& a, const std::vector<int>& m);

/// Node (i, j, k): row, column, component.
struct Node {
  int i = 0, j = 0, k = 0;
  auto operator<=>(const Node&) const = default;
  bool operator==(const Node&) const = default;
  std::string str() const;
};

/// x ≻ y: component smaller, or same component and row smaller.
bool node_succ(const Node& x, const Node& y);

/// Removable nodes listed so that later entries are ≻-greater (first is ≻-least).
std::vector<Node> removable_nodes(const Multipartition& lambda);
/// Addable nodes (rows bounded by the component lengths), same ordering.
std::vector<Node> addable_nodes(const Multipartition& lambda);
Multipartition remove_node(const Multipartition& lambda, const Node& x);

/// The tableau with (a, c) at (a, b, c) off x and (m_r, r) at x.
TypedTableau t_lambda_x(const Multipartition& lambda, const Node& x, const std::vector<int>& m);

/// m' = (m_1, ..., m_r - 1).
std::vector<int> shorten_last(const std::vector<int>& m);
/// Appends a final part 1 to component r: Λ_{n,r}(m') -> Λ_{n+1,r}(m).
Multicomposition gamma(const Multicomposition& lambda, const std::vector<int>& m);
bool in_gamma_image(const Multicomposition& mu, const std::vector<int>& m);
Multicomposition gamma_inverse(const Multicomposition& mu, const std::vector<int>& m);

/// Removes the unique (m_r, r) entry; returns the node that held it and the
/// remaining tableau (shape λ∖x). Nothing when the count of (m_r, r) is not one.
std::optional<std::pair<Node, TypedTableau>> strip_last_symbol(const TypedTableau& a, const std::vector<int>& m);

}  // namespace qschur
