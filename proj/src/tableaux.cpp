#include "qschur/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qschur/ring.hpp"

namespace qschur {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

bool is_partition(const Composition& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return true;
}

int part(const Composition& p, int i) {  // 1-based, zero past the end
  return i >= 1 && i <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i - 1)] : 0;
}

}  // namespace

// ---------------------------------------------------------------- multicompositions

int Multicomposition::size() const {
  int n = 0;
  for (auto& c : comp) n += std::accumulate(c.begin(), c.end(), 0);
  return n;
}

int Multicomposition::size(int k) const {
  const auto& c = comp.at(static_cast<std::size_t>(k - 1));
  return std::accumulate(c.begin(), c.end(), 0);
}

std::vector<int> Multicomposition::bounds() const {
  std::vector<int> m;
  for (auto& c : comp) m.push_back(static_cast<int>(c.size()));
  return m;
}

bool Multicomposition::is_multipartition() const {
  return std::all_of(comp.begin(), comp.end(), is_partition);
}

Composition Multicomposition::bar() const {
  Composition b;
  for (auto& c : comp) b.insert(b.end(), c.begin(), c.end());
  return b;
}

std::vector<int> Multicomposition::bracket() const {
  std::vector<int> a{0};
  for (int k = 1; k <= r(); ++k) a.push_back(a.back() + size(k));
  return a;
}

Multicomposition Multicomposition::with_bounds(const std::vector<int>& m) const {
  if (m.size() != comp.size()) throw ArityError("bounds do not match the number of components");
  Multicomposition out = *this;
  for (std::size_t k = 0; k < m.size(); ++k) {
    auto& c = out.comp[k];
    const auto len = static_cast<std::size_t>(m[k]);
    while (c.size() > len) {
      if (c.back() != 0) throw std::invalid_argument("component " + std::to_string(k + 1) + " exceeds its bound");
      c.pop_back();
    }
    c.resize(len, 0);
  }
  return out;
}

Multicomposition Multicomposition::trimmed() const {
  Multicomposition out = *this;
  for (auto& c : out.comp)
    while (!c.empty() && c.back() == 0) c.pop_back();
  return out;
}

std::string Multicomposition::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < comp.size(); ++k) {
    if (k) s += ',';
    s += join_ints(comp[k]);
  }
  return s + "]";
}

int MultiShape::total_rows() const { return std::accumulate(m.begin(), m.end(), 0); }

std::vector<Multicomposition> enumerate_multicompositions(const MultiShape& s) {
  const int cells = s.total_rows();
  std::vector<Multicomposition> out;
  std::vector<int> flat(static_cast<std::size_t>(cells), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == cells - 1 || cells == 0) {
      if (cells == 0) {
        if (left == 0) out.emplace_back(std::vector<Composition>(s.m.size()));
        return;
      }
      flat[static_cast<std::size_t>(pos)] = left;
      Multicomposition mc;
      std::size_t at = 0;
      for (int len : s.m) {
        mc.comp.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(at),
                             flat.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(len)));
        at += static_cast<std::size_t>(len);
      }
      out.push_back(std::move(mc));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      flat[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, s.n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multipartition> enumerate_multipartitions(const MultiShape& s) {
  std::vector<Multipartition> out;
  for (auto& mc : enumerate_multicompositions(s))
    if (mc.is_multipartition()) out.push_back(mc);
  return out;
}

std::size_t multicomposition_count(const MultiShape& s) {
  // C(n + M - 1, M - 1)
  const long M = s.total_rows();
  if (M == 0) return s.n == 0 ? 1 : 0;
  unsigned long long c = 1;
  for (long i = 1; i <= M - 1; ++i) c = c * static_cast<unsigned long long>(s.n + i) / static_cast<unsigned long long>(i);
  return static_cast<std::size_t>(c);
}

Composition conjugate(const Composition& p) {
  const int len = std::max(part(p, 1), 1);
  Composition c(static_cast<std::size_t>(len), 0);
  for (int i = 1; i <= len; ++i)
    for (int v : p)
      if (v >= i) ++c[static_cast<std::size_t>(i - 1)];
  return c;
}

Multipartition dual(const Multipartition& lambda) {
  if (!lambda.is_multipartition()) throw std::invalid_argument("dual needs a multipartition");
  Multipartition d;
  for (auto it = lambda.comp.rbegin(); it != lambda.comp.rend(); ++it) d.comp.push_back(conjugate(*it));
  return d;
}

bool composition_dominated(const Composition& a, const Composition& b) {
  const int sa = std::accumulate(a.begin(), a.end(), 0);
  const int sb = std::accumulate(b.begin(), b.end(), 0);
  if (sa != sb) throw ArityError("compositions of different sizes are incomparable");
  const std::size_t len = std::max(a.size(), b.size());
  int pa = 0, pb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    pa += i < a.size() ? a[i] : 0;
    pb += i < b.size() ? b[i] : 0;
    if (pa > pb) return false;
  }
  return true;
}

bool multipartition_dominates(const Multicomposition& a, const Multicomposition& b) {
  if (a.bounds() != b.bounds() || a.size() != b.size())
    throw ArityError("multicompositions with different bounds or sizes are incomparable");
  int pa = 0, pb = 0;
  for (std::size_t l = 0; l < a.comp.size(); ++l)
    for (std::size_t j = 0; j < a.comp[l].size(); ++j) {
      pa += a.comp[l][j];
      pb += b.comp[l][j];
      if (pa < pb) return false;
    }
  return true;
}

bool bracket_leq(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw ArityError("bracket vectors of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// ---------------------------------------------------------------- numeric tableaux

std::vector<Box> boxes(const Multicomposition& shape) {
  std::vector<Box> out;
  for (int c = 1; c <= shape.r(); ++c) {
    const auto& comp = shape.comp[static_cast<std::size_t>(c - 1)];
    for (int a = 1; a <= static_cast<int>(comp.size()); ++a)
      for (int b = 1; b <= comp[static_cast<std::size_t>(a - 1)]; ++b) out.push_back({a, b, c});
  }
  return out;
}

namespace {

template <class T>
std::vector<std::vector<std::vector<T>>> empty_filling(const Multicomposition& shape) {
  std::vector<std::vector<std::vector<T>>> e(shape.comp.size());
  for (std::size_t c = 0; c < shape.comp.size(); ++c)
    for (int len : shape.comp[c]) e[c].emplace_back(static_cast<std::size_t>(len));
  return e;
}

}  // namespace

int NumericTableau::at(const Box& x) const {
  return entries[static_cast<std::size_t>(x.c - 1)][static_cast<std::size_t>(x.a - 1)][static_cast<std::size_t>(x.b - 1)];
}

NumericTableau NumericTableau::act(const Permutation& w) const {
  if (w.n() != shape.size()) throw ArityError("permutation degree does not match the tableau");
  NumericTableau t = *this;
  for (auto& comp : t.entries)
    for (auto& row : comp)
      for (auto& e : row) e = w(e);
  return t;
}

std::vector<std::vector<int>> NumericTableau::rows() const {
  std::vector<std::vector<int>> out;
  for (auto& comp : entries)
    for (auto& row : comp) out.push_back(row);
  return out;
}

std::vector<std::vector<int>> NumericTableau::columns() const {
  auto rs = rows();
  std::size_t width = 0;
  for (auto& r : rs) width = std::max(width, r.size());
  std::vector<std::vector<int>> cols(width);
  for (auto& r : rs)
    for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
  return cols;
}

std::string NumericTableau::str() const {
  std::string s = "(";
  for (std::size_t c = 0; c < entries.size(); ++c) {
    if (c) s += ',';
    s += '[';
    bool first = true;
    for (auto& row : entries[c]) {
      if (row.empty()) continue;
      if (!first) s += ',';
      first = false;
      s += join_ints(row);
    }
    s += ']';
  }
  return s + ")";
}

NumericTableau tableau_sup(const Multicomposition& lambda) {
  NumericTableau t{lambda, empty_filling<int>(lambda)};
  int next = 1;
  for (auto& comp : t.entries)
    for (auto& row : comp)
      for (auto& e : row) e = next++;
  return t;
}

NumericTableau tableau_sub(const Multicomposition& lambda) {
  NumericTableau t{lambda, empty_filling<int>(lambda)};
  int next = 1;
  for (int c = lambda.r(); c >= 1; --c) {
    auto& comp = t.entries[static_cast<std::size_t>(c - 1)];
    std::size_t width = 0;
    for (auto& row : comp) width = std::max(width, row.size());
    for (std::size_t j = 0; j < width; ++j)
      for (auto& row : comp)
        if (j < row.size()) row[j] = next++;
  }
  return t;
}

Permutation w_lambda(const Multicomposition& lambda) {
  const NumericTableau sup = tableau_sup(lambda), sub = tableau_sub(lambda);
  std::vector<int> img(static_cast<std::size_t>(lambda.size()));
  for (const Box& x : boxes(lambda)) img[static_cast<std::size_t>(sup.at(x) - 1)] = sub.at(x);
  return Permutation(img);
}

std::vector<Permutation> w_lambda_factors(const Multicomposition& lambda) {
  const int n = lambda.size();
  const NumericTableau sup = tableau_sup(lambda);
  std::vector<Permutation> out;
  for (int c = 1; c <= lambda.r(); ++c) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    const auto& comp = lambda.comp[static_cast<std::size_t>(c - 1)];
    // column reading of component c, offset to the block of t^λ
    int start = 1;
    for (int k = 1; k < c; ++k) start += lambda.size(k);
    int next = start;
    const int width = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end());
    for (int j = 1; j <= width; ++j)
      for (int a = 1; a <= static_cast<int>(comp.size()); ++a)
        if (comp[static_cast<std::size_t>(a - 1)] >= j) img[static_cast<std::size_t>(sup.at({a, j, c}) - 1)] = next++;
    out.emplace_back(img);
  }
  return out;
}

Permutation w_bracket(const std::vector<int>& a) {
  const int n = a.back();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (std::size_t k = 1; k < a.size(); ++k)
    for (int i = a[k - 1] + 1; i <= a[k]; ++i) img[static_cast<std::size_t>(i - 1)] = i - a[k - 1] + (n - a[k]);
  return Permutation(img);
}

namespace {

std::vector<Permutation> stabilizer(const std::vector<std::vector<int>>& groups, int n) {
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (int e : groups[g]) owner[static_cast<std::size_t>(e)] = static_cast<int>(g);
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n)) {
    bool ok = true;
    for (int p = 1; p <= n && ok; ++p) ok = owner[static_cast<std::size_t>(p)] == owner[static_cast<std::size_t>(w(p))];
    if (ok) out.push_back(w);
  }
  return out;
}

}  // namespace

std::vector<Permutation> row_stabilizer(const NumericTableau& t) { return stabilizer(t.rows(), t.shape.size()); }
std::vector<Permutation> column_stabilizer(const NumericTableau& t) { return stabilizer(t.columns(), t.shape.size()); }

ChiMatrix chi(const NumericTableau& t1, const NumericTableau& t2) {
  const int n = t1.shape.size();
  if (t2.shape.size() != n) throw ArityError("chi needs tableaux of the same size");
  const auto rows = t1.rows();
  const auto cols = t2.columns();
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1), col_of(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int e : rows[i]) row_of[static_cast<std::size_t>(e)] = static_cast<int>(i) + 1;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int e : cols[j]) col_of[static_cast<std::size_t>(e)] = static_cast<int>(j) + 1;
  ChiMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int e = 1; e <= n; ++e)
    for (int i = row_of[static_cast<std::size_t>(e)]; i <= n; ++i)
      for (int j = col_of[static_cast<std::size_t>(e)]; j <= n; ++j) ++m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  return m;
}

bool chi_geq(const ChiMatrix& a, const ChiMatrix& b) {
  if (a.size() != b.size()) throw ArityError("chi matrices of different sizes");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] < b[i][j]) return false;
  return true;
}

bool chi_greater(const ChiMatrix& a, const ChiMatrix& b) { return chi_geq(a, b) && a != b; }

// ---------------------------------------------------------------- typed tableaux

Symbol TypedTableau::at(const Box& x) const {
  return entries[static_cast<std::size_t>(x.c - 1)][static_cast<std::size_t>(x.a - 1)][static_cast<std::size_t>(x.b - 1)];
}

Symbol& TypedTableau::at(const Box& x) {
  return entries[static_cast<std::size_t>(x.c - 1)][static_cast<std::size_t>(x.a - 1)][static_cast<std::size_t>(x.b - 1)];
}

Multicomposition TypedTableau::type(const std::vector<int>& m) const {
  Multicomposition mu;
  for (int len : m) mu.comp.emplace_back(static_cast<std::size_t>(len), 0);
  for (const Box& x : boxes(shape)) {
    const Symbol s = at(x);
    if (s.s < 1 || s.s > static_cast<int>(m.size()) || s.i < 1 || s.i > m[static_cast<std::size_t>(s.s - 1)])
      throw std::invalid_argument("tableau entry out of bounds");
    ++mu.comp[static_cast<std::size_t>(s.s - 1)][static_cast<std::size_t>(s.i - 1)];
  }
  return mu;
}

bool TypedTableau::is_semistandard(const std::vector<int>& m) const {
  if (shape.r() != static_cast<int>(m.size())) return false;
  for (const Box& x : boxes(shape)) {
    const Symbol s = at(x);
    if (s.s < 1 || s.s > static_cast<int>(m.size()) || s.i < 1 || s.i > m[static_cast<std::size_t>(s.s - 1)]) return false;
    if (s.s < x.c) return false;
    if (x.b > 1 && at({x.a, x.b - 1, x.c}) > s) return false;
    if (x.a > 1 && !(at({x.a - 1, x.b, x.c}) < s)) return false;
  }
  return true;
}

std::string TypedTableau::str() const {
  std::string s = "(";
  for (std::size_t c = 0; c < entries.size(); ++c) {
    if (c) s += ',';
    s += '[';
    bool first_row = true;
    for (auto& row : entries[c]) {
      if (row.empty()) continue;
      if (!first_row) s += ',';
      first_row = false;
      s += '[';
      for (std::size_t b = 0; b < row.size(); ++b) {
        if (b) s += ',';
        s += "(" + std::to_string(row[b].i) + "," + std::to_string(row[b].s) + ")";
      }
      s += ']';
    }
    s += ']';
  }
  return s + ")";
}

int flatten_symbol(const Symbol& x, const std::vector<int>& m) {
  int v = x.i;
  for (int k = 1; k < x.s; ++k) v += m[static_cast<std::size_t>(k - 1)];
  return v;
}

FlatTableau bar_tableau(const TypedTableau& t, const std::vector<int>& m) {
  FlatTableau f;
  f.shape = t.shape.bar();
  for (auto& comp : t.entries)
    for (auto& row : comp) {
      std::vector<int> fr;
      for (const Symbol& s : row) fr.push_back(flatten_symbol(s, m));
      f.rows.push_back(std::move(fr));
    }
  return f;
}

std::vector<TypedTableau> enumerate_ssyt(const Multipartition& lambda, const std::vector<int>& m,
                                         const std::optional<Multicomposition>& type) {
  if (!lambda.is_multipartition()) throw std::invalid_argument("shape must be a multipartition");
  if (lambda.r() != static_cast<int>(m.size())) throw ArityError("shape and bounds disagree on r");
  std::vector<Symbol> alphabet;
  for (int s = 1; s <= static_cast<int>(m.size()); ++s)
    for (int i = 1; i <= m[static_cast<std::size_t>(s - 1)]; ++i) alphabet.push_back({i, s});
  std::vector<int> remaining;
  if (type) {
    if (type->bounds() != m) throw ArityError("type bounds do not match m");
    if (type->size() != lambda.size()) return {};
    for (auto& c : type->comp) remaining.insert(remaining.end(), c.begin(), c.end());
  }
  const auto bx = boxes(lambda);
  TypedTableau t{lambda, empty_filling<Symbol>(lambda)};
  std::vector<TypedTableau> out;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == bx.size()) {
      out.push_back(t);
      return;
    }
    const Box x = bx[pos];
    for (std::size_t idx = 0; idx < alphabet.size(); ++idx) {
      const Symbol s = alphabet[idx];
      if (s.s < x.c) continue;
      if (x.b > 1 && t.at({x.a, x.b - 1, x.c}) > s) continue;
      if (x.a > 1 && !(t.at({x.a - 1, x.b, x.c}) < s)) continue;
      if (type && remaining[idx] == 0) continue;
      if (type) --remaining[idx];
      t.at(x) = s;
      rec(pos + 1);
      if (type) ++remaining[idx];
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

TypedTableau superstandard(const Multipartition& lambda) {
  TypedTableau t{lambda, empty_filling<Symbol>(lambda)};
  for (const Box& x : boxes(lambda)) t.at(x) = {x.a, x.c};
  return t;
}

Permutation w_S(const Permutation& w, const Composition& shape, const std::vector<std::vector<int>>& s_rows,
                const Composition& type) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  if (std::accumulate(type.begin(), type.end(), 0) != n || w.n() != n) throw ArityError("shape, type and w sizes disagree");
  if (s_rows.size() != shape.size()) throw std::invalid_argument("tableau rows do not match the shape");
  std::vector<std::vector<int>> rows_of(type.size());
  int next = 1;
  for (std::size_t a = 0; a < shape.size(); ++a) {
    if (static_cast<int>(s_rows[a].size()) != shape[a]) throw std::invalid_argument("tableau rows do not match the shape");
    for (int b = 0; b < shape[a]; ++b) {
      const int label = s_rows[a][static_cast<std::size_t>(b)];
      if (label < 1 || label > static_cast<int>(type.size())) throw std::invalid_argument("tableau entry out of range");
      rows_of[static_cast<std::size_t>(label - 1)].push_back(w(next++));
    }
  }
  std::vector<int> img;
  for (std::size_t a = 0; a < type.size(); ++a) {
    if (static_cast<int>(rows_of[a].size()) != type[a]) throw std::invalid_argument("tableau content does not match the type");
    std::sort(rows_of[a].begin(), rows_of[a].end());
    img.insert(img.end(), rows_of[a].begin(), rows_of[a].end());
  }
  return Permutation(img);
}

Permutation one_A(const TypedTableau& a, const std::vector<int>& m) {
  const FlatTableau f = bar_tableau(a, m);
  return w_S(Permutation::identity(a.shape.size()), f.shape, f.rows, a.type(m).bar());
}

// ---------------------------------------------------------------- nodes

std::string Node::str() const {
  return "[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]";
}

bool node_succ(const Node& x, const Node& y) { return x.k < y.k || (x.k == y.k && x.i < y.i); }

namespace {

void sort_ascending(std::vector<Node>& v) {
  std::sort(v.begin(), v.end(), [](const Node& x, const Node& y) { return node_succ(y, x); });
}

}  // namespace

std::vector<Node> removable_nodes(const Multipartition& lambda) {
  if (!lambda.is_multipartition()) throw std::invalid_argument("removable nodes need a multipartition");
  std::vector<Node> out;
  for (int k = 1; k <= lambda.r(); ++k) {
    const auto& p = lambda.comp[static_cast<std::size_t>(k - 1)];
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
      if (part(p, i) > 0 && part(p, i) > part(p, i + 1)) out.push_back({i, part(p, i), k});
  }
  sort_ascending(out);
  return out;
}

std::vector<Node> addable_nodes(const Multipartition& lambda) {
  if (!lambda.is_multipartition()) throw std::invalid_argument("addable nodes need a multipartition");
  std::vector<Node> out;
  for (int k = 1; k <= lambda.r(); ++k) {
    const auto& p = lambda.comp[static_cast<std::size_t>(k - 1)];
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
      if (i == 1 || part(p, i - 1) > part(p, i)) out.push_back({i, part(p, i) + 1, k});
  }
  sort_ascending(out);
  return out;
}

Multipartition remove_node(const Multipartition& lambda, const Node& x) {
  Multipartition out = lambda;
  auto& p = out.comp.at(static_cast<std::size_t>(x.k - 1));
  if (x.i < 1 || x.i > static_cast<int>(p.size()) || p[static_cast<std::size_t>(x.i - 1)] != x.j)
    throw std::invalid_argument("node " + x.str() + " is not at the end of its row");
  --p[static_cast<std::size_t>(x.i - 1)];
  if (!out.is_multipartition()) throw std::invalid_argument("node " + x.str() + " is not removable");
  return out;
}

TypedTableau t_lambda_x(const Multipartition& lambda, const Node& x, const std::vector<int>& m) {
  const auto rem = removable_nodes(lambda);
  if (std::find(rem.begin(), rem.end(), x) == rem.end()) throw std::invalid_argument("node " + x.str() + " is not removable");
  TypedTableau t = superstandard(lambda);
  t.at({x.i, x.j, x.k}) = {m.back(), static_cast<int>(m.size())};
  return t;
}

std::vector<int> shorten_last(const std::vector<int>& m) {
  std::vector<int> out = m;
  if (out.empty() || out.back() < 2) throw std::invalid_argument("last bound must be at least 2 to shorten");
  --out.back();
  return out;
}

Multicomposition gamma(const Multicomposition& lambda, const std::vector<int>& m) {
  if (lambda.bounds() != shorten_last(m)) throw ArityError("input is not over m'");
  Multicomposition out = lambda;
  out.comp.back().push_back(1);
  return out;
}

bool in_gamma_image(const Multicomposition& mu, const std::vector<int>& m) {
  return mu.bounds() == m && !mu.comp.empty() && mu.comp.back().back() == 1;
}

Multicomposition gamma_inverse(const Multicomposition& mu, const std::vector<int>& m) {
  if (!in_gamma_image(mu, m)) throw std::invalid_argument("weight is not in the image of gamma");
  Multicomposition out = mu;
  out.comp.back().pop_back();
  return out;
}

std::optional<std::pair<Node, TypedTableau>> strip_last_symbol(const TypedTableau& a, const std::vector<int>& m) {
  const Symbol last{m.back(), static_cast<int>(m.size())};
  std::optional<Box> where;
  for (const Box& x : boxes(a.shape)) {
    if (a.at(x) == last) {
      if (where) return std::nullopt;
      where = x;
    }
  }
  if (!where) return std::nullopt;
  const Node node{where->a, where->b, where->c};
  TypedTableau rest;
  try {
    // over m' the last row of component r must be empty
    rest.shape = remove_node(a.shape, node).with_bounds(shorten_last(m));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  rest.entries = a.entries;
  rest.entries[static_cast<std::size_t>(node.k - 1)][static_cast<std::size_t>(node.i - 1)].pop_back();
  rest.entries.back().resize(rest.shape.comp.back().size());
  return std::make_pair(node, rest);
}

ChiIdentityReport chi_identities(int n) {
  ChiIdentityReport rep;
  const auto group = all_permutations(n);
  std::vector<NumericTableau> tabs;
  for (const auto& lam : enumerate_multipartitions(MultiShape{{n}, n})) {
    const NumericTableau t = tableau_sup(lam.trimmed());
    for (const auto& d : group) tabs.push_back(t.act(d));
  }
  auto check = [&](const ChiMatrix& a, const ChiMatrix& b) {
    ++rep.checks;
    if (a != b) ++rep.failures;
  };
  for (const auto& t1 : tabs) {
    const auto rows = row_stabilizer(t1);
    for (const auto& t2 : tabs) {
      ++rep.pairs;
      const ChiMatrix base = chi(t1, t2);
      for (const auto& w : group) check(chi(t1.act(w), t2.act(w)), base);
      for (const auto& w : rows) check(chi(t1.act(w), t2), base);
      for (const auto& w : column_stabilizer(t2)) check(chi(t1, t2.act(w)), base);
    }
  }
  return rep;
}

}  // namespace qschur
