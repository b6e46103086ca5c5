#include "qschur/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qschur {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError("expected an integer, got '" + s + "'");
  return v;
}

Integer parse_integer(const std::string& s) {
  if (s.empty()) throw ParseError("empty coefficient");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("bad coefficient '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad coefficient '" + s + "'");
  Integer v(s.substr(s[0] == '+' ? 1 : 0));
  return v;
}

// Splits on c at nesting depth zero of (), [].
std::vector<std::string> split_top(const std::string& s, char c) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets");
    if (ch == c && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets");
  out.push_back(cur);
  return out;
}

// One monomial term without sign handling: factors joined by '*'.
ExactScalar parse_scalar_term(const std::string& text, ScalarContext ctx) {
  Monomial m;
  Integer c(1);
  bool have_coeff = false;
  for (const std::string& raw : split_top(text, '*')) {
    const std::string f = strip(raw);
    if (f.empty()) throw ParseError("empty factor in '" + text + "'");
    if (f[0] == 'q') {
      const int e = f.size() == 1 ? 1 : (f[1] == '^' ? parse_int(f.substr(2)) : throw ParseError("bad factor " + f));
      m.e[0] = static_cast<std::int16_t>(m.e[0] + e);
    } else if (f[0] == 'Q') {
      const std::size_t caret = f.find('^');
      const int k = parse_int(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      const int e = caret == std::string::npos ? 1 : parse_int(f.substr(caret + 1));
      if (k < 1 || k > ctx.r()) throw ParseError("parameter index out of range in " + f);
      if (e < 0) throw ParseError("negative Q exponent in " + f);
      m.e[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(m.e[static_cast<std::size_t>(k)] + e);
    } else {
      if (have_coeff) throw ParseError("two coefficients in '" + text + "'");
      c = parse_integer(f);
      have_coeff = true;
    }
  }
  return ExactScalar::from_terms(ctx, {{m, c}});
}

std::string monomial_text(const Monomial& m, int r) {
  std::string s;
  if (m.q() != 0) s += "*q^" + std::to_string(m.q());
  for (int k = 1; k <= r; ++k)
    if (m.Q(k) != 0) s += "*Q" + std::to_string(k) + "^" + std::to_string(m.Q(k));
  return s;
}

template <class S>
std::string element_text(const AKElement<S>& e, const std::function<std::string(const S&)>& coeff_text) {
  if (e.is_zero()) return "0";
  const auto& alg = *e.algebra();
  std::string out;
  for (const auto& [idx, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    std::string ct = coeff_text(c);
    const bool compound = ct[0] == '-' || ct.find(" + ") != std::string::npos || ct.find(" - ") != std::string::npos ||
                          ct.find('/') != std::string::npos;
    if (compound) ct = "(" + ct + ")";
    const std::string label = alg.basis_label(idx);
    out += label.empty() ? ct : ct + "*" + label;
  }
  return out;
}

}  // namespace

std::string to_text(const ExactScalar& s) {
  if (s.is_zero()) return "0";
  // printed by Q-exponents first, then the q-exponent
  std::vector<std::pair<Monomial, Integer>> terms(s.terms().begin(), s.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
    for (int k = 1; k <= s.r(); ++k)
      if (x.first.e[static_cast<std::size_t>(k)] != y.first.e[static_cast<std::size_t>(k)])
        return x.first.e[static_cast<std::size_t>(k)] < y.first.e[static_cast<std::size_t>(k)];
    return x.first.e[0] < y.first.e[0];
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool neg = c < 0;
    const Integer a = neg ? Integer(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += a.str() + monomial_text(m, s.r());
  }
  return out;
}

ExactScalar parse_scalar(const std::string& text, ScalarContext ctx) {
  const std::string t = strip(text);
  if (t.empty()) throw ParseError("empty scalar");
  ExactScalar out(ctx);
  std::size_t pos = 0;
  bool neg = false;
  if (t[0] == '-' || t[0] == '+') {
    neg = t[0] == '-';
    pos = 1;
  }
  // terms are separated by " + " / " - " (a sign preceded by whitespace or following '^' is part of an exponent)
  std::string cur;
  auto flush = [&] {
    ExactScalar term = parse_scalar_term(strip(cur), ctx);
    out += neg ? -term : term;
    cur.clear();
  };
  for (; pos < t.size(); ++pos) {
    const char ch = t[pos];
    if ((ch == '+' || ch == '-') && pos > 0 && t[pos - 1] != '^' && !strip(cur).empty() && strip(cur).back() != '^' &&
        strip(cur).back() != '*') {
      flush();
      neg = ch == '-';
      continue;
    }
    cur += ch;
  }
  if (strip(cur).empty()) throw ParseError("dangling sign in '" + text + "'");
  flush();
  return out;
}

Json to_json(const ExactScalar& s) {
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) {
    Json Q = Json::array();
    for (int k = 1; k <= s.r(); ++k) Q.push_back(m.Q(k));
    terms.push_back({{"c", c.str()}, {"q", m.q()}, {"Q", Q}});
  }
  return {{"terms", terms}};
}

ExactScalar scalar_from_json(const Json& j, ScalarContext ctx) {
  try {
    std::vector<ExactScalar::Term> terms;
    for (const auto& t : j.at("terms")) {
      Monomial m;
      m.e[0] = static_cast<std::int16_t>(t.at("q").get<int>());
      const auto& Q = t.at("Q");
      if (static_cast<int>(Q.size()) != ctx.r()) throw ParseError("Q exponent list has the wrong length");
      for (int k = 1; k <= ctx.r(); ++k) {
        const int e = Q[static_cast<std::size_t>(k - 1)].get<int>();
        if (e < 0) throw ParseError("negative Q exponent");
        m.e[static_cast<std::size_t>(k)] = static_cast<std::int16_t>(e);
      }
      terms.emplace_back(m, parse_integer(t.at("c").get<std::string>()));
    }
    return ExactScalar::from_terms(ctx, std::move(terms));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad scalar JSON: ") + e.what());
  }
}

std::string to_text(const Rational& v) { return v.str(); }

std::string to_text(const ExactElement& e) {
  return element_text<ExactScalar>(e, [](const ExactScalar& s) { return to_text(s); });
}

std::string to_text(const SpecElement& e) {
  return element_text<Rational>(e, [](const Rational& s) { return to_text(s); });
}

ExactElement parse_element(const std::string& text, const std::shared_ptr<const ExactAlgebra>& alg) {
  const std::string t = strip(text);
  ExactElement out = alg->zero();
  if (t == "0") return out;
  ScalarContext ctx(alg->r());
  for (const std::string& raw : split_top(t, '+')) {
    const std::string term = strip(raw);
    if (term.empty()) throw ParseError("empty term in '" + text + "'");
    std::vector<int> c(static_cast<std::size_t>(alg->n()), 0);
    Permutation w = Permutation::identity(alg->n());
    std::string coeff;
    for (const std::string& rf : split_top(term, '*')) {
      const std::string f = strip(rf);
      if (f.size() >= 2 && f[0] == 'L' && std::isdigit(static_cast<unsigned char>(f[1]))) {
        const std::size_t caret = f.find('^');
        const int i = parse_int(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        const int e = caret == std::string::npos ? 1 : parse_int(f.substr(caret + 1));
        if (i < 1 || i > alg->n() || e < 0) throw ParseError("bad factor " + f);
        c[static_cast<std::size_t>(i - 1)] += e;
      } else if (f.size() >= 2 && f[0] == 'T' && f[1] == '[') {
        try {
          w = permutation_from_json(Json::parse(f.substr(1)));
        } catch (const Json::exception&) {
          throw ParseError("bad permutation " + f);
        }
        if (w.n() != alg->n()) throw ParseError("permutation degree does not match n");
      } else {
        if (!coeff.empty()) coeff += '*';
        coeff += f;
      }
    }
    if (coeff.size() >= 2 && coeff.front() == '(' && coeff.back() == ')') coeff = coeff.substr(1, coeff.size() - 2);
    const ExactScalar s = coeff.empty() ? ExactScalar::one(ctx) : parse_scalar(coeff, ctx);
    out += s * (alg->L_power(c) * alg->T(w));
  }
  return out;
}

Json to_json(const ExactElement& e) {
  const auto& alg = *e.algebra();
  Json terms = Json::array();
  for (const auto& [idx, c] : e.terms())
    terms.push_back({{"c", alg.exponents(idx)}, {"w", alg.perm(idx).images()}, {"coeff", to_json(c)}});
  return {{"n", alg.n()}, {"r", alg.r()}, {"terms", terms}};
}

ExactElement element_from_json(const Json& j, const std::shared_ptr<const ExactAlgebra>& alg) {
  try {
    if (j.at("n").get<int>() != alg->n() || j.at("r").get<int>() != alg->r())
      throw ContextMismatch("element JSON belongs to a different algebra");
    ExactElement::Terms terms;
    ScalarContext ctx(alg->r());
    for (const auto& t : j.at("terms")) {
      const auto c = t.at("c").get<std::vector<int>>();
      const Permutation w = permutation_from_json(t.at("w"));
      ExactScalar s = scalar_from_json(t.at("coeff"), ctx);
      if (s.is_zero()) continue;
      const std::uint32_t idx = alg->index(c, w);
      if (!terms.emplace(idx, std::move(s)).second) throw ParseError("repeated basis term");
    }
    return ExactElement(alg, std::move(terms));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad element JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(std::string("bad element JSON: ") + e.what());
  }
}

Json to_json(const Permutation& w) { return w.images(); }

Permutation permutation_from_json(const Json& j) {
  try {
    return Permutation(j.get<std::vector<int>>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad permutation: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Multicomposition& mu) { return mu.comp; }

Multicomposition multicomposition_from_json(const Json& j, const std::vector<int>* m) {
  Multicomposition mu;
  try {
    mu.comp = j.get<std::vector<Composition>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad multicomposition: ") + e.what());
  }
  for (const auto& c : mu.comp)
    for (int v : c)
      if (v < 0) throw ParseError("negative part");
  if (m) {
    if (mu.r() != static_cast<int>(m->size())) throw ParseError("multicomposition has the wrong number of components");
    try {
      mu = mu.with_bounds(*m);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return mu;
}

Multicomposition parse_multicomposition(const std::string& text, const std::vector<int>* m) {
  try {
    return multicomposition_from_json(Json::parse(text), m);
  } catch (const Json::exception& e) {
    throw ParseError("malformed shape '" + text + "': " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  try {
    return Json::parse(text).get<std::vector<int>>();
  } catch (const Json::exception& e) {
    throw ParseError("malformed list '" + text + "': " + e.what());
  }
}

Json to_json(const TypedTableau& t) {
  Json entries = Json::array();
  for (const auto& comp : t.entries) {
    Json c = Json::array();
    for (const auto& row : comp) {
      Json rj = Json::array();
      for (const Symbol& s : row) rj.push_back({s.i, s.s});
      c.push_back(rj);
    }
    while (!c.empty() && c.back().empty()) c.erase(c.size() - 1);
    entries.push_back(c);
  }
  return {{"shape", to_json(t.shape.trimmed())}, {"entries", entries}};
}

TypedTableau tableau_from_json(const Json& j, const std::vector<int>* m) {
  try {
    TypedTableau t;
    t.shape = multicomposition_from_json(j.at("shape"), m);
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != t.shape.r()) throw ParseError("entries have the wrong number of components");
    for (std::size_t c = 0; c < entries.size(); ++c) {
      std::vector<std::vector<Symbol>> comp;
      const auto& rows = entries[c];
      const auto& parts = t.shape.comp[c];
      for (std::size_t a = 0; a < parts.size(); ++a) {
        std::vector<Symbol> row;
        if (a < rows.size())
          for (const auto& sym : rows[a]) row.push_back({sym.at(0).get<int>(), sym.at(1).get<int>()});
        if (static_cast<int>(row.size()) != parts[a]) throw ParseError("tableau rows do not match the shape");
        comp.push_back(std::move(row));
      }
      for (std::size_t a = parts.size(); a < rows.size(); ++a)
        if (!rows[a].empty()) throw ParseError("tableau rows do not match the shape");
      t.entries.push_back(std::move(comp));
    }
    return t;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad tableau JSON: ") + e.what());
  }
}

Json to_json(const Node& x) { return {x.i, x.j, x.k}; }

Node node_from_json(const Json& j) {
  try {
    if (j.size() != 3) throw ParseError("a node has three coordinates");
    return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad node: ") + e.what());
  }
}

Json to_json(const Specialization& s) {
  Json Q = Json::array();
  for (const auto& v : s.Q) Q.push_back(v.str());
  return {{"q", s.q.str()}, {"Q", Q}};
}

}  // namespace qschur
