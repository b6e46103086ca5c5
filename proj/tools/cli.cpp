#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "qschur/branching.hpp"
#include "qschur/checks.hpp"
#include "qschur/io.hpp"
#include "qschur/schur.hpp"

namespace qschur::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string command, target;
  int n = -1, r = -1, i = -1, index = -1, samples = 500;
  std::string m, lambda, type, flags, tableau, bracket;
  std::string format = "text", layer_order = "ascending", sign = "plus";
  std::optional<std::uint64_t> seed;
  std::size_t max_dim = 200000;
  double max_seconds = 0;
  bool algebraic = false;
};

std::uint64_t seed_of(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("QSCHUR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("QSCHUR_SEED is not an unsigned integer");
    }
  }
  return 0;
}

Conventions conventions_of(const Options& o) { return o.flags.empty() ? Conventions{} : parse_conventions(o.flags); }

Json flags_json(const Conventions& c) {
  return {{"m_convention", to_string(c.m)}, {"y_convention", to_string(c.y)}, {"jm_convention", to_string(c.l)}};
}

std::size_t algebra_dim(int n, int r) {
  std::size_t d = factorial(n);
  for (int k = 0; k < n; ++k) d *= static_cast<std::size_t>(r);
  return d;
}

void check_dim(const Options& o, int n, int r) {
  if (algebra_dim(n, r) > o.max_dim)
    throw ResourceLimit("algebra dimension " + std::to_string(algebra_dim(n, r)) + " exceeds --max-dim " +
                        std::to_string(o.max_dim));
}

int require_n(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be a positive integer");
  return o.n;
}

int require_r(const Options& o) {
  if (o.r < 1) throw UsageError("--r must be a positive integer");
  return o.r;
}

std::vector<int> bounds_of(const Options& o) {
  auto m = parse_int_list(o.m);
  if (m.empty()) throw UsageError("--m must be nonempty");
  for (int v : m)
    if (v < 1) throw UsageError("--m entries must be positive");
  if (o.r >= 1 && o.r != static_cast<int>(m.size())) throw UsageError("--r does not match the length of --m");
  return m;
}

/// λ padded to m; without --m every bound is max(n, longest component, 1).
std::pair<Multicomposition, std::vector<int>> shape_of(const Options& o, bool need_partition) {
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  const Multicomposition raw = parse_multicomposition(o.lambda);
  if (o.r >= 1 && o.r != raw.r()) throw UsageError("--r does not match the number of components of --lambda");
  std::vector<int> m;
  if (!o.m.empty()) {
    m = bounds_of(o);
    if (static_cast<int>(m.size()) != raw.r()) throw UsageError("--m does not match the number of components");
  } else {
    for (const auto& c : raw.comp)
      m.push_back(std::max({raw.size(), static_cast<int>(c.size()), 1}));
  }
  const Multicomposition lam = raw.with_bounds(m);
  if (need_partition && !lam.is_multipartition()) throw UsageError("--lambda must be a multipartition");
  return {lam, m};
}

void emit(const Options& o, std::ostream& out, const Json& j, const std::string& text) {
  if (o.format == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
}

void emit_element(const Options& o, std::ostream& out, const ExactElement& e) {
  emit(o, out, to_json(e), to_text(e) + "\n");
}

// ---------------------------------------------------------------- enum

int cmd_enum(const Options& o, std::ostream& out) {
  if (o.target == "multicomp") {
    const int n = o.n >= 0 ? o.n : throw UsageError("--n is required");
    const auto m = bounds_of(o);
    const auto items = enumerate_multicompositions(MultiShape{m, n});
    Json j{{"n", n}, {"m", m}, {"count", items.size()}, {"items", Json::array()}};
    std::string text = "count " + std::to_string(items.size()) + "\n";
    for (const auto& mu : items) {
      j["items"].push_back(to_json(mu));
      text += mu.str() + "\n";
    }
    emit(o, out, j, text);
    return kPass;
  }
  if (o.target == "ssyt") {
    const auto [lam, m] = shape_of(o, true);
    std::optional<Multicomposition> type;
    if (!o.type.empty()) type = parse_multicomposition(o.type, &m);
    const auto items = enumerate_ssyt(lam, m, type);
    Json j{{"lambda", to_json(lam.trimmed())}, {"m", m}, {"count", items.size()}, {"items", Json::array()}};
    std::string text = "count " + std::to_string(items.size()) + "\n";
    for (const auto& t : items) {
      j["items"].push_back(to_json(t));
      text += t.str() + "  type " + t.type(m).trimmed().str() + "\n";
    }
    emit(o, out, j, text);
    return kPass;
  }
  if (o.target == "nodes") {
    const auto [lam, m] = shape_of(o, true);
    const auto rem = removable_nodes(lam), add = addable_nodes(lam);
    const std::string note =
        "a node is removable when it ends its row and the next row of its component is shorter or absent";
    Json j{{"lambda", to_json(lam.trimmed())}, {"removable", Json::array()}, {"addable", Json::array()}, {"note", note}};
    std::string text = "removable " + std::to_string(rem.size()) + " (least first)\n";
    for (std::size_t t = 0; t < rem.size(); ++t) {
      j["removable"].push_back(to_json(rem[t]));
      text += "  n" + std::to_string(t + 1) + " " + rem[t].str() + "\n";
    }
    text += "addable " + std::to_string(add.size()) + "\n";
    for (const auto& x : add) {
      j["addable"].push_back(to_json(x));
      text += "  " + x.str() + "\n";
    }
    text += "note: " + note + "\n";
    emit(o, out, j, text);
    return kPass;
  }
  throw UsageError("enum expects multicomp, ssyt or nodes");
}

// ---------------------------------------------------------------- verify

int verify_relations(const Options& o, std::ostream& out) {
  const int n = require_n(o), r = require_r(o);
  check_dim(o, n, r);
  auto alg = ExactAlgebra::create(n, exact_params(r));
  const auto rel = check_relations(*alg);
  const auto assoc = check_associativity(*alg, o.samples, seed_of(o));
  auto spec = SpecAlgebra::create(n, specialized_params(random_specialization(r, seed_of(o))));
  const std::size_t closure = regular_closure_dim(*spec), expected = algebra_dim(n, r);
  const bool ok = rel.ok() && assoc.ok() && closure == expected;
  Json j{{"n", n},
         {"r", r},
         {"relations", rel.relations},
         {"checks", rel.checks},
         {"failures", rel.failures},
         {"associativity", {{"samples", assoc.checks}, {"failures", assoc.failures}}},
         {"closure_dim", closure},
         {"expected_dim", expected},
         {"ok", ok}};
  std::ostringstream text;
  text << "relations " << rel.relations << " on " << alg->dim() << " basis elements: " << rel.failures
       << " failures\nassociativity " << assoc.checks << " triples: " << assoc.failures << " failures\nclosure dim "
       << closure << " (expected " << expected << ")\n"
       << (ok ? "all relations hold\n" : "FAILED\n");
  emit(o, out, j, text.str());
  return ok ? kPass : kFail;
}

int verify_lemma(const Options& o, std::ostream& out) {
  const int n = require_n(o), r = require_r(o);
  check_dim(o, n, r);
  std::vector<LConvention> runs;
  if (!o.flags.empty())
    runs.push_back(conventions_of(o).l);
  else
    runs = {LConvention::Literal, LConvention::Symmetric};
  auto alg = ExactAlgebra::create(n, exact_params(r));
  auto spec = SpecAlgebra::create(n, specialized_params(random_specialization(r, seed_of(o))));
  Json j{{"n", n}, {"r", r}, {"runs", Json::array()}};
  std::ostringstream text;
  std::optional<LConvention> selected;
  for (const LConvention l : runs) {
    const auto van = bracket_vanishing(*alg, l);
    const auto fr = bracket_freeness(*spec, l);
    const bool ok = van.ok() && fr.ok();
    j["runs"].push_back({{"jm_convention", to_string(l)},
                         {"pairs", van.pairs},
                         {"zero_pairs", van.zero_pairs},
                         {"violations", van.violations},
                         {"brackets", fr.brackets},
                         {"full_rank", fr.full_rank},
                         {"expected_rank", fr.expected_rank},
                         {"hecke_spans", fr.hecke_spans},
                         {"ok", ok}});
    text << "jm_convention=" << to_string(l) << ": vanishing " << van.violations << "/" << van.zero_pairs
         << " violations, free rank " << fr.full_rank << "/" << fr.brackets << " brackets at n!=" << fr.expected_rank
         << ", hecke span " << fr.hecke_spans << "/" << fr.brackets << (ok ? " ok" : " FAILED") << "\n";
    if (ok && !selected) selected = l;
  }
  j["certified"] = selected.has_value();
  j["selected"] = selected ? Json(to_string(*selected)) : Json(nullptr);
  text << (selected ? "certified with jm_convention=" + to_string(*selected) : std::string("not certified")) << "\n";
  emit(o, out, j, text.str());
  return selected ? kPass : kFail;
}

Json basis_json(const BasisReport& rep) {
  return {{"lambda", to_json(rep.lambda.trimmed())},
          {"m", rep.m},
          {"count", rep.count},
          {"rank", rep.rank},
          {"expected", rep.expected},
          {"members", rep.members},
          {"certified", rep.certified},
          {"attempts", rep.attempts},
          {"flags", flags_json(rep.conv)},
          {"specialization", to_json(rep.point)}};
}

std::string basis_text(const BasisReport& rep) {
  std::ostringstream s;
  s << "lambda " << rep.lambda.trimmed().str() << " count " << rep.count << " rank " << rep.rank << " expected "
    << rep.expected << " in-module " << rep.members << " " << (rep.certified ? "certified" : "NOT certified")
    << " (" << rep.conv.str() << ")\n";
  return s.str();
}

int verify_basis(const Options& o, std::ostream& out) {
  const auto [lam, m] = shape_of(o, true);
  check_dim(o, lam.size(), lam.r());
  if (!o.flags.empty()) {
    const auto rep = verify_basis_independence(lam, m, conventions_of(o), seed_of(o));
    emit(o, out, basis_json(rep), basis_text(rep));
    return rep.certified ? kPass : kFail;
  }
  const auto cert = certify_basis(lam, m, seed_of(o));
  Json j = basis_json(cert.used());
  std::string text = basis_text(cert.literal);
  if (cert.fallback) {
    j["literal"] = basis_json(cert.literal);
    text += "literal flags did not certify; fallback:\n" + basis_text(*cert.fallback);
  }
  emit(o, out, j, text);
  return cert.certified() ? kPass : kFail;
}

LayerOrder layer_order_of(const Options& o) {
  if (o.layer_order == "ascending") return LayerOrder::AscendingSucc;
  if (o.layer_order == "descending") return LayerOrder::DescendingSucc;
  throw UsageError("--layer-order must be ascending or descending");
}

int verify_branch(const Options& o, std::ostream& out) {
  const auto [lam, m] = shape_of(o, true);
  const BranchContext ctx = o.m.empty() ? BranchContext::minimal(lam.trimmed()) : BranchContext(lam, m);
  const LayerOrder order = layer_order_of(o);
  const auto rep = branch_dim_identity(ctx, order);
  Json j{{"lambda", to_json(ctx.lambda.trimmed())},
         {"m", ctx.m},
         {"layer_order", to_string(order)},
         {"restricted_dim", rep.restricted_dim},
         {"layers", Json::array()},
         {"identity_holds", rep.identity_holds}};
  std::ostringstream text;
  text << "identity " << rep.restricted_dim << " =";
  for (std::size_t t = 0; t < rep.layers.size(); ++t) {
    const auto& l = rep.layers[t];
    j["layers"].push_back(
        {{"node", to_json(l.node)}, {"quotient_dim", l.quotient_dim}, {"weyl_dim", l.weyl_dim}, {"match", l.match}});
    text << (t ? " + " : " ") << l.weyl_dim;
  }
  text << (rep.identity_holds ? " holds" : " FAILS") << "\n";
  for (std::size_t t = 0; t < rep.layers.size(); ++t)
    text << "  layer " << t + 1 << " node " << rep.layers[t].node.str() << " quotient " << rep.layers[t].quotient_dim
         << " weyl " << rep.layers[t].weyl_dim << "\n";
  bool ok = rep.identity_holds;
  if (o.algebraic) {
    check_dim(o, ctx.lambda.size(), ctx.lambda.r());
    const Conventions conv = o.flags.empty() ? validated_conventions() : conventions_of(o);
    auto alg = SpecAlgebra::create(ctx.lambda.size(),
                                   specialized_params(random_specialization(ctx.lambda.r(), seed_of(o))));
    const RestrictedModule mod(ctx, alg, conv);
    Json alg_j{{"flags", flags_json(conv)}, {"highest_weight", Json::array()}};
    for (int layer = 1; layer <= static_cast<int>(rep.layers.size()); ++layer) {
      const auto hw = highest_weight_check(mod, layer, order);
      alg_j["highest_weight"].push_back({{"layer", layer},
                                         {"node", to_json(hw.node)},
                                         {"operators", hw.operators},
                                         {"failures", hw.failures},
                                         {"certified", hw.certified}});
      text << "  highest weight layer " << layer << ": " << (hw.certified ? "certified" : "FAILED") << " ("
           << hw.failures << "/" << hw.operators << " operators fail)\n";
      ok = ok && hw.certified;
    }
    TriangularityReport tri;
    for (const auto& a : mod.labels())
      for (const EFIndex idx : gamma_prime(ctx.m_prime))
        for (const EFKind kind : {EFKind::E, EFKind::F}) {
          const auto t = triangularity_check(mod, idx, kind, a);
          tri.expansions += t.expansions;
          tri.violations += t.violations;
          tri.undetermined += t.undetermined;
        }
    tri.certified = tri.violations == 0 && tri.undetermined == 0;
    alg_j["triangularity"] = {{"expansions", tri.expansions},
                              {"violations", tri.violations},
                              {"undetermined", tri.undetermined},
                              {"certified", tri.certified}};
    text << "  triangularity " << tri.expansions << " expansions, " << tri.violations << " violations, "
         << tri.undetermined << " undetermined (" << conv.str() << ")\n";
    ok = ok && tri.certified;
    j["algebraic"] = alg_j;
  }
  emit(o, out, j, text.str());
  return ok ? kPass : kFail;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.target == "relations") return verify_relations(o, out);
  if (o.target == "lemma24") return verify_lemma(o, out);
  if (o.target == "basis") return verify_basis(o, out);
  if (o.target == "branch") return verify_branch(o, out);
  throw UsageError("verify expects relations, lemma24, basis or branch");
}

// ---------------------------------------------------------------- compute

std::shared_ptr<const ExactAlgebra> exact_algebra(const Options& o, int n, int r) {
  check_dim(o, n, r);
  return ExactAlgebra::create(std::max(n, 1), exact_params(r));
}

std::vector<int> bracket_of(const Options& o, int r) {
  auto a = parse_int_list(o.bracket);
  if (static_cast<int>(a.size()) != r + 1 || a.front() != 0) throw UsageError("--bracket must be [0, a_1, ..., a_r]");
  for (std::size_t k = 1; k < a.size(); ++k)
    if (a[k] < a[k - 1]) throw UsageError("--bracket must be nondecreasing");
  return a;
}

TypedTableau tableau_of(const Options& o, const Multipartition& lam, const std::vector<int>& m) {
  if (!o.tableau.empty()) {
    TypedTableau t = tableau_from_json(Json::parse(o.tableau));
    if (t.shape.trimmed() != lam.trimmed()) throw UsageError("--tableau does not have shape --lambda");
    if (!t.is_semistandard(m)) throw UsageError("--tableau is not semistandard over --m");
    // the enumerated copy carries the padded shape used by the algebra layer
    for (auto& cand : enumerate_ssyt(lam, m, t.type(m)))
      if (to_json(cand) == to_json(t)) return cand;
    throw UsageError("--tableau is not a semistandard tableau of shape --lambda");
  }
  std::optional<Multicomposition> type;
  if (!o.type.empty()) type = parse_multicomposition(o.type, &m);
  const auto all = enumerate_ssyt(lam, m, type);
  const int idx = o.index < 0 ? 0 : o.index;
  if (idx >= static_cast<int>(all.size())) throw UsageError("--index is out of range");
  return all[static_cast<std::size_t>(idx)];
}

int cmd_compute(const Options& o, std::ostream& out) {
  const Conventions conv = conventions_of(o);
  if (o.target == "L") {
    const int n = require_n(o), r = require_r(o);
    if (o.i < 1 || o.i > n) throw UsageError("--i must lie in 1..n");
    emit_element(o, out, exact_algebra(o, n, r)->jucys_murphy(o.i));
    return kPass;
  }
  if (o.target == "u" || o.target == "v") {
    const int n = require_n(o), r = require_r(o);
    const auto a = bracket_of(o, r);
    if (a.back() != n) throw UsageError("--bracket must end with n");
    auto alg = exact_algebra(o, n, r);
    if (o.target == "v") {
      emit_element(o, out, v_elem(*alg, a, conv.l));
    } else if (o.sign == "plus") {
      emit_element(o, out, u_plus(*alg, a, conv.l));
    } else if (o.sign == "minus") {
      emit_element(o, out, u_minus(*alg, a, conv.l));
    } else {
      throw UsageError("--sign must be plus or minus");
    }
    return kPass;
  }
  const bool need_partition = o.target == "z" || o.target == "h";
  const auto [lam, m] = shape_of(o, need_partition);
  auto alg = exact_algebra(o, lam.size(), lam.r());
  if (o.target == "x") {
    emit_element(o, out, x_elem(*alg, lam, conv));
  } else if (o.target == "y") {
    emit_element(o, out, y_elem(*alg, lam, conv));
  } else if (o.target == "z") {
    emit_element(o, out, z_lambda(*alg, lam, conv));
  } else if (o.target == "m") {
    emit_element(o, out, m_sum(*alg, lam.bar(), conv.m));
  } else if (o.target == "h") {
    emit_element(o, out, weyl_basis_vector(*alg, tableau_of(o, lam, m), m, conv));
  } else {
    throw UsageError("compute expects x, y, z, m, v, L, h or u");
  }
  return kPass;
}

void start_watchdog(double seconds) {
  if (seconds <= 0) return;
  std::thread([seconds] {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    std::cerr << "error: time limit of " << seconds << " s exceeded\n";
    std::_Exit(kResource);
  }).detach();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Ariki-Koike algebras and q-Schur modules"};
  Options o;
  app.add_option("command", o.command, "enum | verify | compute")
      ->required()
      ->check(CLI::IsMember({"enum", "verify", "compute"}));
  app.add_option("target", o.target, "what to enumerate, verify or compute")->required();
  app.add_option("--n", o.n, "degree n");
  app.add_option("--r", o.r, "number of components r");
  app.add_option("--m", o.m, "component bounds, e.g. [2,2]");
  app.add_option("--lambda", o.lambda, "multicomposition, e.g. [[2],[1]]");
  app.add_option("--mu,--type", o.type, "tableau type");
  app.add_option("--tableau", o.tableau, "tableau JSON {shape, entries}");
  app.add_option("--index", o.index, "0-based position in the semistandard enumeration");
  app.add_option("--i", o.i, "Jucys-Murphy index");
  app.add_option("--bracket", o.bracket, "bracket [0,a_1,...,a_r]");
  app.add_option("--sign", o.sign, "plus or minus (compute u)");
  app.add_option("--seed", o.seed, "random seed (default: QSCHUR_SEED or 0)");
  app.add_option("--samples", o.samples, "associativity samples");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--flags", o.flags, "m_convention=...,y_convention=...,jm_convention=...");
  app.add_option("--layer-order", o.layer_order, "ascending (least node first) or descending");
  app.add_flag("--algebraic", o.algebraic, "also run highest-weight and triangularity checks");
  app.add_option("--max-dim", o.max_dim, "largest algebra dimension to build");
  app.add_option("--max-seconds", o.max_seconds, "wall-clock limit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  start_watchdog(o.max_seconds);
  try {
    if (o.command == "enum") return cmd_enum(o, out);
    if (o.command == "verify") return cmd_verify(o, out);
    return cmd_compute(o, out);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const Json::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace qschur::cli
