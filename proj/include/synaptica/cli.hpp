#pragma once

// The `synaptica` command line: check, spectral, states and verify.
// Reports are ordered JSON with a fixed key order; --pretty renders text.

#include <synaptica/document.hpp>
#include <synaptica/effect_algebra.hpp>
#include <synaptica/poset.hpp>
#include <synaptica/random.hpp>
#include <synaptica/state_space.hpp>
#include <synaptica/stone.hpp>
#include <synaptica/synaptic.hpp>
#include <synaptica/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace synaptica::cli {

using Json = nlohmann::ordered_json;

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}
inline Json element_json(const SymMatrix& a) { return matrix_json(a.matrix()); }
inline Json element_json(const RealFunction& f) {
  Json out = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f[i]);
  return out;
}

inline Json rational_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

inline Json keyed_rationals(const std::vector<std::string>& names, const RationalVector& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) out[names[i]] = to_string(v[i]);
  return out;
}

inline Json witness_labels(const std::vector<std::string>& labels, const std::vector<std::size_t>& w) {
  return verify::detail::labels_of(labels, w);
}

/// Axiom results; witnesses are element labels when `labels` is given.
inline Json axioms_json(const AxiomReport& r, const std::vector<std::string>* labels) {
  Json out = Json::array();
  for (const auto& a : r.results) {
    Json x = {{"axiom", a.axiom}, {"holds", a.holds}};
    if (!a.witness.empty()) x["witness"] = labels ? witness_labels(*labels, a.witness) : Json(a.witness);
    if (!a.note.empty()) x["note"] = a.note;
    out.push_back(x);
  }
  return out;
}

inline std::string linear_text(const RationalVector& row, const std::vector<std::string>& coords, const char* op,
                               const Rational& rhs) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    const Rational c = abs(row[i]);
    s += s.empty() ? (row[i] < 0 ? "-" : "") : (row[i] < 0 ? " - " : " + ");
    if (c != 1) s += to_string(c) + " ";
    s += coords[i];
  }
  if (s.empty()) s = "0";
  return s + " " + op + " " + to_string(rhs);
}

inline Json constraints_json(const HPolytope& p, const std::vector<std::string>& coords) {
  Json eq = Json::array(), le = Json::array();
  auto push_unique = [](Json& list, std::string row) {
    if (std::find(list.begin(), list.end(), Json(row)) == list.end()) list.push_back(std::move(row));
  };
  for (std::size_t i = 0; i < p.eq_lhs.size(); ++i) push_unique(eq, linear_text(p.eq_lhs[i], coords, "=", p.eq_rhs[i]));
  for (std::size_t i = 0; i < p.le_lhs.size(); ++i) push_unique(le, linear_text(p.le_lhs[i], coords, "<=", p.le_rhs[i]));
  return {{"equalities", eq}, {"inequalities", le}};
}

inline Json certificate_json(const FarkasCertificate& c, bool verified) {
  return {{"equality_multipliers", rational_json(c.eq_multipliers)},
          {"inequality_multipliers", rational_json(c.le_multipliers)},
          {"value", to_string(c.value)},
          {"verified", verified}};
}

inline Json classification_json(const Classification& c) {
  Json out = {{"lattice", c.is_lattice},         {"bounded", c.is_bounded},
              {"distributive", c.is_distributive}, {"complemented", c.is_complemented},
              {"boolean", c.is_boolean},         {"lattice_complete", c.is_lattice_complete}};
  if (c.orthomodular) out["orthomodular"] = *c.orthomodular;
  return out;
}

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

// ---------------------------------------------------------------------------
// check

inline Json check_order_structure(const doc::Document& d, Json& out) {
  const bool ortho = d.kind == "ortholattice";
  const auto input = ortho ? doc::ortholattice_input(d) : doc::OrtholatticeInput{doc::poset_input(d), {}, {}, {}};
  const auto& labels = input.order.labels;
  AxiomReport r = FinitePoset::check_order(labels.size(), input.order.leq);
  if (r.ok()) {
    const FinitePoset p(labels, input.order.leq);
    if (ortho) {
      for (auto& a : BoundedOrtholattice::check(p, input.perp).results) r.results.push_back(a);
      if (input.zero) r.add("zero is the least element", minimum(p) == *input.zero, {*input.zero});
      if (input.one) r.add("one is the greatest element", maximum(p) == *input.one, {*input.one});
      if (r.ok()) {
        const BoundedOrtholattice L(p, input.perp);
        const auto c = classify(L);
        out["classification"] = classification_json(c);
        if (!c.oml_witness.empty()) out["orthomodular_witness"] = witness_labels(labels, c.oml_witness);
      }
    } else {
      out["classification"] = classification_json(classify(p));
    }
  }
  for (auto& a : r.results)
    if (a.holds) a.witness.clear();
  return axioms_json(r, &labels);
}

inline Json check_document(const doc::Document& d, const std::vector<doc::Document>& workspace) {
  Json out = {{"file", d.file}, {"label", d.label}, {"kind", d.kind}, {"valid", true}};
  Json axioms;
  if (d.kind == "poset" || d.kind == "ortholattice") {
    axioms = check_order_structure(d, out);
  } else if (d.kind == "effect_algebra") {
    const auto t = doc::effect_table(d);
    const auto c = check_ea_axioms(t);
    axioms = axioms_json(c.report, &t.labels);
    if (c.algebra) {
      out["size"] = c.algebra->size();
      out["mv_effect_algebra"] = is_mv_effect_algebra(*c.algebra);
    }
  } else if (d.kind == "mv_algebra") {
    const auto t = doc::mv_table(d);
    axioms = axioms_json(check_mv_axioms(t).report, &t.labels);
  } else if (d.kind == "sym_matrix") {
    const Eigen::MatrixXd m = doc::matrix_entries(d);
    AxiomReport r;
    Eigen::Index bi = 0, bj = 0;
    const double gap = (m - m.transpose()).cwiseAbs().maxCoeff(&bi, &bj);
    const bool symmetric = gap <= tol::kSymmetry * tol::scale(m.cwiseAbs().maxCoeff());
    r.add("symmetric", symmetric,
          symmetric ? std::vector<std::size_t>{}
                    : std::vector<std::size_t>{static_cast<std::size_t>(std::min(bi, bj)), static_cast<std::size_t>(std::max(bi, bj))});
    axioms = axioms_json(r, nullptr);
    out["n"] = m.rows();
  } else if (d.kind == "function_algebra") {
    const auto f = doc::function_input(d);
    AxiomReport r;
    r.add("one value per point", true);
    axioms = axioms_json(r, nullptr);
    out["points"] = f.algebra.size();
    out["elements"] = f.names;
  } else {
    const auto s = doc::state_input(d, workspace);
    const auto& target = doc::find(workspace, s.over);
    out["over"] = s.over;
    if (s.table) {
      const auto t = doc::effect_table(target);
      const auto c = check_ea_axioms(t);
      if (!c.algebra) {
        AxiomReport r;
        r.add("underlying effect algebra is valid", false);
        axioms = axioms_json(r, nullptr);
      } else {
        axioms = axioms_json(check_state(*c.algebra, *s.table), &t.labels);
      }
    } else if (s.vector) {
      const auto f = doc::function_input(target);
      axioms = axioms_json(check_state(f.algebra, {*s.vector}), nullptr);
    } else {
      const auto a = doc::sym_matrix(target);
      const auto gap = (*s.density - s.density->transpose()).cwiseAbs().maxCoeff();
      if (gap > tol::kSymmetry * tol::scale(s.density->cwiseAbs().maxCoeff())) {
        AxiomReport r;
        r.add("density symmetric", false);
        axioms = axioms_json(r, nullptr);
      } else {
        axioms = axioms_json(check_state(SymAlgebra(a.n()), {SymMatrix(*s.density)}), nullptr);
      }
    }
  }
  bool valid = true;
  for (const auto& a : axioms) valid = valid && a["holds"].get<bool>();
  out["valid"] = valid;
  out["axioms"] = axioms;
  return out;
}

// ---------------------------------------------------------------------------
// spectral

template <class E>
Json spectral_json(const std::string& label, const E& a) {
  const auto r = spectral_resolution(a);
  const auto d = decompose(a);
  Json projections = Json::array();
  for (const auto& p : r.projections) projections.push_back(element_json(p));
  const double residual = norm(r.reconstruct() - a);
  return {{"label", label},
          {"spectrum", r.eigenvalues},
          {"L", r.lower_bound()},
          {"U", r.upper_bound()},
          {"eigenprojections", projections},
          {"carrier", element_json(carrier(a))},
          {"abs", element_json(d.abs)},
          {"positive_part", element_json(d.pos)},
          {"negative_part", element_json(d.neg)},
          {"residual", residual},
          {"residual_within_tolerance", residual <= tol::report_tolerance() * tol::scale(norm(a))}};
}

// ---------------------------------------------------------------------------
// states

inline Json ea_states(const FiniteEffectAlgebra& E, bool extremal) {
  const auto sp = state_polytope(E);
  Json out = {{"coordinates", sp.coordinates}};
  out["constraints"] = constraints_json(sp.polytope, sp.coordinates);
  out["dimension"] = sp.dimension;
  const auto f = feasibility(sp.polytope);
  if (!f.feasible()) {
    out["states"] = "none";
    out["certificate"] = certificate_json(*f.certificate, verify_certificate(sp.polytope, *f.certificate));
    return out;
  }
  out["feasible_state"] = keyed_rationals(E.labels(), *f.point);
  if (extremal) {
    const auto ext = extremal_states(sp);
    Json vs = Json::array();
    for (const auto& v : ext.vertices) vs.push_back(keyed_rationals(E.labels(), v));
    out["vertex_count"] = ext.vertices.size();
    out["vertices"] = vs;
    out["verified"] = ext.verified;
  }
  return out;
}

inline Json flags_json(const ExtremalCharacterization& c) {
  Json out = {{"vertex", c.extremal},
              {"point_evaluation", c.point_evaluation},
              {"multiplicative", c.multiplicative},
              {"zero_one_on_projections", c.sharp},
              {"min_rule", c.min_rule},
              {"conditions_agree", c.agree()}};
  if (c.point) out["point"] = *c.point;
  return out;
}

/// The state space of R^X is the probability simplex over X.
inline Json simplex_states(const FunctionAlgebra& F, bool extremal,
                           const std::function<Json(const RealFunction&)>& describe) {
  const std::size_t n = F.size();
  HPolytope p(n);
  p.add_equality(RationalVector(n, Rational(1)), 1);
  for (std::size_t x = 0; x < n; ++x) {
    RationalVector row(n, Rational(0));
    row[x] = -1;
    p.add_inequality(row, 0);
  }
  std::vector<std::string> coords;
  for (const auto& x : F.points()) coords.push_back("mu(" + x + ")");
  Json out = {{"coordinates", coords}, {"constraints", constraints_json(p, coords)}, {"dimension", free_dimension(p)}};
  out["feasible_state"] = keyed_rationals(F.points(), *feasibility(p).point);
  if (extremal) {
    Json vs = Json::array();
    const auto vertices = function_state_vertices(F);
    for (const auto& v : vertices) {
      Eigen::VectorXd mu(static_cast<Eigen::Index>(n));
      for (std::size_t x = 0; x < n; ++x) mu(static_cast<Eigen::Index>(x)) = to_double(v[x]);
      Json item = {{"values", keyed_rationals(F.points(), v)}};
      item.update(describe(RealFunction(mu)));
      vs.push_back(item);
    }
    out["vertex_count"] = vertices.size();
    out["vertices"] = vs;
  }
  return out;
}

inline FiniteEffectAlgebra algebra_for_states(const doc::Document& d) {
  if (d.kind == "effect_algebra") {
    const auto c = check_ea_axioms(doc::effect_table(d));
    if (!c.algebra) throw usage_error(d.label + ": not an effect algebra: " + c.report.first_violation()->axiom + " fails");
    return *c.algebra;
  }
  if (d.kind == "mv_algebra") {
    const auto c = check_mv_axioms(doc::mv_table(d));
    if (!c.algebra) throw usage_error(d.label + ": not an MV-algebra: axiom " + c.report.first_violation()->axiom + " fails");
    return mv_to_ea(*c.algebra);
  }
  const auto in = doc::ortholattice_input(d);
  const auto order = FinitePoset::check_order(in.order.labels.size(), in.order.leq);
  if (!order.ok() || !BoundedOrtholattice::check(FinitePoset(in.order.labels, in.order.leq), in.perp).ok())
    throw usage_error(d.label + ": input is not an OML");
  const BoundedOrtholattice L(FinitePoset(in.order.labels, in.order.leq), in.perp);
  if (!classify(L).is_oml()) throw usage_error(d.label + ": input is not an OML");
  return oml_to_ea(L);
}

inline Json states_document(const doc::Document& d, const std::vector<doc::Document>& workspace, bool extremal) {
  Json out = {{"file", d.file}, {"label", d.label}, {"kind", d.kind}};
  if (d.kind == "effect_algebra" || d.kind == "mv_algebra" || d.kind == "ortholattice") {
    out.update(ea_states(algebra_for_states(d), extremal));
  } else if (d.kind == "function_algebra") {
    const auto f = doc::function_input(d);
    const auto& F = f.algebra;
    out.update(simplex_states(F, extremal, [&](const RealFunction& mu) {
      return Json{{"flags", flags_json(extremal_commutative_characterization(F, {mu}))}};
    }));
  } else if (d.kind == "sym_matrix") {
    const auto a = doc::sym_matrix(d);
    const SymMatrix gens[] = {a};
    const auto R = functional_representation(SymAlgebra(a.n()), gens);
    out["instance"] = "commutative algebra generated by " + d.label;
    out["points"] = R.points();
    out["psi"] = element_json(R(a));
    out.update(simplex_states(R.target(), extremal, [&](const RealFunction& mu) {
      const auto rho = pull_back_state(R, {mu});
      return Json{{"density", element_json(rho.density)},
                  {"flags", flags_json(extremal_commutative_characterization(R, rho))}};
    }));
  } else if (d.kind == "state") {
    const auto s = doc::state_input(d, workspace);
    const auto& target = doc::find(workspace, s.over);
    out["over"] = s.over;
    if (s.table) {
      const auto E = algebra_for_states(target);
      const auto sp = state_polytope(E);
      const bool state = is_state(E, *s.table);
      out["is_state"] = state;
      out["extremal"] = state && is_vertex(sp.polytope, *s.table);
    } else if (s.vector) {
      const auto F = doc::function_input(target).algebra;
      const LinearFunctional<FunctionAlgebra> rho{*s.vector};
      out["is_state"] = is_state(F, rho);
      out["extremal"] = is_extremal_state(F, rho);
      if (is_state(F, rho)) out["flags"] = flags_json(extremal_commutative_characterization(F, rho));
    } else {
      const SymAlgebra A(doc::sym_matrix(target).n());
      const LinearFunctional<SymAlgebra> rho{SymMatrix(*s.density)};
      out["is_state"] = is_state(A, rho);
      out["extremal"] = is_extremal_state(A, rho);
    }
  } else {
    throw usage_error(d.label + ": no state space for kind '" + d.kind + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering for --pretty

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(6) << j.get<double>();
    return s.str();
  }
  return j.dump();
}

inline bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !is_flat(x))) return false;
  return true;
}

inline std::string flat_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + flat_text(j[i]);
  return s + "]";
}

inline void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !is_flat(v))) {
        out << pad << k << ":\n";
        render(v, out, indent + 2);
      } else {
        out << pad << k << ": " << flat_text(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() && !v.empty()) {
        std::ostringstream item;
        render(v, item, indent + 2);
        out << pad << "- " << item.str().substr(pad.size() + 2);
      } else if (v.is_object() || (v.is_array() && !is_flat(v))) {
        out << pad << "-\n";
        render(v, out, indent + 2);
      } else {
        out << pad << "- " << flat_text(v) << "\n";
      }
    }
  } else {
    out << pad << flat_text(j) << "\n";
  }
}

inline void render_verify(const Json& report, std::ostream& out) {
  out << "verify " << report["suite"].get<std::string>() << " (seed " << report["seed"].dump() << ")\n";
  for (const auto& s : report["suites"]) {
    out << "\n" << s["suite"].get<std::string>() << "\n";
    for (const auto& c : s["checks"])
      out << "  " << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "  " << c["name"].get<std::string>() << "\n";
  }
  out << "\n" << (report["passed"].get<bool>() ? "all checks passed" : "some checks FAILED") << "\n";
}

inline void emit(const Json& report, bool pretty, std::ostream& out) {
  if (!pretty) {
    out << report.dump(2) << "\n";
  } else if (report["command"] == "verify") {
    render_verify(report, out);
  } else {
    render(report, out, 0);
  }
}

inline std::vector<doc::Document> load_all(const std::vector<std::string>& files) {
  std::vector<doc::Document> all;
  for (const auto& f : files)
    for (auto& d : doc::load_file(f)) {
      for (const auto& o : all)
        if (o.label == d.label) throw doc::document_error(f + ": duplicate document label '" + d.label + "'");
      all.push_back(std::move(d));
    }
  return all;
}

}  // namespace detail

/// Runs the command line; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite models of effect algebras, order-unit spaces and synaptic algebras", "synaptica"};
  app.require_subcommand(1, 1);

  std::vector<std::string> files;
  std::string kind, element, suite = "all", fault;
  bool pretty = false, extremal = false;
  std::uint64_t seed = 0;
  std::size_t random_n = 0;

  auto* check = app.add_subcommand("check", "validate structures against their axioms");
  check->add_option("--kind", kind, "only accept documents of this kind");
  check->add_flag("--pretty", pretty, "human-readable output");
  check->add_option("files", files, "workspace files")->required()->type_name("FILE");

  auto* spectral = app.add_subcommand("spectral", "spectral report of a symmetric matrix or function");
  spectral->add_option("--element", element, "label of the element to analyse");
  spectral->add_option("--random", random_n, "analyse a seeded random n x n symmetric matrix")->check(CLI::Range(1, 64));
  spectral->add_option("--seed", seed, "random seed")->capture_default_str();
  spectral->add_flag("--pretty", pretty, "human-readable output");
  spectral->add_option("files", files, "workspace files")->type_name("FILE");

  auto* states = app.add_subcommand("states", "state-space report");
  states->add_option("--kind", kind, "only accept documents of this kind");
  states->add_flag("--extremal", extremal, "enumerate the extremal states");
  states->add_flag("--pretty", pretty, "human-readable output");
  states->add_option("files", files, "workspace files")->required()->type_name("FILE");

  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("suite", suite, "posets, effect, order-unit, synaptic, states, stone or all")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  verify_cmd->add_flag("--pretty", pretty, "human-readable output");
  verify_cmd->add_option("--inject-fault", fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (!kind.empty() && !doc::known_kind(kind)) throw usage_error("unknown kind '" + kind + "'");
    Json report = Json::object();
    int code = kOk;

    if (*check) {
      const auto docs = detail::load_all(files);
      Json items = Json::array();
      bool valid = true;
      for (const auto& d : docs) {
        if (!kind.empty() && d.kind != kind)
          throw usage_error(d.label + ": kind '" + d.kind + "' does not match --kind " + kind);
        auto item = detail::check_document(d, docs);
        valid = valid && item["valid"].get<bool>();
        items.push_back(std::move(item));
      }
      report = {{"command", "check"}, {"valid", valid}, {"documents", items}};
      code = valid ? kOk : kViolation;
    } else if (*spectral) {
      Json items = Json::array();
      if (random_n > 0) {
        rnd::Rng rng(seed);
        items.push_back(detail::spectral_json("random", rnd::sym(random_n, rng)));
      }
      for (const auto& d : detail::load_all(files)) {
        if (d.kind == "sym_matrix" && (element.empty() || element == d.label)) {
          items.push_back(detail::spectral_json(d.label, doc::sym_matrix(d)));
        } else if (d.kind == "function_algebra") {
          const auto f = doc::function_input(d);
          for (std::size_t i = 0; i < f.names.size(); ++i)
            if (element.empty() || element == f.names[i]) items.push_back(detail::spectral_json(f.names[i], f.elements[i]));
        }
      }
      if (!element.empty() && items.empty()) throw usage_error("unknown label '" + element + "'");
      if (items.empty()) throw usage_error("no sym_matrix or function_algebra element to analyse");
      report = {{"command", "spectral"}, {"elements", items}};
    } else if (*states) {
      const auto docs = detail::load_all(files);
      Json items = Json::array();
      for (const auto& d : docs) {
        if (!kind.empty() && d.kind != kind) continue;
        items.push_back(detail::states_document(d, docs, extremal));
      }
      report = {{"command", "states"}, {"extremal", extremal}, {"documents", items}};
    } else {
      if (!verify::known_suite(suite)) throw usage_error("unknown suite '" + suite + "'");
      if (!fault.empty() && std::find(verify::kFaults.begin(), verify::kFaults.end(), fault) == verify::kFaults.end())
        throw usage_error("unknown fault '" + fault + "'");
      const auto suites = verify::run(suite, {seed, fault});
      bool passed = true;
      Json failed = Json::array();
      for (const auto& s : suites) {
        passed = passed && s.passed();
        for (const auto& c : s.checks)
          if (!c.passed) failed.push_back(s.name + ": " + c.name);
      }
      report = {{"command", "verify"}, {"suite", suite}, {"seed", seed}, {"passed", passed},
                {"failed", failed}, {"suites", verify::to_json(suites)}};
      if (!fault.empty()) report["fault"] = fault;
      code = passed ? kOk : kViolation;
    }
    detail::emit(report, pretty, out);
    return code;
  } catch (const doc::document_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace synaptica::cli
