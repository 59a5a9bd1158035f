#pragma once

// Property suites behind `synaptica verify`. Every random draw is seeded from
// the options, so reports are reproducible byte for byte.

#include <synaptica/effect_algebra.hpp>
#include <synaptica/models.hpp>
#include <synaptica/order_unit_space.hpp>
#include <synaptica/poset.hpp>
#include <synaptica/random.hpp>
#include <synaptica/state_space.hpp>
#include <synaptica/stone.hpp>
#include <synaptica/synaptic.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace synaptica::verify {

using Json = nlohmann::ordered_json;

struct Options {
  std::uint64_t seed = 0;
  /// Deliberate defect for mutation testing; "negative-part-sign" flips a-.
  std::string fault;
};

struct Check {
  std::string name;
  bool passed = true;
  Json detail = Json::object();
};

struct Suite {
  std::string name;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

inline constexpr std::array<const char*, 6> kSuites = {"posets", "effect", "order-unit", "synaptic", "states", "stone"};
inline constexpr std::array<const char*, 1> kFaults = {"negative-part-sign"};

namespace detail {

inline rnd::Rng rng_for(const Options& o, std::uint64_t stream) { return rnd::Rng(o.seed * 1000003u + stream); }

inline Json labels_of(const std::vector<std::string>& labels, const std::vector<std::size_t>& witness) {
  Json out = Json::array();
  for (auto w : witness) out.push_back(w < labels.size() ? labels[w] : std::to_string(w));
  return out;
}

/// p <= q in Sym(n): q projects onto span[U_r, W] for a Gaussian W.
inline std::pair<SymMatrix, SymMatrix> nested_projections(std::size_t n, std::size_t r, std::size_t s, rnd::Rng& rng) {
  const Eigen::MatrixXd u = rnd::orthogonal(n, rng);
  const auto k = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd m(k, static_cast<Eigen::Index>(s));
  m << u.leftCols(static_cast<Eigen::Index>(r)), rnd::gaussian_matrix(k, static_cast<Eigen::Index>(s - r), rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(k, static_cast<Eigen::Index>(s));
  return {rnd::projection_from(u, r), symmetric_part(q * q.transpose())};
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline Suite posets_suite(const Options& o) {
  Suite s{"posets", {}};
  {
    const auto chain = models::chain_poset(5);
    const auto c = classify(chain);
    const auto bow = classify(models::bowtie_poset());
    const bool ok = minimum(chain) == Elem{0} && maximum(chain) == Elem{4} && c.is_lattice && !bow.is_lattice &&
                    !maximum(models::bowtie_poset()) && !bow.is_upward_directed;
    s.checks.push_back({"chain and bowtie bounds", ok,
                        {{"chain_is_lattice", c.is_lattice}, {"bowtie_is_lattice", bow.is_lattice}}});
  }
  {
    bool ok = true;
    Json sizes = Json::array();
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto c = classify(models::boolean_lattice(k));
      ok = ok && c.is_boolean && c.is_oml();
      sizes.push_back(std::size_t{1} << k);
    }
    s.checks.push_back({"2^k is a Boolean orthomodular lattice", ok, {{"sizes", sizes}}});
  }
  {
    const auto c = classify(models::mo2());
    s.checks.push_back({"MO2 is a non-distributive orthomodular lattice", c.is_oml() && !c.is_distributive,
                        {{"distributive", c.is_distributive}}});
  }
  {
    const auto l = models::o6();
    const auto c = classify(l);
    bool ok = !c.is_oml() && c.oml_witness.size() == 2;
    if (ok) {
      const Elem a = c.oml_witness[0], b = c.oml_witness[1];
      const auto bm = meet(l.base(), b, l.perp(a));
      ok = l.leq(a, b) && bm && join(l.base(), a, *bm) != b;
    }
    s.checks.push_back({"O6 is not orthomodular", ok, {{"witness", detail::labels_of(l.base().labels(), c.oml_witness)}}});
  }
  {
    auto rng = detail::rng_for(o, 11);
    std::uniform_int_distribution<std::size_t> pick(0, 4);
    double residual = 0, eigen = 0;
    std::size_t order_fail = 0;
    const std::size_t pairs = 10000;
    const auto one = SymMatrix::identity(4);
    for (std::size_t i = 0; i < pairs; ++i) {
      std::size_t r = pick(rng), t = pick(rng);
      if (r > t) std::swap(r, t);
      const auto [p, q] = detail::nested_projections(4, r, t, rng);
      if (!proj_leq(p, q)) ++order_fail;
      residual = std::max(residual, norm(proj_join(p, proj_meet(q, one - p)) - q));
      eigen = std::max(eigen, -min_eigenvalue(q - p));
    }
    const double tolerance = tol::report_tolerance();
    s.checks.push_back({"orthomodular identity for p <= q in Sym(4)",
                        order_fail == 0 && residual <= tolerance && eigen <= tolerance,
                        {{"pairs", pairs}, {"max_residual", residual}, {"min_eigenvalue_residual", eigen}}});
  }
  return s;
}

inline Suite effect_suite(const Options&) {
  Suite s{"effect", {}};
  {
    Json names = Json::array();
    bool ok = true;
    for (const auto& [name, E] : models::curated_effect_algebras()) {
      ok = ok && check_ea_axioms(E.table()).report.ok() && check_ea_laws(E).ok();
      names.push_back(name);
    }
    s.checks.push_back({"curated models satisfy the axioms", ok, {{"models", names}}});
  }
  {
    bool ok = true;
    Json per_model = Json::object();
    for (const auto& [name, E] : models::curated_effect_algebras()) {
      std::vector<models::Mutation> invalid;
      for (auto& m : models::single_entry_mutations(E.table()))
        if (!check_ea_axioms(m.table).report.ok()) invalid.push_back(std::move(m));
      std::size_t rejected = 0;
      const auto chosen = models::spread(invalid, 20);
      for (const auto& m : chosen) {
        const auto r = check_ea_axioms(m.table);
        const auto* v = r.report.first_violation();
        if (!r.algebra && v && (!v->witness.empty() || v->axiom == "table shape")) ++rejected;
      }
      ok = ok && rejected == chosen.size();
      per_model[name] = {{"mutations", chosen.size()}, {"rejected_with_witness", rejected}};
    }
    s.checks.push_back({"single-entry mutations are rejected", ok, per_model});
  }
  {
    bool ok = true;
    std::size_t count = 0;
    for (const auto& [name, E] : models::mv_effect_algebras()) {
      const auto M = ea_to_mv(E);
      ok = ok && check_mv_axioms(M.table()).report.ok() && mv_to_ea(M) == E && ea_to_mv(mv_to_ea(M)) == M;
      ++count;
    }
    s.checks.push_back({"MV round trip is the identity", ok, {{"algebras", count}}});
  }
  {
    const bool mo2 = is_mv_effect_algebra(models::mo2_ea());
    const bool diamond = is_mv_effect_algebra(models::diamond_ea());
    s.checks.push_back({"MO2 and the diamond are not MV-effect algebras", !mo2 && !diamond,
                        {{"MO2", mo2}, {"diamond", diamond}}});
  }
  {
    auto t = models::chain_mv(2).table();
    t.plus[1 * 3 + 1] = 1;
    const auto r = check_mv_axioms(t);
    const auto* v = r.report.first_violation();
    s.checks.push_back({"broken MV table is rejected", !r.report.ok(), {{"axiom", v ? v->axiom : ""}}});
  }
  return s;
}

inline Suite order_unit_suite(const Options& o) {
  Suite s{"order-unit", {}};
  auto rng = detail::rng_for(o, 21);
  const double tolerance = tol::report_tolerance();
  {
    double gap = 0;
    const SymAlgebra A(3);
    const FunctionAlgebra F(4);
    for (int i = 0; i < 50; ++i) {
      const auto a = random_element(A, rng, 2.0);
      gap = std::max(gap, std::abs(order_unit_norm(A, a) - norm_by_bisection(A, a)) / tol::scale(norm(a)));
      const auto f = random_element(F, rng, 2.0);
      gap = std::max(gap, std::abs(order_unit_norm(F, f) - norm_by_bisection(F, f)) / tol::scale(norm(f)));
    }
    // each cone test allows kSymCone * ||l v +- a||, at most 2 kSymCone ||a||,
    // plus the bisection resolution
    const double bound = 2 * tol::kSymCone + 1e-12;
    s.checks.push_back(
        {"norm agrees with cone-only bisection", gap <= bound, {{"max_relative_gap", gap}, {"bound", bound}}});
  }
  {
    const Eigen::MatrixXd V = rnd::orthogonal(4, rng).leftCols(2);
    const SymAlgebra A4(4), A2(2);
    auto omega = [V](const SymMatrix& e) { return symmetric_part(V.transpose() * e.matrix() * V); };
    const EffectMorphismExtension<SymAlgebra, SymAlgebra> xi(A4, A2, omega, o.seed);
    std::uniform_real_distribution<double> u(-3, 3);
    double linear = 0, restrict = 0;
    for (int i = 0; i < 100; ++i) {
      const auto a = random_element(A4, rng, 2.0), b = random_element(A4, rng, 2.0);
      const double x = u(rng), y = u(rng);
      linear = std::max(linear, norm(xi(x * a + y * b) - (x * xi(a) + y * xi(b))));
      const auto e = random_effect(A4, rng);
      restrict = std::max(restrict, norm(xi(e) - omega(e)));
    }
    s.checks.push_back({"effect morphism extends linearly", linear <= tolerance, {{"max_residual", linear}}});
    s.checks.push_back({"extension restricts to the effect morphism", restrict <= tolerance, {{"max_residual", restrict}}});
  }
  return s;
}

inline Suite synaptic_suite(const Options& o) {
  Suite s{"synaptic", {}};
  auto rng = detail::rng_for(o, 31);
  const double tolerance = tol::report_tolerance();
  const bool flip = o.fault == "negative-part-sign";
  double recon = 0, steps = 0, stieltjes = 0, sum = 0, diff = 0;
  bool orthogonal_parts = true;
  const int count = 60;
  for (int i = 0; i < count; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i) % 8;
    std::vector<double> values(n);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (auto& v : values) v = i % 2 ? pick(rng) : std::uniform_real_distribution<double>(-3, 3)(rng);
    const auto a = rnd::with_spectrum(values, rng);
    const auto r = spectral_resolution(a);
    recon = std::max(recon, norm(r.reconstruct() - a));
    for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
      steps = std::max(steps, norm(r.step(r.eigenvalues[k]) - step_by_formula(a, r.eigenvalues[k])));
      if (k + 1 < r.eigenvalues.size()) {
        const double mid = 0.5 * (r.eigenvalues[k] + r.eigenvalues[k + 1]);
        steps = std::max(steps, norm(r.step(mid) - step_by_formula(a, mid)));
      }
    }
    stieltjes = std::max(stieltjes, norm(stieltjes_reconstruct(a, 1e-3) - a));
    auto d = decompose(a);
    if (flip) d.neg = -d.neg;
    sum = std::max(sum, norm(d.pos + d.neg - d.abs));
    diff = std::max(diff, norm(d.pos - d.neg - a));
    orthogonal_parts = orthogonal_parts && product_is_zero(d.pos, d.neg);
  }
  s.checks.push_back({"spectral reconstruction", recon <= tolerance, {{"elements", count}, {"max_residual", recon}}});
  s.checks.push_back({"step family matches the defining formula", steps <= tolerance, {{"max_residual", steps}}});
  s.checks.push_back({"Riemann-Stieltjes sum with mesh 1e-3", stieltjes <= 1e-3, {{"max_error", stieltjes}}});
  s.checks.push_back({"|a| = a+ + a-", sum <= tolerance, {{"max_residual", sum}}});
  s.checks.push_back({"a = a+ - a-", diff <= tolerance, {{"max_residual", diff}}});
  s.checks.push_back({"a+ a- = 0", orthogonal_parts, Json::object()});
  {
    std::size_t agree = 0;
    const std::size_t pairs = 100;
    for (std::size_t i = 0; i < pairs; ++i) {
      const std::size_t n = 3 + i % 4;
      const Eigen::MatrixXd u = rnd::orthogonal(n, rng);
      const std::size_t k = 1 + i % (n - 1);
      const std::size_t overlap = i % 2 ? 0 : 1;
      const std::size_t m = std::min(n - k + overlap, std::size_t{2});
      Eigen::VectorXd da = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n)), db = da;
      for (std::size_t j = 0; j < k; ++j) da(static_cast<Eigen::Index>(j)) = (j % 2 ? -1.0 : 1.0) * (0.5 + j);
      for (std::size_t j = k - overlap; j < k - overlap + m; ++j) db(static_cast<Eigen::Index>(j)) = 1.0 + j;
      const auto a = symmetric_part(u * da.asDiagonal() * u.transpose());
      const auto b = symmetric_part(u * db.asDiagonal() * u.transpose());
      const bool zero = product_is_zero(a, b);
      if (zero == (overlap == 0) && zero == product_is_zero(carrier(a), b) &&
          zero == product_is_zero(b, carrier(a)))
        ++agree;
    }
    s.checks.push_back({"carrier law", agree == pairs, {{"pairs", pairs}, {"agree", agree}}});
  }
  return s;
}

inline Suite states_suite(const Options& o) {
  Suite s{"states", {}};
  auto rng = detail::rng_for(o, 41);
  {
    const std::vector<std::pair<std::string, FiniteEffectAlgebra>> cases = {
        {"boolean 2^2", models::boolean_ea(2)}, {"MO2", models::mo2_ea()}, {"3-chain", models::three_chain()}};
    const std::vector<std::size_t> expected = {2, 4, 1};
    bool ok = true;
    Json counts = Json::object();
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto ext = extremal_states(cases[i].second);
      ok = ok && ext.verified && ext.vertices.size() == expected[i];
      counts[cases[i].first] = ext.vertices.size();
    }
    s.checks.push_back({"extremal state counts", ok, counts});
  }
  {
    bool ok = true;
    const SymAlgebra A(3);
    const FunctionAlgebra F(4);
    for (int i = 0; i < 50; ++i) {
      ok = ok && check_fnlprops(A, random_element(A, rng)).ok();
      ok = ok && check_fnlprops(F, random_element(F, rng)).ok();
      const auto p = rnd::with_spectrum(rnd::uniform_values(3, 0, 2, rng), rng);
      ok = ok && check_fnlprops(A, p).ok();
    }
    s.checks.push_back({"states determine order and norm", ok, {{"elements", 150}}});
  }
  {
    double residual = 0;
    const SymAlgebra A(3);
    for (int i = 0; i < 10; ++i) {
      const LinearFunctional<SymAlgebra> rho{rnd::density(3, rng)};
      residual = std::max(residual, norm(extend_state(A, restrict_state(A, rho), o.seed).density - rho.density));
    }
    s.checks.push_back({"restriction and extension of states round trip", residual <= tol::report_tolerance(),
                        {{"max_residual", residual}}});
  }
  {
    bool ok = true;
    Json vertices = Json::object();
    for (std::size_t n = 2; n <= 6; ++n) {
      const FunctionAlgebra F(n);
      const auto vs = function_state_vertices(F);
      ok = ok && vs.size() == n;
      for (const auto& v : vs) {
        Eigen::VectorXd mu(static_cast<Eigen::Index>(n));
        for (std::size_t x = 0; x < n; ++x) mu(static_cast<Eigen::Index>(x)) = to_double(v[x]);
        const auto c = extremal_commutative_characterization(F, {RealFunction(mu)});
        ok = ok && c.extremal && c.agree();
      }
      for (int i = 0; i < 20; ++i) {
        const auto c = extremal_commutative_characterization(F, {RealFunction(rnd::probability_vector(n, rng))});
        ok = ok && !c.extremal && c.agree();
      }
      vertices["R^" + std::to_string(n)] = vs.size();
    }
    s.checks.push_back({"extremal states of R^X are point evaluations", ok, vertices});
  }
  return s;
}

inline Suite stone_suite(const Options& o) {
  Suite s{"stone", {}};
  {
    bool ok = true;
    Json points = Json::array();
    for (std::size_t k = 0; k <= 4; ++k) {
      const auto X = stone_space(models::boolean_lattice(k));
      ok = ok && X.size() == k && verify_stone(X).ok();
      points.push_back(X.size());
    }
    s.checks.push_back({"Stone map of 2^k is a Boolean isomorphism", ok, {{"points", points}}});
  }
  {
    bool ok = true;
    Json residuals = Json::array();
    for (std::size_t k = 1; k <= 5; ++k) {
      std::vector<SymMatrix> gens;
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<double> d(k, 0.0);
        d[i] = 1.0;
        gens.push_back(SymMatrix::diagonal(d));
      }
      const auto R = functional_representation(SymAlgebra(k), gens);
      const auto c = verify_representation(R, o.seed);
      ok = ok && R.points() == k && c.report.ok();
      residuals.push_back({{"k", k}, {"round_trip", c.round_trip_residual}, {"isometry", c.isometry_residual}});
    }
    s.checks.push_back({"diagonal algebra representation", ok, {{"residuals", residuals}}});
  }
  {
    const auto a = SymMatrix::diagonal({1, 1, 2});
    const SymMatrix gens[] = {a};
    const auto R = functional_representation(SymAlgebra(3), gens);
    const auto f = R(a);
    const bool ok = R.points() == 2 && norm(f - RealFunction{1, 2}) <= tol::report_tolerance();
    s.checks.push_back({"CC(diag(1,1,2)) has two points", ok,
                        {{"points", R.points()}, {"psi", std::vector<double>(f.values().data(), f.values().data() + f.size())}}});
  }
  {
    auto rng = detail::rng_for(o, 51);
    bool ok = true;
    for (std::size_t k = 1; k <= 4; ++k) {
      std::vector<double> spectrum(k + 1);
      for (std::size_t i = 0; i <= k; ++i) spectrum[i] = static_cast<double>(std::min(i, k - 1));
      const SymMatrix gens[] = {rnd::with_spectrum(spectrum, rng)};
      const auto R = functional_representation(SymAlgebra(k + 1), gens);
      const auto ext = algebra_extremal_states(R);
      std::vector<bool> hit(k, false);
      ok = ok && ext.size() == k;
      for (const auto& rho : ext) {
        const auto c = extremal_commutative_characterization(R, rho);
        ok = ok && c.extremal && c.agree() && c.point;
        if (c.point) hit[*c.point] = true;
      }
      ok = ok && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }
    s.checks.push_back({"extremal states transport across Psi", ok, Json::object()});
  }
  {
    auto rng = detail::rng_for(o, 52);
    const FunctionAlgebra F(5);
    std::vector<RealFunction> sample;
    for (int i = 0; i < 10; ++i) sample.push_back(rnd::grid_function(5, -1, 1, rng));
    const auto r = check_rickart_completeness(F, sample);
    Json notes = Json::array();
    for (const auto& x : r.results)
      if (!x.note.empty()) notes.push_back(x.axiom + ": " + x.note);
    s.checks.push_back({"Rickart property and completeness", r.ok(), {{"notes", notes}}});
  }
  return s;
}

inline bool known_suite(const std::string& name) {
  if (name == "all") return true;
  return std::any_of(kSuites.begin(), kSuites.end(), [&](const char* s) { return name == s; });
}

/// Runs one named suite, or all of them for "all"; throws on unknown names.
inline std::vector<Suite> run(const std::string& name, const Options& o) {
  static const std::vector<std::pair<std::string, std::function<Suite(const Options&)>>> table = {
      {"posets", posets_suite}, {"effect", effect_suite}, {"order-unit", order_unit_suite},
      {"synaptic", synaptic_suite}, {"states", states_suite}, {"stone", stone_suite}};
  std::vector<Suite> out;
  for (const auto& [n, f] : table)
    if (name == "all" || name == n) out.push_back(f(o));
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

inline Json to_json(const std::vector<Suite>& suites) {
  Json out = Json::array();
  for (const auto& s : suites) {
    Json checks = Json::array();
    for (const auto& c : s.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out.push_back({{"suite", s.name}, {"passed", s.passed()}, {"checks", checks}});
  }
  return out;
}

}  // namespace synaptica::verify
