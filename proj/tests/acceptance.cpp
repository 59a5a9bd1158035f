// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// limit. Expected values come from constructions and brute-force oracles
// written here, not from the library code under test.

#include <synaptica/effect_algebra.hpp>
#include <synaptica/models.hpp>
#include <synaptica/order_unit_space.hpp>
#include <synaptica/poset.hpp>
#include <synaptica/random.hpp>
#include <synaptica/state_space.hpp>
#include <synaptica/stone.hpp>
#include <synaptica/synaptic.hpp>

#include "support/ea_oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#ifndef SYNAPTICA_CLI_PATH
#error "SYNAPTICA_CLI_PATH must name the synaptica executable"
#endif

using namespace synaptica;

namespace {

struct Outcome {
  bool passed = true;
  std::string summary;
};

// ---------------------------------------------------------------------------
// Matrix oracles

double op_norm(const Eigen::MatrixXd& m) {
  return m.size() ? Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0) : 0.0;
}

Eigen::MatrixXd from_eigen(const Eigen::MatrixXd& u, const std::vector<double>& d) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) v(static_cast<Eigen::Index>(i)) = d[i];
  return u * v.asDiagonal() * u.transpose();
}

std::string sci(double x) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << x;
  return s.str();
}

// ---------------------------------------------------------------------------
// 1. Effect-algebra axiom oracle

Outcome criterion_1() {
  Outcome o;
  std::size_t models = 0, mutations = 0, witnessed = 0;
  for (const auto& [name, E] : models::curated_effect_algebras()) {
    ++models;
    if (!check_ea_axioms(E.table()).report.ok() || !oracle::is_effect_algebra(E.table())) {
      o.passed = false;
      o.summary += name + " rejected; ";
    }
    std::vector<models::Mutation> invalid;
    for (auto& m : models::single_entry_mutations(E.table())) {
      const bool valid = oracle::is_effect_algebra(m.table);
      if (check_ea_axioms(m.table).report.ok() != valid) {
        o.passed = false;
        o.summary += name + " mutation disagrees with oracle; ";
      }
      if (!valid) invalid.push_back(std::move(m));
    }
    for (const auto& m : models::spread(invalid, 20)) {
      ++mutations;
      const auto check = check_ea_axioms(m.table);
      const auto* v = check.report.first_violation();
      if (!check.algebra && v && oracle::witness_violates(m.table, v->axiom, v->witness)) ++witnessed;
    }
  }
  o.passed = o.passed && witnessed == mutations;
  o.summary = std::to_string(models) + " curated models valid; " + std::to_string(witnessed) + "/" +
              std::to_string(mutations) + " mutations rejected with confirmed witness" +
              (o.summary.empty() ? "" : "; " + o.summary);
  return o;
}

// ---------------------------------------------------------------------------
// 2. MV equivalence

bool mv_axioms_hold(const FiniteMVAlgebra& M) {
  const std::size_t n = M.size();
  auto p = [&](Elem x, Elem y) { return M.plus(x, y); };
  auto c = [&](Elem x) { return M.perp(x); };
  if (c(M.zero()) != M.one()) return false;
  for (Elem x = 0; x < n; ++x) {
    if (p(x, M.zero()) != x || c(c(x)) != x || p(x, c(x)) != M.one()) return false;
    for (Elem y = 0; y < n; ++y) {
      if (p(x, y) != p(y, x)) return false;
      if (p(x, c(p(x, c(y)))) != p(y, c(p(y, c(x))))) return false;  // x + (x + y')' = y + (y + x')'
      for (Elem z = 0; z < n; ++z)
        if (p(x, p(y, z)) != p(p(x, y), z)) return false;
    }
  }
  return true;
}

Outcome criterion_2() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& [name, E] : models::mv_effect_algebras()) {
    ++count;
    const auto M = ea_to_mv(E);
    const bool ok = mv_axioms_hold(M) && mv_to_ea(M) == E && ea_to_mv(mv_to_ea(M)) == M;
    if (!ok) o.summary += name + " fails; ";
    o.passed = o.passed && ok;
  }
  // Lukasiewicz chains: x + y = min(x + y, k) computed directly
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto M = ea_to_mv(models::chain_ea(k));
    for (Elem x = 0; x <= k; ++x)
      for (Elem y = 0; y <= k; ++y) o.passed = o.passed && M.plus(x, y) == std::min(x + y, k);
  }
  o.summary = std::to_string(count) + " MV-effect algebras round-trip; MV axioms checked exhaustively" +
              (o.summary.empty() ? "" : "; " + o.summary);
  return o;
}

// ---------------------------------------------------------------------------
// 3. Spectral resolution

Outcome criterion_3() {
  Outcome o;
  rnd::Rng rng(2024);
  double recon = 0, steps = 0, stieltjes = 0;
  std::size_t points = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i) % 8;
    std::vector<double> values(n);
    std::uniform_int_distribution<int> pick(-3, 3);
    std::uniform_real_distribution<double> real(-4, 4);
    for (auto& v : values) v = i % 2 ? pick(rng) : real(rng);
    Eigen::MatrixXd u;
    const auto a = rnd::with_spectrum(values, rng, &u);
    const auto r = spectral_resolution(a);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(a.matrix().rows(), a.matrix().cols());
    for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) sum += r.eigenvalues[k] * r.projections[k].matrix();
    recon = std::max(recon, op_norm(sum - a.matrix()));
    auto distinct = values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<double> probes = distinct;
    for (std::size_t k = 0; k + 1 < distinct.size(); ++k) probes.push_back(0.5 * (distinct[k] + distinct[k + 1]));
    for (double l : probes) {
      std::vector<double> below(n);
      for (std::size_t j = 0; j < n; ++j) below[j] = values[j] <= l ? 1.0 : 0.0;
      const Eigen::MatrixXd expected = from_eigen(u, below);
      steps = std::max(steps, op_norm(step_by_formula(a, l).matrix() - expected));
      steps = std::max(steps, op_norm(r.step(l).matrix() - expected));
      ++points;
    }
    stieltjes = std::max(stieltjes, op_norm(stieltjes_reconstruct(a, 1e-3).matrix() - a.matrix()));
  }
  o.passed = recon <= 1e-9 && steps <= 1e-9 && stieltjes <= 1e-3;
  o.summary = "200 matrices; reconstruction " + sci(recon) + ", step formula " + sci(steps) + " over " +
              std::to_string(points) + " jump/mid points, Stieltjes " + sci(stieltjes);
  return o;
}

// ---------------------------------------------------------------------------
// 4. Carrier law

Outcome criterion_4() {
  Outcome o;
  rnd::Rng rng(404);
  std::size_t agree = 0, zero_pairs = 0;
  const std::size_t pairs = 500;
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t n = 2 + i % 6;
    const Eigen::MatrixXd u = rnd::orthogonal(n, rng);
    // supports are sets of eigenvector columns; disjoint supports give ab = 0
    std::vector<int> role(n);
    std::uniform_int_distribution<int> pick(0, 3);  // 0 none, 1 a only, 2 b only, 3 both
    for (auto& x : role) x = pick(rng);
    if (i % 2 == 0)
      for (auto& x : role)
        if (x == 3) x = 1;
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::vector<double> da(n, 0.0), db(n, 0.0);
    bool overlap = false;
    for (std::size_t j = 0; j < n; ++j) {
      const double sa = rng() % 2 ? 1.0 : -1.0, sb = rng() % 2 ? 1.0 : -1.0;
      if (role[j] & 1) da[j] = sa * mag(rng);
      if (role[j] & 2) db[j] = sb * mag(rng);
      overlap = overlap || role[j] == 3;
    }
    const auto a = symmetric_part(from_eigen(u, da)), b = symmetric_part(from_eigen(u, db));
    const bool ab = product_is_zero(a, b);
    const bool carrier_a_b = product_is_zero(carrier(a), b);
    const bool carriers = product_is_zero(carrier(b), carrier(a));
    if (ab == !overlap && carrier_a_b == !overlap && carriers == !overlap) ++agree;
    zero_pairs += !overlap;
  }
  o.passed = agree == pairs;
  o.summary = std::to_string(agree) + "/" + std::to_string(pairs) + " pairs agree (" + std::to_string(zero_pairs) +
              " with ab = 0)";
  return o;
}

// ---------------------------------------------------------------------------
// 5. Order/norm duality

template <class V>
bool duality(const V& space, const typename V::element_type& a, double min_value, double max_abs) {
  const auto r = check_fnlprops(space, a);
  for (const auto& rho : extremal_family(space, a))
    if (!is_state(space, rho)) return false;
  const bool positive = min_value >= 0;
  return (r.min_value >= -1e-9) == positive && std::abs(r.sup_abs - max_abs) <= 1e-9 * tol::scale(max_abs);
}

Outcome criterion_5() {
  Outcome o;
  rnd::Rng rng(505);
  std::size_t ok = 0, total = 0, positives = 0;
  std::uniform_real_distribution<double> spread(-3, 3), pos(0, 3);
  auto spectrum = [&](std::size_t n, int i) {
    std::vector<double> v(n);
    for (auto& x : v) x = i % 3 == 0 ? spread(rng) : pos(rng);
    if (i % 5 == 0) v[0] = 0.0;  // boundary of the cone
    return v;
  };
  auto tally = [&](bool good, const std::vector<double>& v) {
    ++total;
    ok += good;
    positives += *std::min_element(v.begin(), v.end()) >= 0;
  };
  for (std::size_t n : {2, 3, 4}) {
    const SymAlgebra A(n);
    for (int i = 0; i < 200; ++i) {
      const auto v = spectrum(n, i);
      const auto a = rnd::with_spectrum(v, rng);
      double mx = 0;
      for (double x : v) mx = std::max(mx, std::abs(x));
      tally(duality(A, a, *std::min_element(v.begin(), v.end()), mx), v);
    }
  }
  for (std::size_t n : {3, 5}) {
    const FunctionAlgebra F(n);
    for (int i = 0; i < 200; ++i) {
      const auto v = spectrum(n, i);
      double mx = 0;
      for (double x : v) mx = std::max(mx, std::abs(x));
      tally(duality(F, RealFunction(std::span<const double>(v)), *std::min_element(v.begin(), v.end()), mx), v);
    }
  }
  o.passed = ok == total;
  o.summary = std::to_string(ok) + "/" + std::to_string(total) + " elements over Sym(2..4), R^3, R^5 (" +
              std::to_string(positives) + " positive)";
  return o;
}

// ---------------------------------------------------------------------------
// 6. Extension machinery

template <class V, class W, class Omega, class Diff>
double extension_residual(const V& source, const W& target, Omega omega, Diff diff, rnd::Rng& rng, double& restrict) {
  const EffectMorphismExtension<V, W> xi(source, target, omega, 6);
  std::uniform_real_distribution<double> u(-3, 3);
  double linear = 0;
  for (int i = 0; i < 100; ++i) {
    const auto a = random_element(source, rng, 2.0), b = random_element(source, rng, 2.0);
    const double s = u(rng), t = u(rng);
    linear = std::max(linear, diff(xi(s * a + t * b), s * xi(a) + t * xi(b)));
    const auto e = random_effect(source, rng);
    restrict = std::max(restrict, diff(xi(e), omega(e)));
  }
  return linear;
}

Outcome criterion_6() {
  Outcome o;
  rnd::Rng rng(606);
  double linear = 0, restrict = 0, round_trip = 0;
  auto dist = [](const auto& x, const auto& y) { return norm(x - y); };
  const Eigen::MatrixXd V = rnd::orthogonal(4, rng).leftCols(2);
  linear = std::max(linear, extension_residual(
                                SymAlgebra(4), SymAlgebra(2),
                                [V](const SymMatrix& e) { return symmetric_part(V.transpose() * e.matrix() * V); },
                                dist, rng, restrict));
  const auto D = rnd::density(3, rng);
  linear = std::max(linear, extension_residual(
                                SymAlgebra(3), RealLine{}, [D](const SymMatrix& e) { return pairing(D, e); },
                                [](double x, double y) { return std::abs(x - y); }, rng, restrict));
  linear = std::max(linear, extension_residual(
                                FunctionAlgebra(4), FunctionAlgebra(2),
                                [](const RealFunction& e) { return RealFunction{e[0], 0.5 * (e[1] + e[3])}; },
                                dist, rng, restrict));
  // rho -> omega -> rho and omega -> rho -> omega
  const SymAlgebra A(3);
  const FunctionAlgebra F(4);
  for (int i = 0; i < 10; ++i) {
    const LinearFunctional<SymAlgebra> rho{rnd::density(3, rng)};
    const auto back = extend_state(A, restrict_state(A, rho), static_cast<std::uint64_t>(i));
    const LinearFunctional<FunctionAlgebra> gamma{RealFunction(rnd::probability_vector(4, rng))};
    const auto omega = restrict_state(F, gamma);
    const auto omega_back = restrict_state(F, extend_state(F, omega));
    for (int k = 0; k < 10; ++k) {
      const auto a = random_element(A, rng, 3.0);
      round_trip = std::max(round_trip, std::abs(back(a) - rho(a)));
      const auto e = random_effect(F, rng);
      round_trip = std::max(round_trip, std::abs(omega_back(e) - omega(e)));
    }
  }
  o.passed = linear <= 1e-9 && restrict <= 1e-9 && round_trip <= 1e-9;
  o.summary = "linearity " + sci(linear) + ", restriction " + sci(restrict) + ", rho<->omega round trip " +
              sci(round_trip);
  return o;
}

// ---------------------------------------------------------------------------
// 7. Extremal states of R^X

bool min_rule_fails(const LinearFunctional<FunctionAlgebra>& rho, const ExtremalCharacterization& c) {
  if (!c.min_rule_witness) return false;
  const auto& [a, b] = *c.min_rule_witness;
  Eigen::VectorXd m = a.values().cwiseMin(b.values());
  return a.values().minCoeff() >= 0 && b.values().minCoeff() >= 0 &&
         std::abs(rho(RealFunction(m)) - std::min(rho(a), rho(b))) > 1e-12;
}

Outcome criterion_7() {
  Outcome o;
  rnd::Rng rng(707);
  std::size_t vertices_ok = 0, interior_ok = 0, interior = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const FunctionAlgebra F(n);
    const auto vs = function_state_vertices(F);
    std::set<std::size_t> hit;
    bool exact = vs.size() == n;
    for (const auto& v : vs) {
      std::size_t ones = 0, at = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (v[x] == 1) ++ones, at = x;
        else exact = exact && v[x] == 0;
      }
      exact = exact && ones == 1;
      hit.insert(at);
      const auto c = extremal_commutative_characterization(F, point_evaluation(F, at));
      exact = exact && c.extremal && c.point_evaluation && c.multiplicative && c.sharp && c.min_rule;
    }
    if (exact && hit.size() == n) ++vertices_ok;
    for (int i = 0; i < 100; ++i, ++interior) {
      Eigen::VectorXd p = rnd::probability_vector(n, rng);
      if (i % 4 == 0) {  // on an edge of the simplex
        p.setZero();
        const double w = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        p(i % static_cast<int>(n)) = w;
        p((i + 1) % static_cast<int>(n)) = 1 - w;
      }
      const LinearFunctional<FunctionAlgebra> rho{RealFunction(p)};
      const auto c = extremal_commutative_characterization(F, rho);
      if (!c.extremal && !c.point_evaluation && !c.multiplicative && !c.sharp && !c.min_rule && min_rule_fails(rho, c))
        ++interior_ok;
    }
  }
  o.passed = vertices_ok == 5 && interior_ok == interior;
  o.summary = "|X| = 2..6: vertex sets exact for " + std::to_string(vertices_ok) + "/5; " +
              std::to_string(interior_ok) + "/" + std::to_string(interior) + " interior states with all four false";
  return o;
}

// ---------------------------------------------------------------------------
// 8. Stone pipeline

std::size_t count_homomorphisms(const BoundedOrtholattice& B) {
  const std::size_t n = B.size();
  const LatticeTables t(B.base());
  std::size_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    auto x = [&](Elem b) { return static_cast<bool>(m >> b & 1); };
    bool ok = !x(B.zero()) && x(B.one());
    for (Elem a = 0; a < n && ok; ++a) {
      ok = x(B.perp(a)) != x(a);
      for (Elem b = 0; b < n && ok; ++b) ok = x(*t.m(a, b)) == (x(a) && x(b)) && x(*t.j(a, b)) == (x(a) || x(b));
    }
    count += ok;
  }
  return count;
}

Outcome criterion_8() {
  Outcome o;
  rnd::Rng rng(808);
  std::string notes;
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto B = models::boolean_lattice(k);
    const auto X = stone_space(B);
    const LatticeTables t(B.base());
    bool iso = X.size() == k && count_homomorphisms(B) == k;
    std::set<ClopenSet> image;
    for (Elem b = 0; b < B.size(); ++b) {
      image.insert(stone_map(X, b));
      iso = iso && stone_map(X, B.perp(b)) == (((ClopenSet{1} << k) - 1) & ~stone_map(X, b));
      for (Elem c = 0; c < B.size(); ++c)
        iso = iso && stone_map(X, *t.m(b, c)) == (stone_map(X, b) & stone_map(X, c)) &&
              stone_map(X, *t.j(b, c)) == (stone_map(X, b) | stone_map(X, c));
    }
    iso = iso && image.size() == B.size();
    if (!iso) notes += " Stone map 2^" + std::to_string(k) + " fails;";
    o.passed = o.passed && iso;
    if (k == 0) continue;

    // diagonal algebra in Sym(k)
    std::vector<SymMatrix> gens;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<double> d(k, 0.0);
      d[i] = 1.0;
      gens.push_back(SymMatrix::diagonal(d));
    }
    const auto R = functional_representation(SymAlgebra(k), gens);
    bool rep = R.points() == k && verify_representation(R, k).report.ok();
    std::vector<std::size_t> where(k);  // point x is the atom diag(e_where[x])
    for (std::size_t x = 0; x < R.points() && rep; ++x)
      for (std::size_t i = 0; i < k; ++i)
        if (R.atoms()[x](i, i) > 0.5) where[x] = i;
    for (int s = 0; s < 20 && rep; ++s) {
      const auto d = rnd::uniform_values(k, -3, 3, rng), e = rnd::uniform_values(k, -3, 3, rng);
      const auto a = SymMatrix::diagonal(d), b = SymMatrix::diagonal(e);
      const auto fa = R(a), fb = R(b);
      double mx = 0;
      for (std::size_t x = 0; x < k; ++x) {
        rep = rep && std::abs(fa[x] - d[where[x]]) <= 1e-12;
        mx = std::max(mx, std::abs(d[x]));
      }
      rep = rep && norm(R(jordan(a, b)) - product(fa, fb)) <= 1e-12 && std::abs(norm(fa) - mx) <= 1e-12 &&
            norm(R.inverse(fa) - a) <= 1e-12;
      rep = rep && in_positive_cone(a) == in_positive_cone(fa);
    }
    // psi agrees with the Stone map on projections, via atom i <-> point 1 << i
    for (ClopenSet mask = 0; mask < (ClopenSet{1} << k) && rep; ++mask) {
      std::vector<double> d(k);
      for (std::size_t i = 0; i < k; ++i) d[i] = static_cast<double>(mask >> i & 1);
      const auto f = R(SymMatrix::diagonal(d));
      const auto ind = stone_indicator(X, static_cast<Elem>(mask));
      for (std::size_t x = 0; x < k; ++x) {
        std::size_t point = 0;
        for (std::size_t y = 0; y < k; ++y)
          if (X.atoms[y] == (Elem{1} << where[x])) point = y;
        rep = rep && std::abs(f[x] - ind[point]) <= 1e-12;
      }
    }
    // extremal states transport to distinct point evaluations and back
    const auto ext = algebra_extremal_states(R);
    std::set<std::size_t> points;
    rep = rep && ext.size() == k;
    for (const auto& rho : ext) {
      const auto gamma = transport_state(R, rho);
      std::size_t ones = 0;
      for (std::size_t x = 0; x < k; ++x)
        if (std::abs(gamma.density[x] - 1.0) <= 1e-12) ++ones, points.insert(x);
      rep = rep && ones == 1 && norm(pull_back_state(R, gamma).density - rho.density) <= 1e-12;
    }
    rep = rep && points.size() == k;
    if (!rep) notes += " representation k=" + std::to_string(k) + " fails;";
    o.passed = o.passed && rep;
  }
  o.summary = "2^k for k = 0..4: Stone isomorphism, diagonal representation, state transport" + notes;
  return o;
}

// ---------------------------------------------------------------------------
// 9. OML battery

struct LatticeOracle {
  const BoundedOrtholattice& L;
  std::size_t n() const { return L.size(); }
  Elem meet(Elem a, Elem b) const {
    for (Elem c = 0; c < n(); ++c) {
      if (!L.leq(c, a) || !L.leq(c, b)) continue;
      bool greatest = true;
      for (Elem d = 0; d < n(); ++d)
        if (L.leq(d, a) && L.leq(d, b) && !L.leq(d, c)) greatest = false;
      if (greatest) return c;
    }
    return kUndefined;
  }
  Elem join(Elem a, Elem b) const { return L.perp(meet(L.perp(a), L.perp(b))); }
  bool orthomodular() const {
    for (Elem a = 0; a < n(); ++a)
      for (Elem b = 0; b < n(); ++b)
        if (L.leq(a, b) && join(a, meet(b, L.perp(a))) != b) return false;
    return true;
  }
  bool distributive() const {
    for (Elem a = 0; a < n(); ++a)
      for (Elem b = 0; b < n(); ++b)
        for (Elem c = 0; c < n(); ++c)
          if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
    return true;
  }
};

Outcome criterion_9() {
  Outcome o;
  std::string notes;
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto B = models::boolean_lattice(k);
    const auto c = classify(B);
    const LatticeOracle orc{B};
    const bool ok = c.is_boolean && c.is_oml() && orc.orthomodular() && orc.distributive();
    if (!ok) notes += " 2^" + std::to_string(k) + " misclassified;";
    o.passed = o.passed && ok;
  }
  {
    const auto M = models::mo2();
    const auto c = classify(M);
    const LatticeOracle orc{M};
    const bool ok = c.is_oml() && !c.is_distributive && orc.orthomodular() && !orc.distributive();
    if (!ok) notes += " MO2 misclassified;";
    o.passed = o.passed && ok;
  }
  {
    const auto L = models::o6();
    const auto c = classify(L);
    const LatticeOracle orc{L};
    const bool ok = !c.is_oml() && !orc.orthomodular();
    if (!ok) notes += " O6 misclassified;";
    o.passed = o.passed && ok;
  }
  // p <= q in Sym(4): q projects onto span[U_r, W] with W Gaussian
  rnd::Rng rng(909);
  std::uniform_int_distribution<std::size_t> pick(0, 4);
  double residual = 0, eigen = 0;
  const int pairs = 10000;
  for (int i = 0; i < pairs; ++i) {
    std::size_t r = pick(rng), s = pick(rng);
    if (r > s) std::swap(r, s);
    const Eigen::MatrixXd u = rnd::orthogonal(4, rng);
    Eigen::MatrixXd m(4, static_cast<Eigen::Index>(s));
    m << u.leftCols(static_cast<Eigen::Index>(r)), rnd::gaussian_matrix(4, static_cast<Eigen::Index>(s - r), rng);
    const Eigen::MatrixXd basis = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ() *
                                  Eigen::MatrixXd::Identity(4, static_cast<Eigen::Index>(s));
    const Eigen::MatrixXd pu = u.leftCols(static_cast<Eigen::Index>(r));
    const auto p = symmetric_part(pu * pu.transpose());
    const auto q = symmetric_part(basis * basis.transpose());
    const auto rhs = proj_join(p, proj_meet(q, SymMatrix::identity(4) - p));
    residual = std::max(residual, op_norm(rhs.matrix() - q.matrix()));
    const Eigen::VectorXd gaps = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(q.matrix() - p.matrix()).eigenvalues();
    eigen = std::max(eigen, std::max(0.0, -gaps.minCoeff()));
  }
  o.passed = o.passed && residual <= 1e-9 && eigen <= 1e-9;
  o.summary = "2^1..2^4 Boolean, MO2 non-distributive OML, O6 not OML; " + std::to_string(pairs) +
              " pairs in Sym(4): identity residual " + sci(residual) + ", min eigenvalue residual " + sci(eigen) + notes;
  return o;
}

// ---------------------------------------------------------------------------
// 10. CLI determinism

std::pair<int, std::string> run_command(const std::string& command) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, output};
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

Outcome criterion_10() {
  Outcome o;
  const std::string command = std::string("\"") + SYNAPTICA_CLI_PATH + "\" verify all --seed 0";
  const auto first = run_command(command);
  const auto second = run_command(command);
  o.passed = first.first == 0 && second.first == 0 && !first.second.empty() && first.second == second.second;
  o.summary = "exit codes " + std::to_string(first.first) + ", " + std::to_string(second.first) + "; " +
              std::to_string(first.second.size()) + " bytes, " +
              (first.second == second.second ? "identical" : "different");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit;  // seconds
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, 1, criterion_1},  {2, 1, criterion_2},  {3, 10, criterion_3}, {4, 5, criterion_4},
      {5, 5, criterion_5},  {6, 5, criterion_6},  {7, 5, criterion_7},  {8, 2, criterion_8},
      {9, 10, criterion_9}, {10, 60, criterion_10}};
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool passed = out.passed && seconds < c.limit;
    failures += !passed;
    std::cout << "criterion " << c.id << ": " << (passed ? "PASS" : "FAIL") << "  " << out.summary << "  ("
              << std::fixed << std::setprecision(3) << seconds << " s, limit " << std::setprecision(0) << c.limit
              << " s)" << std::defaultfloat << std::endl;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
