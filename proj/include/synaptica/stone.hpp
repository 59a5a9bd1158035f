#pragma once

// Stone representation of finite Boolean algebras, and the functional
// representation Psi : A -> R^X of a finite commutative subalgebra A of
// Sym(n), where X is the Stone space of the projections of A.

#include <synaptica/models.hpp>
#include <synaptica/order_unit_space.hpp>
#include <synaptica/poset.hpp>
#include <synaptica/polytope.hpp>
#include <synaptica/real_function.hpp>
#include <synaptica/report.hpp>
#include <synaptica/state_space.hpp>
#include <synaptica/sym_matrix.hpp>
#include <synaptica/synaptic.hpp>
#include <synaptica/tolerance.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace synaptica {

// ---------------------------------------------------------------------------
// Stone space of a finite Boolean algebra

/// Point x of the Stone space is the homomorphism b -> [atom_x <= b].
struct StoneSpace {
  BoundedOrtholattice algebra;
  std::vector<Elem> atoms;

  std::size_t size() const { return atoms.size(); }
  bool value(std::size_t x, Elem b) const { return algebra.leq(atoms.at(x), b); }
};

/// Subset of the Stone space as a bitmask over the points.
using ClopenSet = std::uint64_t;

inline std::vector<Elem> atoms_of(const BoundedOrtholattice& B) {
  std::vector<Elem> out;
  for (Elem a = 0; a < B.size(); ++a) {
    if (a == B.zero()) continue;
    bool minimal = true;
    for (Elem x = 0; x < B.size() && minimal; ++x)
      minimal = x == B.zero() || x == a || !B.leq(x, a);
    if (minimal) out.push_back(a);
  }
  return out;
}

inline StoneSpace stone_space(const BoundedOrtholattice& B) {
  if (!classify(B.base()).is_boolean) throw std::invalid_argument("not a Boolean algebra");
  StoneSpace X{B, atoms_of(B)};
  if (X.size() > 64) throw std::length_error("too many atoms");
  return X;
}

/// K_b = {x : x(b) = 1}.
inline ClopenSet stone_map(const StoneSpace& X, Elem b) {
  ClopenSet k = 0;
  for (std::size_t x = 0; x < X.size(); ++x)
    if (X.value(x, b)) k |= ClopenSet{1} << x;
  return k;
}

/// psi(b) = indicator of K_b.
inline RealFunction stone_indicator(const StoneSpace& X, Elem b) {
  std::vector<std::size_t> support;
  for (std::size_t x = 0; x < X.size(); ++x)
    if (X.value(x, b)) support.push_back(x);
  return RealFunction::indicator(X.size(), support);
}

/// Each point is a homomorphism onto {0, 1}, and b -> K_b is a bijection
/// onto all subsets preserving meet, join and complement. Exhaustive.
inline AxiomReport verify_stone(const StoneSpace& X) {
  const auto& B = X.algebra;
  const std::size_t n = B.size();
  const LatticeTables t(B.base());
  const ClopenSet all = X.size() == 64 ? ~ClopenSet{0} : (ClopenSet{1} << X.size()) - 1;
  AxiomReport r;
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < X.size() && w.empty(); ++x) {
      if (X.value(x, B.zero()) || !X.value(x, B.one())) w = {x};
      for (Elem a = 0; a < n && w.empty(); ++a) {
        if (X.value(x, B.perp(a)) == X.value(x, a)) w = {x, a};
        for (Elem b = 0; b < n && w.empty(); ++b) {
          if (X.value(x, *t.m(a, b)) != (X.value(x, a) && X.value(x, b))) w = {x, a, b};
          if (X.value(x, *t.j(a, b)) != (X.value(x, a) || X.value(x, b))) w = {x, a, b};
        }
      }
    }
    r.add("points are homomorphisms", w.empty(), w);
  }
  std::vector<ClopenSet> k(n);
  for (Elem b = 0; b < n; ++b) k[b] = stone_map(X, b);
  {
    std::set<ClopenSet> images(k.begin(), k.end());
    r.add("injective", images.size() == n);
    r.add("onto all subsets", X.size() < 64 && images.size() == (std::size_t{1} << X.size()));
  }
  std::vector<std::size_t> meet, join, perp;
  for (Elem a = 0; a < n; ++a) {
    if (perp.empty() && k[B.perp(a)] != (all & ~k[a])) perp = {a};
    for (Elem b = 0; b < n; ++b) {
      if (meet.empty() && k[*t.m(a, b)] != (k[a] & k[b])) meet = {a, b};
      if (join.empty() && k[*t.j(a, b)] != (k[a] | k[b])) join = {a, b};
    }
  }
  r.add("preserves meet", meet.empty(), meet);
  r.add("preserves join", join.empty(), join);
  r.add("preserves complement", perp.empty(), perp);
  return r;
}

// ---------------------------------------------------------------------------
// Functional representation

/// Thrown for generators that do not commute; `first` and `second` index
/// a non-commuting pair.
class noncommutative_error : public std::invalid_argument {
 public:
  noncommutative_error(std::size_t i, std::size_t j)
      : std::invalid_argument("commutative algebras only"), first(i), second(j) {}
  std::size_t first;
  std::size_t second;
};

/// A = span of pairwise orthogonal projections q_1..q_k with sum 1, and
/// Psi(sum l_i q_i) = (l_1, ..., l_k) on X = {q_1, ..., q_k}.
class FunctionalRepresentation {
 public:
  FunctionalRepresentation(SymAlgebra source, std::vector<SymMatrix> atoms)
      : source_(std::move(source)), atoms_(std::move(atoms)), target_(point_labels(atoms_.size())) {
    for (const auto& q : atoms_) {
      source_.require(q);
      traces_.push_back(q.trace());
    }
  }

  const SymAlgebra& source() const { return source_; }
  const FunctionAlgebra& target() const { return target_; }
  const std::vector<SymMatrix>& atoms() const { return atoms_; }
  std::size_t points() const { return atoms_.size(); }

  /// Coefficients l_i = tr(a q_i) / tr(q_i) of the nearest element of A.
  RealFunction coefficients(const SymMatrix& a) const {
    source_.require(a);
    Eigen::VectorXd l(static_cast<Eigen::Index>(atoms_.size()));
    for (std::size_t i = 0; i < atoms_.size(); ++i) l(static_cast<Eigen::Index>(i)) = pairing(a, atoms_[i]) / traces_[i];
    return RealFunction(l);
  }

  /// Distance (Frobenius) from a to A.
  double residual(const SymMatrix& a) const {
    return (a - inverse(coefficients(a))).matrix().norm();
  }
  bool contains(const SymMatrix& a) const { return negligible((a - inverse(coefficients(a))).matrix(), norm(a)); }

  /// Psi; throws "not in the algebra" for a outside A.
  RealFunction operator()(const SymMatrix& a) const {
    if (!contains(a)) throw std::invalid_argument("not in the algebra");
    return coefficients(a);
  }

  SymMatrix inverse(const RealFunction& f) const {
    target_.require(f);
    SymMatrix out = source_.zero();
    for (std::size_t i = 0; i < atoms_.size(); ++i) out += f[i] * atoms_[i];
    return out;
  }

  /// The projection sum of q_i over the bits of `mask`.
  SymMatrix projection(std::uint64_t mask) const {
    SymMatrix out = source_.zero();
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (mask >> i & 1) out += atoms_[i];
    return out;
  }

  SymMatrix random_member(std::mt19937_64& rng, double spread = 1.0) const {
    std::normal_distribution<double> g(0.0, spread);
    Eigen::VectorXd l(static_cast<Eigen::Index>(atoms_.size()));
    for (Eigen::Index i = 0; i < l.size(); ++i) l(i) = g(rng);
    return inverse(RealFunction(l));
  }

 private:
  static std::vector<std::string> point_labels(std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= k; ++i) out.push_back("q" + std::to_string(i));
    return out;
  }

  SymAlgebra source_;
  std::vector<SymMatrix> atoms_;
  FunctionAlgebra target_;
  std::vector<double> traces_;
};

/// The commutative algebra generated by 1 and pairwise commuting symmetric
/// generators. Atoms are the nonzero products of spectral projections, in
/// order of refinement. Throws noncommutative_error with a witness pair.
inline FunctionalRepresentation functional_representation(const SymAlgebra& A, std::span<const SymMatrix> generators) {
  for (const auto& g : generators) A.require(g);
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!commute(generators[i], generators[j])) throw noncommutative_error(i, j);
  std::vector<SymMatrix> atoms{A.unit()};
  for (const auto& g : generators) {
    const auto r = spectral_resolution(g);
    std::vector<SymMatrix> refined;
    for (const auto& q : atoms)
      for (const auto& p : r.projections) {
        const SymMatrix qp = symmetric_part(product(q, p));
        if (qp.trace() > 0.5) refined.push_back(qp);  // projection traces are ranks
      }
    atoms = std::move(refined);
  }
  return FunctionalRepresentation(A, std::move(atoms));
}

/// The projection lattice of A, built from matrix comparisons alone: element
/// m is the projection for mask m, the order is proj_leq and the complement
/// is located by matching 1 - p.
inline BoundedOrtholattice projection_lattice(const FunctionalRepresentation& R) {
  const std::size_t k = R.points();
  if (k > 6) throw std::length_error("projection lattice too large");
  const std::size_t n = std::size_t{1} << k;
  std::vector<SymMatrix> p;
  for (std::uint64_t m = 0; m < n; ++m) p.push_back(R.projection(m));
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<Elem> perp(n, 0);
  const SymMatrix one = R.source().unit();
  for (Elem a = 0; a < n; ++a) {
    labels.push_back(models::subset_label(a, k));
    for (Elem b = 0; b < n; ++b) {
      leq[a * n + b] = proj_leq(p[a], p[b]);
      if (negligible((one - p[a] - p[b]).matrix(), 1.0)) perp[a] = b;
    }
  }
  return BoundedOrtholattice(FinitePoset(std::move(labels), std::move(leq)), std::move(perp));
}

struct RepresentationCheck {
  AxiomReport report;
  double round_trip_residual = 0;  // max ||Psi^-1 Psi a - a||
  double isometry_residual = 0;    // max | ||Psi a|| - ||a|| |
};

/// Algebra isomorphism (unital, additive, multiplicative), isometry, order
/// isomorphism in both directions, spectrum preservation, and agreement of
/// Psi with the Stone map on projections (up to 6 atoms).
inline RepresentationCheck verify_representation(const FunctionalRepresentation& R, std::uint64_t seed = 0,
                                                 int samples = 32) {
  RepresentationCheck out;
  auto& r = out.report;
  const double tolerance = tol::report_tolerance();
  const auto& A = R.source();
  const auto& F = R.target();
  const std::size_t k = R.points();
  {
    bool ok = negligible((R.projection(k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1) - A.unit()).matrix(), 1.0);
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < k && w.empty(); ++i) {
      if (!is_projection(R.atoms()[i])) w = {i};
      for (std::size_t j = i + 1; j < k && w.empty(); ++j)
        if (!product_is_zero(R.atoms()[i], R.atoms()[j])) w = {i, j};
    }
    r.add("atoms are orthogonal projections summing to 1", ok && w.empty(), w);
  }
  r.add("unital", norm(R(A.unit()) - F.unit()) <= tolerance);

  std::mt19937_64 rng(seed);
  std::vector<SymMatrix> xs(R.atoms());
  for (int i = 0; i < samples; ++i) xs.push_back(R.random_member(rng, 2.0));
  std::vector<std::size_t> additive, multiplicative, round_trip, isometric, order, spectral;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto& a = xs[i];
    const auto fa = R(a);
    const double s = tol::scale(norm(a));
    const double rt = norm(R.inverse(fa) - a);
    out.round_trip_residual = std::max(out.round_trip_residual, rt);
    if (rt > tolerance * s || norm(R(R.inverse(fa)) - fa) > tolerance * s) round_trip.push_back(i);
    const double iso = std::abs(norm(fa) - norm(a));
    out.isometry_residual = std::max(out.isometry_residual, iso);
    if (iso > tolerance * s) isometric.push_back(i);
    // order both ways: a, |a| and a - min(a) v
    const auto shifted = a - min_eigenvalue(a);
    for (const auto& b : {a, abs(a), shifted})
      if (in_positive_cone(b) != in_positive_cone(R(b))) order.push_back(i);
    {
      auto sa = spectrum(a);
      std::vector<double> values(fa.values().data(), fa.values().data() + fa.size());
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end(),
                               [&](double x, double y) { return std::abs(x - y) <= tol::kRank * s; }),
                   values.end());
      bool same = sa.size() == values.size();
      for (std::size_t j = 0; j < sa.size() && same; ++j) same = std::abs(sa[j] - values[j]) <= tolerance * s;
      if (!same) spectral.push_back(i);
    }
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const auto& b = xs[j];
      const double sb = s * tol::scale(norm(b));
      if (norm(R(a + b) - (fa + R(b))) > tolerance * sb) additive.push_back(i);
      if (norm(R(jordan(a, b)) - product(fa, R(b))) > tolerance * sb) multiplicative.push_back(i);
    }
  }
  auto first = [](const std::vector<std::size_t>& v) { return v.empty() ? v : std::vector<std::size_t>{v.front()}; };
  r.add("additive", additive.empty(), first(additive));
  r.add("multiplicative", multiplicative.empty(), first(multiplicative));
  r.add("round trip", round_trip.empty(), first(round_trip));
  r.add("isometric", isometric.empty(), first(isometric));
  r.add("order isomorphism", order.empty(), first(order));
  r.add("spectrum preserved", spectral.empty(), first(spectral));

  if (k <= 6) {
    const auto P = projection_lattice(R);
    const auto X = stone_space(P);
    bool ok = X.size() == k && verify_stone(X).ok();
    std::vector<std::size_t> w;
    for (Elem m = 0; m < P.size() && ok && w.empty(); ++m)
      if (norm(R(R.projection(m)) - stone_indicator(X, m)) > tolerance) w = {m};
    r.add("psi is the Stone map on projections", ok && w.empty(), w);
  } else {
    r.add("psi is the Stone map on projections", true, {}, "skipped above 6 atoms");
  }
  return out;
}

/// gamma = rho o Psi^-1, as a probability vector: gamma(x_i) = rho(q_i).
inline LinearFunctional<FunctionAlgebra> transport_state(const FunctionalRepresentation& R,
                                                         const LinearFunctional<SymAlgebra>& rho) {
  Eigen::VectorXd mu(static_cast<Eigen::Index>(R.points()));
  for (std::size_t i = 0; i < R.points(); ++i) mu(static_cast<Eigen::Index>(i)) = rho(R.atoms()[i]);
  return {RealFunction(mu)};
}

/// rho = gamma o Psi, with density sum gamma_i q_i / tr(q_i) inside A.
inline LinearFunctional<SymAlgebra> pull_back_state(const FunctionalRepresentation& R,
                                                    const LinearFunctional<FunctionAlgebra>& gamma) {
  R.target().require(gamma.density);
  SymMatrix d = R.source().zero();
  for (std::size_t i = 0; i < R.points(); ++i) d += (gamma.density[i] / R.atoms()[i].trace()) * R.atoms()[i];
  return {d};
}

/// Vertices of S(A) in the coordinates rho(q_i), where positivity on A
/// means positivity on the atoms that generate its cone; returned as
/// densities inside A.
inline std::vector<LinearFunctional<SymAlgebra>> algebra_extremal_states(const FunctionalRepresentation& R) {
  const std::size_t k = R.points();
  HPolytope p(k);
  p.add_equality(RationalVector(k, Rational(1)), 1);  // rho(1) = sum rho(q_i)
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector row(k, Rational(0));
    row[i] = -1;
    p.add_inequality(std::move(row), 0);
  }
  std::vector<LinearFunctional<SymAlgebra>> out;
  for (const auto& v : enumerate_vertices(p)) {
    Eigen::VectorXd g(static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < k; ++i) g(static_cast<Eigen::Index>(i)) = to_double(v[i]);
    out.push_back(pull_back_state(R, {RealFunction(g)}));
  }
  return out;
}

/// The four extremality conditions and the min rule for a state on A,
/// evaluated on R^X through Psi.
inline ExtremalCharacterization extremal_commutative_characterization(const FunctionalRepresentation& R,
                                                                      const LinearFunctional<SymAlgebra>& rho) {
  return extremal_commutative_characterization(R.target(), transport_state(R, rho));
}

// ---------------------------------------------------------------------------
// Rickart property and completeness of R^X

/// Rickart: with p = 1 - carrier(f), fg = 0 iff g = pg, over the point
/// indicators and `sample`. The projections form a complete Boolean
/// algebra; ascending chains of effects built from `sample` have their last
/// element as supremum.
inline AxiomReport check_rickart_completeness(const FunctionAlgebra& F, std::span<const RealFunction> sample) {
  AxiomReport r;
  const std::size_t n = F.size();
  std::vector<RealFunction> fs{F.zero(), F.unit()};
  for (const auto& b : F.basis()) fs.push_back(b);
  for (const auto& s : sample) {
    F.require(s);
    fs.push_back(s);
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < fs.size() && w.empty(); ++i) {
      const auto p = F.unit() - carrier(fs[i]);
      if (!is_projection(p)) w = {i};
      for (std::size_t j = 0; j < fs.size() && w.empty(); ++j) {
        const bool annihilates = product_is_zero(fs[i], fs[j]);
        if (annihilates != (product(p, fs[j]) == fs[j])) w = {i, j};
      }
    }
    r.add("Rickart property", w.empty(), w);
  }
  if (n <= 6) {
    const auto c = classify(models::boolean_lattice(n).base());
    r.add("projections form a complete Boolean algebra", c.is_boolean && c.is_lattice_complete && c.is_sigma_complete);
  } else {
    r.add("projections form a complete Boolean algebra", true, {}, "finite Boolean algebra");
  }
  {
    // e_k = max(e_{k-1}, s_k) clipped into [0, 1]: ascending and eventually constant
    std::vector<RealFunction> chain{F.zero()};
    for (const auto& s : fs) {
      Eigen::VectorXd v = s.values().cwiseAbs().cwiseMin(1.0).cwiseMax(chain.back().values());
      chain.emplace_back(v);
    }
    const auto sup = ascending_supremum(std::span<const RealFunction>(chain));
    bool ok = sup == chain.back();
    for (const auto& e : chain) ok = ok && leq(e, sup);
    r.add("monotone completeness on finite chains", ok);
  }
  r.add("dense subalgebra equals C(X,R)", true, {}, "no finite witness separates them");
  return r;
}

}  // namespace synaptica
