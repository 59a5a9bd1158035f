#pragma once

// States. On a finite effect algebra a state is a value table checked
// exactly, and the state space is an exact rational polytope. On R^X and
// Sym(n) a state is rho(a) = <d, a> for a probability vector or density
// matrix d. Also here: the restriction/extension correspondence with states on
// the unit interval, and the tests that characterize extremal states of
// commutative algebras.

#include <synaptica/effect_algebra.hpp>
#include <synaptica/order_unit_space.hpp>
#include <synaptica/polytope.hpp>
#include <synaptica/rational.hpp>
#include <synaptica/report.hpp>
#include <synaptica/synaptic.hpp>
#include <synaptica/tolerance.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace synaptica {

// ---------------------------------------------------------------------------
// States on finite effect algebras

/// Exact check: values in [0, 1], w(1) = 1 and w(e (+) f) = w(e) + w(f)
/// whenever the orthosum is defined.
inline AxiomReport check_state(const FiniteEffectAlgebra& E, const RationalVector& w) {
  AxiomReport r;
  const std::size_t n = E.size();
  if (w.size() != n) {
    r.add("value count", false, {}, "expected " + std::to_string(n) + " values");
    return r;
  }
  std::vector<std::size_t> range;
  for (Elem e = 0; e < n && range.empty(); ++e)
    if (w[e] < 0 || w[e] > 1) range = {e};
  r.add("values in [0,1]", range.empty(), range);
  r.add("w(1) = 1", w[E.one()] == 1, w[E.one()] == 1 ? std::vector<std::size_t>{} : std::vector<std::size_t>{E.one()});
  std::vector<std::size_t> additivity;
  for (Elem e = 0; e < n && additivity.empty(); ++e)
    for (Elem f = 0; f < n && additivity.empty(); ++f)
      if (auto s = E.osum(e, f); s && w[*s] != w[e] + w[f]) additivity = {e, f, *s};
  r.add("additivity", additivity.empty(), additivity);
  return r;
}

inline bool is_state(const FiniteEffectAlgebra& E, const RationalVector& w) { return check_state(E, w).ok(); }

/// S(E) in the coordinates w(e), one per element.
struct StatePolytope {
  HPolytope polytope;
  std::vector<std::string> coordinates;
  std::size_t dimension = 0;  // dimension of the affine hull of the equalities
};

inline StatePolytope state_polytope(const FiniteEffectAlgebra& E) {
  const std::size_t n = E.size();
  StatePolytope sp{HPolytope(n), {}, 0};
  for (Elem e = 0; e < n; ++e) sp.coordinates.push_back("w(" + E.label(e) + ")");
  auto unit_row = [n](Elem e, int c) {
    RationalVector row(n, Rational(0));
    row[e] = c;
    return row;
  };
  sp.polytope.add_equality(unit_row(E.one(), 1), 1);
  for (Elem e = 0; e < n; ++e)
    for (Elem f = e; f < n; ++f)
      if (auto s = E.osum(e, f)) {
        RationalVector row(n, Rational(0));
        row[*s] += 1;
        row[e] -= 1;
        row[f] -= 1;
        sp.polytope.add_equality(std::move(row), 0);
      }
  for (Elem e = 0; e < n; ++e) {
    sp.polytope.add_inequality(unit_row(e, -1), 0);
    sp.polytope.add_inequality(unit_row(e, 1), 1);
  }
  sp.dimension = free_dimension(sp.polytope);
  return sp;
}

struct ExtremalStates {
  std::vector<RationalVector> vertices;
  /// Set when the polytope is empty (a stateless structure).
  std::optional<FarkasCertificate> certificate;
  /// Every vertex lies in the polytope, has full active rank, and is not
  /// the midpoint of two other vertices.
  bool verified = false;

  bool stateless() const { return certificate.has_value(); }
};

inline ExtremalStates extremal_states(const StatePolytope& sp) {
  ExtremalStates out;
  const auto f = feasibility(sp.polytope);
  if (!f.feasible()) {
    out.certificate = f.certificate;
    out.verified = verify_certificate(sp.polytope, *f.certificate);
    return out;
  }
  out.vertices = enumerate_vertices(sp.polytope);
  bool ok = !out.vertices.empty();
  for (const auto& v : out.vertices) ok = ok && is_vertex(sp.polytope, v);
  const std::size_t m = out.vertices.size();
  for (std::size_t i = 0; i < m && ok; ++i)
    for (std::size_t j = 0; j < m && ok; ++j)
      for (std::size_t k = j + 1; k < m && ok; ++k) {
        if (i == j || i == k) continue;
        bool midpoint = true;
        for (std::size_t c = 0; c < sp.polytope.dim && midpoint; ++c)
          midpoint = 2 * out.vertices[i][c] == out.vertices[j][c] + out.vertices[k][c];
        ok = !midpoint;
      }
  out.verified = ok;
  return out;
}

inline ExtremalStates extremal_states(const FiniteEffectAlgebra& E) { return extremal_states(state_polytope(E)); }

// ---------------------------------------------------------------------------
// States on order-unit spaces

/// rho(a) = <density, a>: a probability vector on R^X, a density matrix on
/// Sym(n). Any linear functional has this form.
template <OrderUnitSpace V>
struct LinearFunctional {
  typename V::element_type density;

  double operator()(const typename V::element_type& a) const { return pairing(density, a); }
};

inline LinearFunctional<FunctionAlgebra> point_evaluation(const FunctionAlgebra& F, std::size_t x) {
  if (x >= F.size()) throw std::out_of_range("no such point");
  return {RealFunction::point_indicator(F.size(), x)};
}

/// The pure state a -> <u, a u> for a unit vector u.
inline LinearFunctional<SymAlgebra> vector_state(const SymAlgebra& A, const Eigen::VectorXd& u) {
  if (static_cast<std::size_t>(u.size()) != A.n()) throw std::invalid_argument("instance mismatch");
  return {SymMatrix::rank_one(u)};
}

/// Normalization, plus positivity both on the density itself (both cones
/// are self-dual) and on sampled positive elements.
template <OrderUnitSpace V>
AxiomReport check_state(const V& space, const LinearFunctional<V>& rho, std::uint64_t seed = 0, int samples = 64) {
  space.require(rho.density);
  const double tolerance = tol::report_tolerance();
  AxiomReport r;
  r.add("rho(v) = 1", std::abs(rho(space.unit()) - 1.0) <= tolerance);
  r.add("density in positive cone", in_positive_cone(rho.density));
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> bad;
  for (int i = 0; i < samples && bad.empty(); ++i) {
    const auto x = random_element(space, rng);
    // ||x|| v + x and random effects are positive
    const auto a = i % 2 ? norm(x) * space.unit() + x : random_effect(space, rng);
    if (rho(a) < -tolerance * tol::scale(norm(a))) bad = {static_cast<std::size_t>(i)};
  }
  r.add("positive on sampled cone elements", bad.empty(), bad);
  return r;
}

template <OrderUnitSpace V>
bool is_state(const V& space, const LinearFunctional<V>& rho) {
  return check_state(space, rho).ok();
}

/// Pure states: rank-one density matrices, point masses.
inline bool is_extremal_state(const SymAlgebra& A, const LinearFunctional<SymAlgebra>& rho) {
  if (!is_state(A, rho)) return false;
  const auto v = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(rho.density.matrix(), Eigen::EigenvaluesOnly).eigenvalues();
  const double tolerance = tol::report_tolerance();
  for (Eigen::Index i = 0; i + 1 < v.size(); ++i)
    if (std::abs(v(i)) > tolerance) return false;
  return std::abs(v(v.size() - 1) - 1.0) <= tolerance;
}
inline bool is_extremal_state(const FunctionAlgebra& F, const LinearFunctional<FunctionAlgebra>& rho) {
  if (!is_state(F, rho)) return false;
  std::size_t ones = 0;
  for (std::size_t x = 0; x < F.size(); ++x) {
    const double m = rho.density[x];
    if (std::abs(m - 1.0) <= tol::kFunctionCone) ++ones;
    else if (std::abs(m) > tol::kFunctionCone) return false;
  }
  return ones == 1;
}

/// The extremal states that decide positivity and norm of `a`: all point
/// evaluations on R^X, the eigenvector states of a on Sym(n).
inline std::vector<LinearFunctional<FunctionAlgebra>> extremal_family(const FunctionAlgebra& F, const RealFunction& a) {
  F.require(a);
  std::vector<LinearFunctional<FunctionAlgebra>> out;
  for (std::size_t x = 0; x < F.size(); ++x) out.push_back(point_evaluation(F, x));
  return out;
}
inline std::vector<LinearFunctional<SymAlgebra>> extremal_family(const SymAlgebra& A, const SymMatrix& a) {
  A.require(a);
  const auto e = eigen_decompose(a);
  std::vector<LinearFunctional<SymAlgebra>> out;
  for (Eigen::Index i = 0; i < e.vectors.cols(); ++i) out.push_back(vector_state(A, e.vectors.col(i)));
  return out;
}

template <OrderUnitSpace V>
struct FnlPropsReport {
  bool positive = false;  // cone test
  double min_value = 0;   // min of rho(a) over the family
  double sup_abs = 0;     // sup of |rho(a)| over the family
  double norm = 0;        // order-unit norm
  std::size_t sup_index = 0;
  /// A state with rho(a) < 0, present when a is not positive.
  std::optional<LinearFunctional<V>> witness;
  bool order_determined = false;
  bool norm_attained = false;

  bool ok() const { return order_determined && norm_attained; }
};

/// States determine the order (a >= 0 iff rho(a) >= 0 for all states) and the
/// norm (||a|| = sup |rho(a)|), checked on the extremal family of a.
template <OrderUnitSpace V>
FnlPropsReport<V> check_fnlprops(const V& space, const typename V::element_type& a) {
  FnlPropsReport<V> r;
  r.positive = in_positive_cone(a);
  r.norm = order_unit_norm(space, a);
  const auto family = extremal_family(space, a);
  std::size_t min_index = 0;
  r.min_value = family.empty() ? 0.0 : family[0](a);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const double value = family[i](a);
    if (value < r.min_value) {
      r.min_value = value;
      min_index = i;
    }
    if (std::abs(value) > r.sup_abs) {
      r.sup_abs = std::abs(value);
      r.sup_index = i;
    }
  }
  const double slack = tol::report_tolerance() * tol::scale(r.norm);
  if (!r.positive && !family.empty()) r.witness = family[min_index];
  r.order_determined = r.positive == (r.min_value >= -slack);
  r.norm_attained = std::abs(r.sup_abs - r.norm) <= slack;
  return r;
}

template <OrderUnitSpace V>
struct FunctionalNormReport {
  double norm = 0;         // sup |rho(a)| over ||a|| <= 1
  double at_unit = 0;      // rho(v)
  double sampled_sup = 0;  // over a random unit-ball sample; never above `norm`
  bool positive = false;
  bool state = false;
  bool positivity_law = false;  // rho positive iff ||rho|| = rho(v)
  bool state_law = false;       // rho a state iff ||rho|| = rho(v) = 1
  typename V::element_type maximizer;
};

/// The unit ball maximizer of |rho| is the sign pattern of the density:
/// sign(mu) on R^X, sum sign(l_i) u_i u_i^T on Sym(n).
inline RealFunction norm_maximizer(const RealFunction& density) {
  return density.map([](double m) { return m < 0 ? -1.0 : 1.0; });
}
inline SymMatrix norm_maximizer(const SymMatrix& density) {
  return apply_eigenwise(eigen_decompose(density), [](double l) { return l < 0 ? -1.0 : 1.0; });
}

template <OrderUnitSpace V>
FunctionalNormReport<V> functional_norm(const V& space, const LinearFunctional<V>& rho, std::uint64_t seed = 0,
                                        int samples = 256) {
  space.require(rho.density);
  FunctionalNormReport<V> r;
  r.maximizer = norm_maximizer(rho.density);
  r.norm = std::abs(rho(r.maximizer));
  r.at_unit = rho(space.unit());
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const auto a = random_element(space, rng);
    const double s = norm(a);
    if (s > 0) r.sampled_sup = std::max(r.sampled_sup, std::abs(rho(a)) / s);
  }
  const double tolerance = tol::report_tolerance() * tol::scale(r.norm);
  r.positive = in_positive_cone(rho.density);
  r.state = r.positive && std::abs(r.at_unit - 1.0) <= tolerance;
  r.positivity_law = r.positive == (std::abs(r.norm - r.at_unit) <= tolerance);
  r.state_law = r.state == (std::abs(r.norm - 1.0) <= tolerance && std::abs(r.at_unit - 1.0) <= tolerance);
  return r;
}

// ---------------------------------------------------------------------------
// rho <-> omega

/// A state on the unit interval E(V, v), as a black box.
template <OrderUnitSpace V>
using EffectState = std::function<double(const typename V::element_type&)>;

/// omega = rho restricted to E(V, v); throws "not an effect" outside it.
template <OrderUnitSpace V>
EffectState<V> restrict_state(const V& space, const LinearFunctional<V>& rho) {
  return [space, rho](const typename V::element_type& e) {
    if (!in_unit_interval(space, e)) throw std::invalid_argument("not an effect");
    return rho(e);
  };
}

/// The unique state extending omega, through the effect-morphism extension
/// into (R, 1). Coordinates are orthonormal for the pairing, so the row of
/// the extension matrix is the density.
template <OrderUnitSpace V>
LinearFunctional<V> extend_state(const V& space, EffectState<V> omega, std::uint64_t seed = 0) {
  const EffectMorphismExtension<V, RealLine> xi(space, RealLine{}, std::move(omega), seed);
  const Eigen::VectorXd row = xi.matrix().row(0).transpose();
  return {space.from_coords(row)};
}

/// Extension of a state from a subspace of R^X containing 1, given by its
/// values on a spanning family (rows), to a state on R^X. Any feasible
/// probability vector is returned; none exists iff the data is not a state.
inline std::optional<RationalVector> extend_state_from_subspace(const RationalMatrix& spanning,
                                                                const RationalVector& values) {
  if (spanning.size() != values.size()) throw std::invalid_argument("value count mismatch");
  if (spanning.empty()) throw std::invalid_argument("empty subset");
  const std::size_t n = spanning.front().size();
  HPolytope p(n);
  for (std::size_t k = 0; k < spanning.size(); ++k) p.add_equality(spanning[k], values[k]);
  p.add_equality(RationalVector(n, Rational(1)), 1);
  for (std::size_t x = 0; x < n; ++x) {
    RationalVector row(n, Rational(0));
    row[x] = -1;
    p.add_inequality(std::move(row), 0);
  }
  return feasibility(p).point;
}

// ---------------------------------------------------------------------------
// Extremal states of commutative algebras

/// Vertices of S(R^X), as probability vectors.
inline std::vector<RationalVector> function_state_vertices(const FunctionAlgebra& F) {
  HPolytope simplex(F.size());
  simplex.add_equality(RationalVector(F.size(), Rational(1)), 1);
  for (std::size_t x = 0; x < F.size(); ++x) {
    RationalVector row(F.size(), Rational(0));
    row[x] = -1;
    simplex.add_inequality(std::move(row), 0);
  }
  return enumerate_vertices(simplex);
}

struct ExtremalCharacterization {
  bool extremal = false;          // vertex of the probability simplex
  bool point_evaluation = false;  // rho = gamma_x for some x
  bool multiplicative = false;    // rho(ab) = rho(a) rho(b)
  bool sharp = false;             // rho(p) in {0, 1} for every projection p
  bool min_rule = false;          // rho(a ^ b) = min(rho(a), rho(b)) for a, b >= 0

  std::optional<std::size_t> point;
  std::vector<std::size_t> multiplicative_witness;  // points (x, y)
  std::vector<std::size_t> sharp_witness;           // support of the projection
  std::optional<std::pair<RealFunction, RealFunction>> min_rule_witness;

  bool agree() const {
    return extremal == point_evaluation && extremal == multiplicative && extremal == sharp && extremal == min_rule;
  }
};

/// Lattice meet in R^X: pointwise minimum.
inline RealFunction lattice_meet(const RealFunction& a, const RealFunction& b) {
  a.check_same(b);
  return RealFunction(Eigen::VectorXd(a.values().cwiseMin(b.values())));
}

/// Evaluates the four equivalent conditions and the min rule. Projections are
/// scanned exhaustively up to 20 points, beyond that singletons and their
/// complements. Positive pairs: all pairs of distinct point indicators plus
/// `pairs`.
inline ExtremalCharacterization extremal_commutative_characterization(
    const FunctionAlgebra& F, const LinearFunctional<FunctionAlgebra>& rho,
    std::span<const std::pair<RealFunction, RealFunction>> pairs = {}) {
  F.require(rho.density);
  constexpr double kExact = tol::kFunctionCone;
  const std::size_t n = F.size();
  ExtremalCharacterization c;

  for (const auto& v : function_state_vertices(F)) {
    bool same = true;
    for (std::size_t x = 0; x < n && same; ++x) same = std::abs(to_double(v[x]) - rho.density[x]) <= kExact;
    c.extremal = c.extremal || same;
  }

  const auto basis = F.basis();
  for (std::size_t x = 0; x < n && !c.point; ++x) {
    bool match = std::abs(rho(F.unit()) - 1.0) <= kExact;
    for (std::size_t y = 0; y < n && match; ++y) match = std::abs(rho(basis[y]) - basis[y][x]) <= kExact;
    if (match) c.point = x;
  }
  c.point_evaluation = c.point.has_value();

  c.multiplicative = true;
  for (std::size_t x = 0; x < n && c.multiplicative; ++x)
    for (std::size_t y = x; y < n && c.multiplicative; ++y)
      if (std::abs(rho(product(basis[x], basis[y])) - rho(basis[x]) * rho(basis[y])) > kExact) {
        c.multiplicative = false;
        c.multiplicative_witness = {x, y};
      }

  auto sharp_on = [&](const std::vector<std::size_t>& support) {
    const double value = rho(RealFunction::indicator(n, support));
    if (std::abs(value) <= kExact || std::abs(value - 1.0) <= kExact) return true;
    c.sharp_witness = support;
    return false;
  };
  c.sharp = true;
  if (n <= 20) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && c.sharp; ++mask) {
      std::vector<std::size_t> support;
      for (std::size_t x = 0; x < n; ++x)
        if (mask >> x & 1) support.push_back(x);
      c.sharp = sharp_on(support);
    }
  } else {
    for (std::size_t x = 0; x < n && c.sharp; ++x) {
      std::vector<std::size_t> rest;
      for (std::size_t y = 0; y < n; ++y)
        if (y != x) rest.push_back(y);
      c.sharp = sharp_on({x}) && sharp_on(rest);
    }
  }

  c.min_rule = true;
  auto check_pair = [&](const RealFunction& a, const RealFunction& b) {
    if (!in_positive_cone(a) || !in_positive_cone(b)) throw std::invalid_argument("not in positive cone");
    if (std::abs(rho(lattice_meet(a, b)) - std::min(rho(a), rho(b))) > kExact) {
      c.min_rule = false;
      c.min_rule_witness = {a, b};
    }
  };
  for (std::size_t x = 0; x < n && c.min_rule; ++x)
    for (std::size_t y = x + 1; y < n && c.min_rule; ++y) check_pair(basis[x], basis[y]);
  for (std::size_t i = 0; i < pairs.size() && c.min_rule; ++i) check_pair(pairs[i].first, pairs[i].second);
  return c;
}

/// Sym(n) is commutative only for n <= 1, where it is R^n.
inline ExtremalCharacterization extremal_commutative_characterization(const SymAlgebra& A,
                                                                      const LinearFunctional<SymAlgebra>& rho) {
  if (!A.is_commutative()) throw std::invalid_argument("commutative algebras only");
  A.require(rho.density);
  const FunctionAlgebra F(A.n());
  Eigen::VectorXd mu(static_cast<Eigen::Index>(A.n()));
  for (std::size_t i = 0; i < A.n(); ++i) mu(static_cast<Eigen::Index>(i)) = rho.density(i, i);
  return extremal_commutative_characterization(F, {RealFunction(mu)});
}

}  // namespace synaptica
