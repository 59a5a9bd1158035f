#pragma once

// Finite-dimensional order-unit normed spaces: the symmetric matrices with
// the PSD cone, functions on a finite set with the pointwise cone, and the
// real line. Each space exposes coordinates in an orthonormal basis of its
// trace (or sum) pairing so linear maps can be handled as matrices.

#include <synaptica/real_function.hpp>
#include <synaptica/sym_matrix.hpp>
#include <synaptica/tolerance.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace synaptica {

// ---------------------------------------------------------------------------
// Cones

inline double min_eigenvalue(const SymMatrix& a) {
  if (a.n() == 0) return 0.0;
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a.matrix(), Eigen::EigenvaluesOnly).eigenvalues()(0);
}

/// PSD test: min eigenvalue >= -1e-9 * max(1, ||a||).
inline bool in_positive_cone(const SymMatrix& a) {
  if (a.n() == 0) return true;
  const auto values = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a.matrix(), Eigen::EigenvaluesOnly).eigenvalues();
  return values(0) >= -tol::kSymCone * tol::scale(values.cwiseAbs().maxCoeff());
}

inline bool in_positive_cone(const RealFunction& a) {
  return a.size() == 0 || a.values().minCoeff() >= -tol::kFunctionCone;
}

inline bool in_positive_cone(double x) { return x >= -tol::kFunctionCone; }
inline double norm(double x) { return std::abs(x); }
inline double pairing(double w, double a) { return w * a; }

/// a <= b in the cone order.
template <class E>
  requires requires(const E& x) { in_positive_cone(x); }
bool leq(const E& a, const E& b) {
  return in_positive_cone(b - a);
}

// ---------------------------------------------------------------------------
// Spaces

/// Sym(n) with the PSD cone and v = identity. Coordinates use the basis
/// E_ii and (E_ij + E_ji)/sqrt(2), orthonormal for tr(ab).
class SymAlgebra {
 public:
  using element_type = SymMatrix;

  explicit SymAlgebra(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  std::size_t dimension() const { return n_ * (n_ + 1) / 2; }
  std::string name() const { return "Sym(" + std::to_string(n_) + ")"; }
  bool is_commutative() const { return n_ <= 1; }
  SymMatrix unit() const { return SymMatrix::identity(n_); }
  SymMatrix zero() const { return SymMatrix::zero(n_); }

  void require(const SymMatrix& a) const {
    if (a.n() != n_) throw std::invalid_argument("instance mismatch");
  }

  Eigen::VectorXd coords(const SymMatrix& a) const {
    require(a);
    Eigen::VectorXd c(static_cast<Eigen::Index>(dimension()));
    Eigen::Index k = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      c(k++) = a(i, i);
      for (std::size_t j = i + 1; j < n_; ++j) c(k++) = std::sqrt(2.0) * a(i, j);
    }
    return c;
  }

  SymMatrix from_coords(const Eigen::VectorXd& c) const {
    if (static_cast<std::size_t>(c.size()) != dimension()) throw std::invalid_argument("instance mismatch");
    const auto n = static_cast<Eigen::Index>(n_);
    Eigen::MatrixXd m(n, n);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      m(i, i) = c(k++);
      for (Eigen::Index j = i + 1; j < n; ++j) m(i, j) = m(j, i) = c(k++) / std::sqrt(2.0);
    }
    return SymMatrix(m);
  }

  std::vector<SymMatrix> basis() const {
    std::vector<SymMatrix> out;
    for (std::size_t k = 0; k < dimension(); ++k)
      out.push_back(from_coords(Eigen::VectorXd::Unit(static_cast<Eigen::Index>(dimension()), static_cast<Eigen::Index>(k))));
    return out;
  }

 private:
  std::size_t n_;
};

/// R^X for a finite set X with the pointwise cone and v = 1.
class FunctionAlgebra {
 public:
  using element_type = RealFunction;

  explicit FunctionAlgebra(std::vector<std::string> points) : points_(std::move(points)) {}
  explicit FunctionAlgebra(std::size_t size) {
    for (std::size_t i = 1; i <= size; ++i) points_.push_back("x" + std::to_string(i));
  }

  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  std::string name() const { return "R^" + std::to_string(size()); }
  bool is_commutative() const { return true; }
  RealFunction unit() const { return RealFunction::constant(size(), 1.0); }
  RealFunction zero() const { return RealFunction::constant(size(), 0.0); }

  void require(const RealFunction& a) const {
    if (a.size() != size()) throw std::invalid_argument("instance mismatch");
  }

  Eigen::VectorXd coords(const RealFunction& a) const {
    require(a);
    return a.values();
  }
  RealFunction from_coords(const Eigen::VectorXd& c) const {
    if (static_cast<std::size_t>(c.size()) != size()) throw std::invalid_argument("instance mismatch");
    return RealFunction(c);
  }
  std::vector<RealFunction> basis() const {
    std::vector<RealFunction> out;
    for (std::size_t x = 0; x < size(); ++x) out.push_back(RealFunction::point_indicator(size(), x));
    return out;
  }

 private:
  std::vector<std::string> points_;
};

/// The scalars, with v = 1; the usual target of states.
class RealLine {
 public:
  using element_type = double;

  std::size_t dimension() const { return 1; }
  std::string name() const { return "R"; }
  bool is_commutative() const { return true; }
  double unit() const { return 1.0; }
  double zero() const { return 0.0; }
  void require(double) const {}
  Eigen::VectorXd coords(double a) const { return Eigen::VectorXd::Constant(1, a); }
  double from_coords(const Eigen::VectorXd& c) const {
    if (c.size() != 1) throw std::invalid_argument("instance mismatch");
    return c(0);
  }
  std::vector<double> basis() const { return {1.0}; }
};

template <class V>
concept OrderUnitSpace = requires(const V& space, const typename V::element_type& a, const Eigen::VectorXd& c) {
  { space.unit() } -> std::same_as<typename V::element_type>;
  { space.zero() } -> std::same_as<typename V::element_type>;
  { space.dimension() } -> std::convertible_to<std::size_t>;
  { space.coords(a) } -> std::same_as<Eigen::VectorXd>;
  { space.from_coords(c) } -> std::same_as<typename V::element_type>;
  { space.basis() } -> std::same_as<std::vector<typename V::element_type>>;
  { in_positive_cone(a) } -> std::same_as<bool>;
  { norm(a) } -> std::same_as<double>;
};

// ---------------------------------------------------------------------------
// Norm and unit interval

/// Closed-form order-unit norm (max |eigenvalue| or max |value|).
template <OrderUnitSpace V>
double order_unit_norm(const V& space, const typename V::element_type& a) {
  space.require(a);
  return norm(a);
}

/// inf{l > 0 : -l v <= a <= l v}, located by bisection using only cone
/// tests. Accurate to the cone slack.
template <OrderUnitSpace V>
double norm_by_bisection(const V& space, const typename V::element_type& a, int iterations = 200) {
  const auto v = space.unit();
  auto inside = [&](double l) { return in_positive_cone(l * v - a) && in_positive_cone(l * v + a); };
  if (inside(0.0)) return 0.0;
  double hi = 1.0;
  while (!inside(hi)) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < iterations && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (inside(mid) ? hi : lo) = mid;
  }
  return hi;
}

/// 0 <= a <= v.
template <OrderUnitSpace V>
bool in_unit_interval(const V& space, const typename V::element_type& a) {
  space.require(a);
  return in_positive_cone(a) && in_positive_cone(space.unit() - a);
}

/// a = b - c with b = ceil(||a||) v and c = b - a, both positive.
template <OrderUnitSpace V>
std::pair<typename V::element_type, typename V::element_type> positive_decomposition(
    const V& space, const typename V::element_type& a) {
  const auto b = std::ceil(norm(a)) * space.unit();
  return {b, b - a};
}

// ---------------------------------------------------------------------------
// Random elements

/// Standard Gaussian coordinates.
template <OrderUnitSpace V>
typename V::element_type random_element(const V& space, std::mt19937_64& rng, double spread = 1.0) {
  std::normal_distribution<double> g(0.0, spread);
  Eigen::VectorXd c(static_cast<Eigen::Index>(space.dimension()));
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = g(rng);
  return space.from_coords(c);
}

/// A random element of the unit interval E(V, v), with spectrum strictly
/// inside [0, 1]: v/2 + w a / (2 ||a||) for w uniform in [0.2, 1).
template <OrderUnitSpace V>
typename V::element_type random_effect(const V& space, std::mt19937_64& rng) {
  const auto a = random_element(space, rng);
  const double w = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
  const double s = norm(a);
  if (s == 0.0) return 0.5 * space.unit();
  return 0.5 * space.unit() + (0.5 * w / s) * a;
}

// ---------------------------------------------------------------------------
// Extension of effect-algebra morphisms

/// Extends an effect-algebra morphism w : E(V,v) -> E(W,w), given as a black
/// box, to the positive linear map xi : V -> W with
///   w+(x) = m w(x/m) for x >= 0 (any m with x <= m v),
///   xi(a) = w+(b) - w+(c), b = n v, c = b - a, n = ceil(||a||) + 1.
/// Construction spot-checks normalization and additivity on random
/// orthogonal pairs and throws "not an effect morphism" on a violation.
template <OrderUnitSpace V, OrderUnitSpace W>
class EffectMorphismExtension {
 public:
  using Source = typename V::element_type;
  using Target = typename W::element_type;
  using Oracle = std::function<Target(const Source&)>;

  EffectMorphismExtension(V source, W target, Oracle omega, std::uint64_t seed = 0, int samples = 32)
      : source_(std::move(source)), target_(std::move(target)), omega_(std::move(omega)) {
    const double tolerance = tol::report_tolerance();
    auto fail = [] { throw std::invalid_argument("not an effect morphism"); };
    if (norm(omega_(source_.unit()) - target_.unit()) > tolerance) fail();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    for (int i = 0; i < samples; ++i) {
      // e + f <= v by construction
      const auto x = random_effect(source_, rng);
      const auto y = random_effect(source_, rng);
      const double s = norm(x + y) / u(rng);
      const auto e = (1.0 / s) * x;
      const auto f = (1.0 / s) * y;
      const auto we = omega_(e);
      const auto wf = omega_(f);
      if (!in_unit_interval(target_, we) || !in_unit_interval(target_, wf)) fail();
      if (norm(omega_(e + f) - (we + wf)) > tolerance * tol::scale(norm(we) + norm(wf))) fail();
    }
  }

  /// w+(x) = m w(x/m) for x in the positive cone.
  Target positive_part(const Source& x, double m) const { return m * omega_((1.0 / m) * x); }

  Target operator()(const Source& a) const {
    source_.require(a);
    const double n = std::ceil(norm(a)) + 1.0;
    const Source b = n * source_.unit();
    const Source c = b - a;  // 0 <= c <= 2n v
    return positive_part(b, n) - positive_part(c, 2.0 * n);
  }

  /// The map in coordinates: column j holds coords(xi(basis_j)).
  Eigen::MatrixXd matrix() const {
    const auto basis = source_.basis();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(target_.dimension()), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = target_.coords((*this)(basis[j]));
    return m;
  }

  /// The original morphism, evaluated on an effect.
  Target restrict(const Source& e) const { return omega_(e); }

  const V& source() const { return source_; }
  const W& target() const { return target_; }

 private:
  V source_;
  W target_;
  Oracle omega_;
};

}  // namespace synaptica
