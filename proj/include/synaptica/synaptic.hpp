#pragma once

// Synaptic-algebra operations over Sym(n) and R^X: Jordan and quadratic
// products, functional calculus (square root, absolute value, positive and
// negative parts, carrier, inverse), spectral resolutions, commutants and the
// projection lattice.
//
// Matrix rank decisions (carrier, eigenvalue clustering, invertibility,
// projection meets) all use kRank * max(1, ||a||). Function algebra
// operations are pointwise and exact.

#include <synaptica/order_unit_space.hpp>
#include <synaptica/real_function.hpp>
#include <synaptica/report.hpp>
#include <synaptica/sym_matrix.hpp>
#include <synaptica/tolerance.hpp>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace synaptica {

template <class E>
concept SynapticElement = std::same_as<E, SymMatrix> || std::same_as<E, RealFunction>;

template <SynapticElement E>
struct AlgebraOf;
template <>
struct AlgebraOf<SymMatrix> {
  using type = SymAlgebra;
};
template <>
struct AlgebraOf<RealFunction> {
  using type = FunctionAlgebra;
};

inline SymAlgebra algebra_of(const SymMatrix& a) { return SymAlgebra(a.n()); }
inline FunctionAlgebra algebra_of(const RealFunction& a) { return FunctionAlgebra(a.size()); }

// ---------------------------------------------------------------------------
// Products

/// a (.) b = (ab + ba)/2.
inline SymMatrix jordan(const SymMatrix& a, const SymMatrix& b) { return symmetric_part(product(a, b)); }
inline RealFunction jordan(const RealFunction& a, const RealFunction& b) { return product(a, b); }

template <SynapticElement E>
E square(const E& a) {
  return jordan(a, a);
}

/// ((a + b)^2 - (a - b)^2) / 4.
template <SynapticElement E>
E jordan_by_polarization(const E& a, const E& b) {
  return 0.25 * (square(a + b) - square(a - b));
}

/// aba = 2 a.(a.b) - a^2.b.
template <SynapticElement E>
E quadratic(const E& a, const E& b) {
  return 2.0 * jordan(a, jordan(a, b)) - jordan(square(a), b);
}

/// ab = ba, up to kRank relative to ||a||_F ||b||_F.
inline bool commute(const SymMatrix& a, const SymMatrix& b) {
  const Eigen::MatrixXd ab = product(a, b);
  return negligible(ab - ab.transpose(), a.matrix().norm() * b.matrix().norm());
}
inline bool commute(const RealFunction& a, const RealFunction& b) {
  a.check_same(b);
  return true;
}

/// ab = 0 in the enveloping algebra.
inline bool product_is_zero(const SymMatrix& a, const SymMatrix& b) {
  return negligible(product(a, b), a.matrix().norm() * b.matrix().norm());
}
inline bool product_is_zero(const RealFunction& a, const RealFunction& b) {
  return product(a, b).values().isZero(0.0);
}

/// Distance in the order-unit norm.
template <SynapticElement E>
double distance(const E& a, const E& b) {
  return norm(a - b);
}

// ---------------------------------------------------------------------------
// Functional calculus

inline SymMatrix sqrt(const SymMatrix& a) {
  if (!in_positive_cone(a)) throw std::invalid_argument("not in positive cone");
  return apply_eigenwise(eigen_decompose(a), [](double l) { return std::sqrt(std::max(l, 0.0)); });
}
inline RealFunction sqrt(const RealFunction& a) {
  if (!in_positive_cone(a)) throw std::invalid_argument("not in positive cone");
  return a.map([](double l) { return std::sqrt(std::max(l, 0.0)); });
}

/// |a| = (a^2)^(1/2), evaluated as sum |l| p_l on the eigendecomposition of a.
inline SymMatrix abs(const SymMatrix& a) {
  return apply_eigenwise(eigen_decompose(a), [](double l) { return std::abs(l); });
}
inline RealFunction abs(const RealFunction& a) {
  return a.map([](double l) { return std::abs(l); });
}

template <SynapticElement E>
struct Decomposition {
  E abs;  // |a|
  E pos;  // a+ = (|a| + a)/2
  E neg;  // a- = (|a| - a)/2
};

template <SynapticElement E>
Decomposition<E> decompose(const E& a) {
  E m = abs(a);
  return {m, 0.5 * (m + a), 0.5 * (m - a)};
}

/// Carrier: range projection of a (support indicator for functions).
inline SymMatrix carrier(const SymMatrix& a) {
  const auto e = eigen_decompose(a);
  const double cut = tol::kRank * tol::scale(e.values.size() ? e.values.cwiseAbs().maxCoeff() : 0.0);
  return apply_eigenwise(e, [cut](double l) { return std::abs(l) > cut ? 1.0 : 0.0; });
}
inline RealFunction carrier(const RealFunction& a) {
  return a.map([](double l) { return l != 0.0 ? 1.0 : 0.0; });
}

inline bool is_projection(const SymMatrix& p) {
  return negligible(product(p, p) - p.matrix(), p.matrix().norm());
}
inline bool is_projection(const RealFunction& p) {
  for (Eigen::Index i = 0; i < p.values().size(); ++i)
    if (p.values()(i) != 0.0 && p.values()(i) != 1.0) return false;
  return true;
}

template <SynapticElement E>
bool is_effect(const E& e) {
  return in_unit_interval(algebra_of(e), e);
}

/// e^2 <= e, the synaptic description of the unit interval.
template <SynapticElement E>
bool is_effect_by_square(const E& e) {
  return leq(square(e), e);
}

inline bool is_invertible(const SymMatrix& a) {
  if (a.n() == 0) return true;
  const auto values = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a.matrix(), Eigen::EigenvaluesOnly).eigenvalues();
  return values.cwiseAbs().minCoeff() > tol::kRank * tol::scale(values.cwiseAbs().maxCoeff());
}
inline bool is_invertible(const RealFunction& a) {
  return a.size() == 0 || (a.values().array() != 0.0).all();
}

inline SymMatrix inverse(const SymMatrix& a) {
  if (!is_invertible(a)) throw std::invalid_argument("not invertible");
  return apply_eigenwise(eigen_decompose(a), [](double l) { return 1.0 / l; });
}
inline RealFunction inverse(const RealFunction& a) {
  if (!is_invertible(a)) throw std::invalid_argument("not invertible");
  return a.map([](double l) { return 1.0 / l; });
}

// ---------------------------------------------------------------------------
// Spectral resolution

/// Distinct eigenvalues l_1 < ... < l_k with pairwise orthogonal
/// projections p_i summing to 1.
template <SynapticElement E>
struct SpectralResolution {
  std::vector<double> eigenvalues;
  std::vector<E> projections;
  E unit;
  /// Clustering tolerance; eigenvalues within it of l count as <= l, which
  /// is how the carrier in the defining formula resolves them.
  double cut = 0.0;

  double lower_bound() const { return eigenvalues.front(); }
  double upper_bound() const { return eigenvalues.back(); }

  /// p_{a,l} = sum of p_i with l_i <= l.
  E step(double lambda) const {
    E out = 0.0 * unit;
    for (std::size_t i = 0; i < eigenvalues.size() && eigenvalues[i] <= lambda + cut; ++i) out += projections[i];
    return out;
  }

  /// sum l_i p_i.
  E reconstruct() const {
    E out = 0.0 * unit;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) out += eigenvalues[i] * projections[i];
    return out;
  }
};

/// Eigenvalues closer than kRank * max(1, ||a||) to their predecessor join
/// its cluster; the cluster value is the mean.
inline SpectralResolution<SymMatrix> spectral_resolution(const SymMatrix& a) {
  const auto e = eigen_decompose(a);
  const auto n = e.values.size();
  SpectralResolution<SymMatrix> r{{}, {}, unit_like(a)};
  if (n == 0) return r;
  const double cut = tol::kRank * tol::scale(e.values.cwiseAbs().maxCoeff());
  r.cut = cut;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i < n && e.values(i) - e.values(i - 1) <= cut) continue;
    const Eigen::MatrixXd v = e.vectors.middleCols(start, i - start);
    r.eigenvalues.push_back(e.values.segment(start, i - start).mean());
    r.projections.push_back(symmetric_part(v * v.transpose()));
    start = i;
  }
  return r;
}

inline SpectralResolution<RealFunction> spectral_resolution(const RealFunction& a) {
  SpectralResolution<RealFunction> r{{}, {}, unit_like(a)};
  std::vector<double> values(a.values().data(), a.values().data() + a.size());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (double l : values) {
    r.eigenvalues.push_back(l);
    r.projections.push_back(a.map([l](double x) { return x == l ? 1.0 : 0.0; }));
  }
  return r;
}

/// p_{a,l} = 1 - ((a - l)+)^carrier, straight from the definition.
template <SynapticElement E>
E step_by_formula(const E& a, double lambda) {
  return unit_like(a) - carrier(decompose(a - lambda).pos);
}

/// Deduplicated eigenvalues.
template <SynapticElement E>
std::vector<double> spectrum(const E& a) {
  return spectral_resolution(a).eigenvalues;
}

/// Riemann-Stieltjes sum  sum_j t_j (p(t_j) - p(t_{j-1}))  over an ascending
/// partition with t_0 < L_a and t_last >= U_a.
template <SynapticElement E>
E stieltjes_sum(const SpectralResolution<E>& r, std::span<const double> partition) {
  if (partition.size() < 2) throw std::invalid_argument("partition needs at least two points");
  for (std::size_t j = 1; j < partition.size(); ++j)
    if (!(partition[j] > partition[j - 1])) throw std::invalid_argument("partition is not increasing");
  if (!(partition.front() < r.lower_bound()) || partition.back() < r.upper_bound())
    throw std::invalid_argument("partition does not cover [L_a - 0, U_a]");
  // Only intervals containing an eigenvalue contribute, so the sum is
  // accumulated eigenvalue by eigenvalue.
  E out = 0.0 * r.unit;
  std::size_t j = 1;
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    while (partition[j] < r.eigenvalues[i]) ++j;
    out += partition[j] * r.projections[i];
  }
  return out;
}

template <SynapticElement E>
E stieltjes_sum(const E& a, std::span<const double> partition) {
  return stieltjes_sum(spectral_resolution(a), partition);
}

/// Uniform partition of [L_a - mesh, U_a] with steps strictly below mesh (one
/// extra step keeps rounding at partition points from reaching the mesh);
/// the result is within mesh of a in norm.
template <SynapticElement E>
E stieltjes_reconstruct(const E& a, double mesh) {
  if (!(mesh > 0.0) || !std::isfinite(mesh)) throw std::invalid_argument("mesh must be positive");
  const auto r = spectral_resolution(a);
  const double lo = r.lower_bound() - mesh;
  const double hi = r.upper_bound();
  const auto steps = static_cast<std::size_t>(std::ceil((hi - lo) / mesh)) + 1;
  std::vector<double> t(steps + 1);
  for (std::size_t j = 0; j <= steps; ++j) t[j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(steps);
  t.back() = hi;
  return stieltjes_sum(r, t);
}

// ---------------------------------------------------------------------------
// Simple elements

template <SynapticElement E>
struct SimpleElement {
  std::vector<double> coefficients;  // strictly increasing
  std::vector<E> projections;        // pairwise commuting, summing to 1
};

/// sum l_i p_i, after validating the resolution.
template <SynapticElement E>
E simple_form(const SimpleElement<E>& s) {
  if (s.coefficients.empty() || s.coefficients.size() != s.projections.size())
    throw std::invalid_argument("coefficients and projections must pair up");
  for (std::size_t i = 1; i < s.coefficients.size(); ++i)
    if (!(s.coefficients[i] > s.coefficients[i - 1])) throw std::invalid_argument("coefficients must increase strictly");
  E total = 0.0 * s.projections.front();
  for (std::size_t i = 0; i < s.projections.size(); ++i) {
    if (!is_projection(s.projections[i])) throw std::invalid_argument("not a projection");
    for (std::size_t j = 0; j < i; ++j)
      if (!commute(s.projections[i], s.projections[j])) throw std::invalid_argument("projections do not commute");
    total += s.projections[i];
  }
  if (norm(total - unit_like(total)) > tol::kRank * tol::scale(static_cast<double>(s.projections.size())))
    throw std::invalid_argument("projections do not sum to 1");
  E out = 0.0 * total;
  for (std::size_t i = 0; i < s.projections.size(); ++i) out += s.coefficients[i] * s.projections[i];
  return out;
}

template <SynapticElement E>
SimpleElement<E> spectral_form(const E& a) {
  auto r = spectral_resolution(a);
  return {std::move(r.eigenvalues), std::move(r.projections)};
}

/// f(a) = sum f(l_i) p_i.
template <SynapticElement E, class F>
E apply_function(const SimpleElement<E>& s, F&& f) {
  E out = 0.0 * simple_form(s);
  for (std::size_t i = 0; i < s.projections.size(); ++i) out += f(s.coefficients[i]) * s.projections[i];
  return out;
}

/// `poly` holds coefficients c_0, c_1, ... of c_0 + c_1 t + ...
template <SynapticElement E>
E apply_polynomial(const SimpleElement<E>& s, std::span<const double> poly) {
  return apply_function(s, [poly](double t) {
    double acc = 0.0;
    for (std::size_t k = poly.size(); k-- > 0;) acc = acc * t + poly[k];
    return acc;
  });
}

/// Non-projection effects split as e = (e1 + e2)/2 with distinct effects
/// e1, e2: shift by t q where q projects on an eigenspace whose eigenvalue
/// m lies strictly inside (0, 1) and t = min(m, 1 - m). Projections have no
/// such decomposition and yield nothing.
template <SynapticElement E>
std::optional<std::pair<E, E>> proper_convex_decomposition(const E& e) {
  if (!is_effect(e)) throw std::invalid_argument("not an effect");
  const auto r = spectral_resolution(e);
  const double cut = tol::kRank;
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    const double m = r.eigenvalues[i];
    if (m > cut && m < 1.0 - cut) {
      const double t = std::min(m, 1.0 - m);
      return std::pair<E, E>{e + t * r.projections[i], e - t * r.projections[i]};
    }
  }
  return std::nullopt;
}

/// Supremum of an ascending, pairwise commuting, eventually constant finite
/// sequence: its last term.
template <SynapticElement E>
E ascending_supremum(std::span<const E> sequence) {
  if (sequence.empty()) throw std::invalid_argument("empty sequence");
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    if (!leq(sequence[i - 1], sequence[i])) throw std::invalid_argument("sequence is not ascending");
    for (std::size_t j = 0; j < i; ++j)
      if (!commute(sequence[i], sequence[j])) throw std::invalid_argument("sequence does not commute");
  }
  return sequence.back();
}

// ---------------------------------------------------------------------------
// Commutants

namespace detail {

/// Orthonormal basis (columns) of the null space of m, using the kRank
/// threshold relative to the largest singular value.
inline Eigen::MatrixXd null_space(const Eigen::MatrixXd& m) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return Eigen::MatrixXd::Identity(cols, cols);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = tol::kRank * tol::scale(s.size() ? s(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

/// Orthonormal basis (columns) of the span of the given columns.
inline Eigen::MatrixXd range_basis(const Eigen::MatrixXd& m) {
  if (m.cols() == 0) return Eigen::MatrixXd(m.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cut = tol::kRank * tol::scale(s.size() ? s(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace detail

/// Orthonormal basis of C(B) = {x : xb = bx for all b in B}.
inline std::vector<SymMatrix> commutant(const SymAlgebra& A, std::span<const SymMatrix> B) {
  const auto basis = A.basis();
  const auto n = static_cast<Eigen::Index>(A.n());
  const auto d = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd system(static_cast<Eigen::Index>(B.size()) * n * n, d);
  for (std::size_t k = 0; k < B.size(); ++k) {
    A.require(B[k]);
    for (Eigen::Index j = 0; j < d; ++j) {
      const Eigen::MatrixXd xb = product(basis[static_cast<std::size_t>(j)], B[k]);
      const Eigen::MatrixXd c = xb - xb.transpose();
      system.block(static_cast<Eigen::Index>(k) * n * n, j, n * n, 1) = c.reshaped();
    }
  }
  const Eigen::MatrixXd nul = detail::null_space(system);
  std::vector<SymMatrix> out;
  for (Eigen::Index j = 0; j < nul.cols(); ++j) out.push_back(A.from_coords(nul.col(j)));
  return out;
}

/// R^X is commutative, so every commutant is the whole algebra.
inline std::vector<RealFunction> commutant(const FunctionAlgebra& A, std::span<const RealFunction> B) {
  for (const auto& b : B) A.require(b);
  return A.basis();
}

template <class A>
std::vector<typename A::element_type> double_commutant(const A& algebra, std::span<const typename A::element_type> B) {
  const auto c = commutant(algebra, B);
  return commutant(algebra, std::span<const typename A::element_type>(c));
}

template <class A>
std::vector<typename A::element_type> center(const A& algebra) {
  const auto basis = algebra.basis();
  return commutant(algebra, std::span<const typename A::element_type>(basis));
}

/// A linear subspace given by an orthonormal basis in algebra coordinates.
template <class A>
class Subspace {
 public:
  using Elem = typename A::element_type;

  Subspace(A algebra, std::span<const Elem> spanning) : algebra_(std::move(algebra)) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(algebra_.dimension()), static_cast<Eigen::Index>(spanning.size()));
    for (std::size_t j = 0; j < spanning.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = algebra_.coords(spanning[j]);
    q_ = detail::range_basis(m);
  }

  std::size_t dimension() const { return static_cast<std::size_t>(q_.cols()); }
  const A& algebra() const { return algebra_; }

  std::vector<Elem> basis() const {
    std::vector<Elem> out;
    for (Eigen::Index j = 0; j < q_.cols(); ++j) out.push_back(algebra_.from_coords(q_.col(j)));
    return out;
  }

  /// Distance from x to the subspace in coordinates (trace norm).
  double residual(const Elem& x) const {
    const Eigen::VectorXd c = algebra_.coords(x);
    return (c - q_ * (q_.transpose() * c)).norm();
  }

  bool contains(const Elem& x) const {
    return residual(x) <= tol::kRank * tol::scale(algebra_.coords(x).norm());
  }

  Elem random_member(std::mt19937_64& rng) const {
    std::normal_distribution<double> g;
    Eigen::VectorXd t(q_.cols());
    for (Eigen::Index i = 0; i < t.size(); ++i) t(i) = g(rng);
    return algebra_.from_coords(q_ * t);
  }

 private:
  A algebra_;
  Eigen::MatrixXd q_;
};

/// Sub-synaptic closure conditions, checked on the basis and on `samples`
/// random members: unit, squares, square roots of positives, carriers and
/// inverses of elements >= 1.
template <class A>
AxiomReport check_sub_synaptic(const Subspace<A>& V, std::uint64_t seed = 0, int samples = 16) {
  using Elem = typename A::element_type;
  AxiomReport report;
  std::mt19937_64 rng(seed);
  std::vector<Elem> members = V.basis();
  for (int i = 0; i < samples; ++i) members.push_back(V.random_member(rng));
  const auto unit = V.algebra().unit();
  report.add("contains 1", V.contains(unit));
  auto scan = [&](const char* name, auto make) {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < members.size() && w.empty(); ++i)
      if (!V.contains(make(members[i]))) w = {i};
    report.add(name, w.empty(), w);
  };
  scan("closed under squares", [](const Elem& x) { return square(x); });
  scan("closed under square roots of positives", [](const Elem& x) { return sqrt(square(x)); });
  scan("closed under carriers", [](const Elem& x) { return carrier(x); });
  scan("closed under inverses of elements >= 1", [&](const Elem& x) { return inverse(unit + square(x)); });
  return report;
}

// ---------------------------------------------------------------------------
// Projection lattice

/// Projection onto range(p) ^ range(q), via the null space of [1 - p; 1 - q].
inline SymMatrix proj_meet(const SymMatrix& p, const SymMatrix& q) {
  if (!is_projection(p) || !is_projection(q)) throw std::invalid_argument("not a projection");
  p.check_same(q);
  const auto n = static_cast<Eigen::Index>(p.n());
  Eigen::MatrixXd stack(2 * n, n);
  stack.topRows(n) = Eigen::MatrixXd::Identity(n, n) - p.matrix();
  stack.bottomRows(n) = Eigen::MatrixXd::Identity(n, n) - q.matrix();
  // The stack always has norm <= 2, so the threshold is taken absolute.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stack, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > tol::kRank) ++rank;
  const Eigen::MatrixXd v = svd.matrixV().rightCols(n - rank);
  return symmetric_part(v * v.transpose());
}

inline RealFunction proj_meet(const RealFunction& p, const RealFunction& q) {
  if (!is_projection(p) || !is_projection(q)) throw std::invalid_argument("not a projection");
  return product(p, q);
}

/// p v q = (p' ^ q')'.
template <SynapticElement E>
E proj_join(const E& p, const E& q) {
  const E one = unit_like(p);
  return one - proj_meet(one - p, one - q);
}

/// p <= q for projections, decided by pq = p.
inline bool proj_leq(const SymMatrix& p, const SymMatrix& q) {
  return negligible(product(p, q) - p.matrix(), p.matrix().norm() * q.matrix().norm());
}
inline bool proj_leq(const RealFunction& p, const RealFunction& q) { return product(p, q) == p; }

// ---------------------------------------------------------------------------
// Synaptic morphisms

/// A linear map between two algebras, stored as a matrix on coordinates.
template <class A1, class A2>
struct LinearMap {
  A1 source;
  A2 target;
  Eigen::MatrixXd matrix;

  typename A2::element_type operator()(const typename A1::element_type& a) const {
    return target.from_coords(matrix * source.coords(a));
  }
};

template <class A1, class A2, class F>
LinearMap<A1, A2> make_linear_map(const A1& source, const A2& target, F&& f) {
  const auto basis = source.basis();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(target.dimension()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = target.coords(f(basis[j]));
  return {source, target, std::move(m)};
}

struct SynapticMorphismReport {
  bool passed = true;
  int condition = 0;  // 1..4 of the first violation, 0 when passed
  std::string violation;
  std::vector<std::size_t> witness;  // indices into basis ++ samples
};

/// Checks phi(1) = 1, phi(a^2) = phi(a)^2, aCb => phi(a)Cphi(b) and
/// phi(a^carrier) = phi(a)^carrier on the source basis followed by `samples`.
template <class A1, class A2>
SynapticMorphismReport check_synaptic_morphism(const LinearMap<A1, A2>& phi,
                                               std::span<const typename A1::element_type> samples) {
  using Src = typename A1::element_type;
  SynapticMorphismReport r;
  const double tolerance = tol::report_tolerance();
  auto fail = [&](int condition, const char* what, std::vector<std::size_t> w) {
    r.passed = false;
    r.condition = condition;
    r.violation = what;
    r.witness = std::move(w);
    return r;
  };
  std::vector<Src> xs = phi.source.basis();
  xs.insert(xs.end(), samples.begin(), samples.end());
  if (distance(phi(phi.source.unit()), phi.target.unit()) > tolerance) return fail(1, "(1) phi(1) = 1", {});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto fa = phi(xs[i]);
    if (distance(phi(square(xs[i])), square(fa)) > tolerance * tol::scale(norm(fa) * norm(fa)))
      return fail(2, "(2) phi(a^2) = phi(a)^2", {i});
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (commute(xs[i], xs[j]) && !commute(phi(xs[i]), phi(xs[j])))
        return fail(3, "(3) aCb implies phi(a)Cphi(b)", {i, j});
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (distance(phi(carrier(xs[i])), carrier(phi(xs[i]))) > tolerance * tol::scale(norm(phi(carrier(xs[i])))))
      return fail(4, "(4) phi(carrier a) = carrier phi(a)", {i});
  return r;
}

}  // namespace synaptica
