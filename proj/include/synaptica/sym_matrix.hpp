#pragma once

// Real symmetric matrices, the non-commutative synaptic instance.

#include <synaptica/tolerance.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace synaptica {

class SymMatrix {
 public:
  SymMatrix() = default;

  /// Symmetrizes (m + m^T)/2 and rejects inputs whose asymmetry exceeds
  /// 1e-10 * max(1, max|m_ij|).
  explicit SymMatrix(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
    if (!m.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
    m_ = 0.5 * (m + m.transpose());
    const double scale = tol::scale(m.cwiseAbs().maxCoeff());
    if (m.size() > 0 && (m - m_).cwiseAbs().maxCoeff() > tol::kSymmetry * scale)
      throw std::invalid_argument("matrix is not symmetric");
  }

  SymMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd m(n, n);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
      if (static_cast<Eigen::Index>(row.size()) != n)
        throw std::invalid_argument("matrix is not square");
      Eigen::Index j = 0;
      for (double v : row) m(i, j++) = v;
      ++i;
    }
    *this = SymMatrix(m);
  }

  static SymMatrix identity(std::size_t n) {
    return SymMatrix(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  }
  static SymMatrix zero(std::size_t n) {
    return SymMatrix(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  }
  static SymMatrix diagonal(std::span<const double> d) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) v(static_cast<Eigen::Index>(i)) = d[i];
    return SymMatrix(Eigen::MatrixXd(v.asDiagonal()));
  }
  static SymMatrix diagonal(std::initializer_list<double> d) {
    return diagonal(std::span<const double>(d.begin(), d.size()));
  }
  /// Rank-one projection onto the line spanned by `v`.
  static SymMatrix rank_one(const Eigen::VectorXd& v) {
    const Eigen::VectorXd u = v.normalized();
    return SymMatrix(Eigen::MatrixXd(u * u.transpose()));
  }

  std::size_t n() const { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  double trace() const { return m_.trace(); }

  SymMatrix& operator+=(const SymMatrix& o) {
    check_same(o);
    m_ += o.m_;
    return *this;
  }
  SymMatrix& operator-=(const SymMatrix& o) {
    check_same(o);
    m_ -= o.m_;
    return *this;
  }
  SymMatrix& operator*=(double s) {
    m_ *= s;
    return *this;
  }
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }
  friend SymMatrix operator*(SymMatrix a, double s) { return a *= s; }
  friend SymMatrix operator-(SymMatrix a) { return a *= -1.0; }

  /// a - lambda*1.
  friend SymMatrix operator-(SymMatrix a, double lambda) {
    a.m_.diagonal().array() -= lambda;
    return a;
  }

  /// Product in the enveloping (associative) algebra; not symmetric in general.
  friend Eigen::MatrixXd product(const SymMatrix& a, const SymMatrix& b) {
    a.check_same(b);
    return a.m_ * b.m_;
  }

  void check_same(const SymMatrix& o) const {
    if (o.n() != n()) throw std::invalid_argument("instance mismatch");
  }

 private:
  // Used by operations whose result is symmetric up to rounding.
  friend SymMatrix symmetric_part(const Eigen::MatrixXd& m);
  struct Raw {};
  SymMatrix(Raw, Eigen::MatrixXd m) : m_(std::move(m)) {}

  Eigen::MatrixXd m_;
};

/// (m + m^T)/2 without the asymmetry check; for products known to be
/// symmetric in exact arithmetic.
inline SymMatrix symmetric_part(const Eigen::MatrixXd& m) {
  return SymMatrix(SymMatrix::Raw{}, Eigen::MatrixXd(0.5 * (m + m.transpose())));
}

/// Ascending eigenvalues and orthonormal eigenvectors (columns).
struct EigenData {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

inline EigenData eigen_decompose(const SymMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Order-unit norm: max |eigenvalue|.
inline double norm(const SymMatrix& a) {
  if (a.n() == 0) return 0.0;
  const auto values = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a.matrix(), Eigen::EigenvaluesOnly).eigenvalues();
  return values.cwiseAbs().maxCoeff();
}

/// Trace pairing <a, b> = tr(ab).
inline double pairing(const SymMatrix& a, const SymMatrix& b) {
  a.check_same(b);
  return a.matrix().cwiseProduct(b.matrix()).sum();
}

inline SymMatrix unit_like(const SymMatrix& a) { return SymMatrix::identity(a.n()); }
inline SymMatrix zero_like(const SymMatrix& a) { return SymMatrix::zero(a.n()); }

/// V f(D) V^T for the eigendecomposition a = V D V^T.
template <class F>
SymMatrix apply_eigenwise(const EigenData& e, F&& f) {
  Eigen::VectorXd d = e.values;
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = f(d(i));
  return symmetric_part(e.vectors * d.asDiagonal() * e.vectors.transpose());
}

/// Frobenius size test used for "is zero" decisions on products and
/// commutators, relative to max(1, scale).
inline bool negligible(const Eigen::MatrixXd& m, double scale) {
  return m.norm() <= tol::kRank * tol::scale(scale);
}

}  // namespace synaptica
