#pragma once

// Seeded generators for randomized checks. All draws come from a caller-owned
// std::mt19937_64 so runs are reproducible.

#include <synaptica/real_function.hpp>
#include <synaptica/sym_matrix.hpp>

#include <Eigen/Dense>
#include <Eigen/QR>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace synaptica::rnd {

using Rng = std::mt19937_64;

inline Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = g(rng);
  return m;
}

/// Haar-like orthogonal matrix from the QR factorization of a Gaussian one.
inline Eigen::MatrixXd orthogonal(std::size_t n, Rng& rng) {
  const auto k = static_cast<Eigen::Index>(n);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian_matrix(k, k, rng));
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(k, k);
  // fix column signs so the distribution does not depend on QR conventions
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < k; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

/// (G + G^T)/2 with standard Gaussian G, scaled by `spread`.
inline SymMatrix sym(std::size_t n, Rng& rng, double spread = 1.0) {
  const auto k = static_cast<Eigen::Index>(n);
  const Eigen::MatrixXd g = gaussian_matrix(k, k, rng);
  return SymMatrix(Eigen::MatrixXd(0.5 * spread * (g + g.transpose())));
}

/// U diag(values) U^T for a random orthogonal U; `u` receives U if given.
inline SymMatrix with_spectrum(const std::vector<double>& values, Rng& rng, Eigen::MatrixXd* u = nullptr) {
  const Eigen::MatrixXd q = orthogonal(values.size(), rng);
  Eigen::VectorXd d(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) d(static_cast<Eigen::Index>(i)) = values[i];
  if (u) *u = q;
  return symmetric_part(q * d.asDiagonal() * q.transpose());
}

inline std::vector<double> uniform_values(std::size_t n, double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

/// Point of the probability simplex, uniform (normalized exponentials).
inline Eigen::VectorXd probability_vector(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  Eigen::VectorXd p(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = e(rng);
  return p / p.sum();
}

/// Random density matrix: random eigenbasis with random probability weights.
inline SymMatrix density(std::size_t n, Rng& rng) {
  const Eigen::VectorXd p = probability_vector(n, rng);
  return with_spectrum(std::vector<double>(p.data(), p.data() + p.size()), rng);
}

/// Orthogonal projection onto the span of the first `rank` columns of u.
inline SymMatrix projection_from(const Eigen::MatrixXd& u, std::size_t rank) {
  const Eigen::MatrixXd v = u.leftCols(static_cast<Eigen::Index>(rank));
  return symmetric_part(v * v.transpose());
}

inline SymMatrix projection(std::size_t n, std::size_t rank, Rng& rng) {
  return projection_from(orthogonal(n, rng), rank);
}

inline RealFunction function(std::size_t size, Rng& rng, double spread = 1.0) {
  std::normal_distribution<double> g(0.0, spread);
  Eigen::VectorXd v(static_cast<Eigen::Index>(size));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = g(rng);
  return RealFunction(std::move(v));
}

/// Random function with values drawn from a small integer grid, so that
/// repeated values and zeros occur.
inline RealFunction grid_function(std::size_t size, int lo, int hi, Rng& rng) {
  std::uniform_int_distribution<int> u(lo, hi);
  Eigen::VectorXd v(static_cast<Eigen::Index>(size));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = u(rng);
  return RealFunction(std::move(v));
}

}  // namespace synaptica::rnd
