#pragma once

// Real-valued functions on a finite set X, the commutative synaptic instance.
// All operations are pointwise and involve no tolerance.

#include <Eigen/Dense>

#include <cmath>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace synaptica {

class RealFunction {
 public:
  RealFunction() = default;
  explicit RealFunction(Eigen::VectorXd v) : v_(std::move(v)) {
    if (!v_.allFinite()) throw std::invalid_argument("function has non-finite values");
  }
  RealFunction(std::initializer_list<double> values)
      : RealFunction(Eigen::Map<const Eigen::VectorXd>(values.begin(), static_cast<Eigen::Index>(values.size()))) {}
  explicit RealFunction(std::span<const double> values)
      : RealFunction(Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size())))) {}

  static RealFunction constant(std::size_t size, double c) {
    return RealFunction(Eigen::VectorXd::Constant(static_cast<Eigen::Index>(size), c));
  }
  static RealFunction indicator(std::size_t size, std::span<const std::size_t> points) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size));
    for (auto x : points) v(static_cast<Eigen::Index>(x)) = 1.0;
    return RealFunction(std::move(v));
  }
  static RealFunction point_indicator(std::size_t size, std::size_t x) {
    const std::size_t p[1] = {x};
    return indicator(size, p);
  }

  std::size_t size() const { return static_cast<std::size_t>(v_.size()); }
  double operator[](std::size_t x) const { return v_(static_cast<Eigen::Index>(x)); }
  const Eigen::VectorXd& values() const { return v_; }

  RealFunction& operator+=(const RealFunction& o) {
    check_same(o);
    v_ += o.v_;
    return *this;
  }
  RealFunction& operator-=(const RealFunction& o) {
    check_same(o);
    v_ -= o.v_;
    return *this;
  }
  RealFunction& operator*=(double s) {
    v_ *= s;
    return *this;
  }
  friend RealFunction operator+(RealFunction a, const RealFunction& b) { return a += b; }
  friend RealFunction operator-(RealFunction a, const RealFunction& b) { return a -= b; }
  friend RealFunction operator*(double s, RealFunction a) { return a *= s; }
  friend RealFunction operator*(RealFunction a, double s) { return a *= s; }
  friend RealFunction operator-(RealFunction a) { return a *= -1.0; }
  friend RealFunction operator-(RealFunction a, double lambda) {
    a.v_.array() -= lambda;
    return a;
  }

  /// Pointwise product; the algebra is commutative so this stays inside it.
  friend RealFunction product(const RealFunction& a, const RealFunction& b) {
    a.check_same(b);
    return RealFunction(Eigen::VectorXd(a.v_.cwiseProduct(b.v_)));
  }

  template <class F>
  RealFunction map(F&& f) const {
    Eigen::VectorXd out = v_;
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = f(out(i));
    return RealFunction(std::move(out));
  }

  bool operator==(const RealFunction& o) const { return v_ == o.v_; }

  void check_same(const RealFunction& o) const {
    if (o.size() != size()) throw std::invalid_argument("instance mismatch");
  }

 private:
  Eigen::VectorXd v_;
};

/// Order-unit (sup) norm.
inline double norm(const RealFunction& a) {
  return a.size() == 0 ? 0.0 : a.values().cwiseAbs().maxCoeff();
}

/// Pairing <w, a> = sum_x w(x) a(x).
inline double pairing(const RealFunction& w, const RealFunction& a) {
  w.check_same(a);
  return w.values().dot(a.values());
}

inline RealFunction unit_like(const RealFunction& a) { return RealFunction::constant(a.size(), 1.0); }
inline RealFunction zero_like(const RealFunction& a) { return RealFunction::constant(a.size(), 0.0); }

}  // namespace synaptica
