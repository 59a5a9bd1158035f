#include <synaptica/order_unit_space.hpp>
#include <synaptica/random.hpp>

#include <catch_amalgamated.hpp>

using namespace synaptica;
using Catch::Matchers::WithinAbs;

TEST_CASE("order-unit norm on small examples") {
  const SymAlgebra s2(2);
  CHECK(order_unit_norm(s2, SymMatrix::diagonal({-3, 2})) == 3.0);
  CHECK_THAT(order_unit_norm(s2, SymMatrix{{0, 1}, {1, 0}}), WithinAbs(1.0, 1e-12));
  CHECK(order_unit_norm(s2, s2.zero()) == 0.0);
  const FunctionAlgebra f3(3);
  CHECK(order_unit_norm(f3, RealFunction{3, -1, 2}) == 3.0);
  CHECK_THROWS_WITH(order_unit_norm(s2, SymMatrix::identity(3)), "instance mismatch");
}

TEST_CASE("closed-form norm agrees with the cone-only bisection") {
  rnd::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + i % 6;
    const auto values = rnd::uniform_values(n, -5, 5, rng);
    const auto a = rnd::with_spectrum(values, rng);
    double expected = 0;
    for (double v : values) expected = std::max(expected, std::abs(v));
    const SymAlgebra A(n);
    CHECK_THAT(order_unit_norm(A, a), WithinAbs(expected, 1e-12));
    CHECK_THAT(norm_by_bisection(A, a), WithinAbs(expected, 1e-8 * std::max(1.0, expected)));
    const FunctionAlgebra F(n);
    const auto f = rnd::function(n, rng, 3.0);
    CHECK_THAT(norm_by_bisection(F, f), WithinAbs(order_unit_norm(F, f), 1e-11));
  }
}

TEST_CASE("norm sandwich and monotonicity") {
  rnd::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const SymAlgebra A(1 + i % 5);
    const auto a = random_element(A, rng);
    const double na = norm(a);
    CHECK(leq(-na * A.unit(), a));
    CHECK(leq(a, na * A.unit()));
    // b = |a|-dominating element: a + s v with s = ||a||, plus a positive part
    const auto p = random_effect(A, rng);
    const auto b = na * A.unit() + p;
    REQUIRE(leq(-1.0 * b, a));
    REQUIRE(leq(a, b));
    CHECK(norm(a) <= norm(b) + 1e-12);
    const auto [bp, cp] = positive_decomposition(A, a);
    CHECK(in_positive_cone(bp));
    CHECK(in_positive_cone(cp));
    CHECK(norm(bp - cp - a) < 1e-12);
    // v is an order unit: a <= ceil(||a||) v
    CHECK(leq(a, std::ceil(na) * A.unit()));
  }
}

TEST_CASE("unit interval membership") {
  const SymAlgebra A(3);
  CHECK(in_unit_interval(A, 0.5 * A.unit()));
  CHECK_FALSE(in_unit_interval(A, 2.0 * A.unit()));
  rnd::Rng rng(3);
  const auto p = rnd::projection(3, 2, rng);
  CHECK(in_unit_interval(A, p));
  const FunctionAlgebra F(2);
  CHECK(in_unit_interval(F, RealFunction{0, 1}));
  CHECK_FALSE(in_unit_interval(F, RealFunction{-0.1, 1}));
  for (int i = 0; i < 20; ++i) CHECK(in_unit_interval(A, random_effect(A, rng)));
}

TEST_CASE("extension of point evaluations and trace pairings") {
  const FunctionAlgebra F(4);
  const RealLine R;
  EffectMorphismExtension<FunctionAlgebra, RealLine> ev(F, R, [](const RealFunction& e) { return e[2]; });
  rnd::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto a = rnd::function(4, rng, 4.0);
    CHECK_THAT(ev(a), WithinAbs(a[2], 1e-12));
  }
  const SymAlgebra A(2);
  const auto D = SymMatrix::diagonal({0.25, 0.75});
  EffectMorphismExtension<SymAlgebra, RealLine> tr(A, R, [&](const SymMatrix& e) { return pairing(D, e); });
  for (int i = 0; i < 20; ++i) {
    const auto a = random_element(A, rng, 3.0);
    CHECK_THAT(tr(a), WithinAbs(pairing(D, a), 1e-12));
  }
}

TEST_CASE("black-box effect morphisms extend linearly and restrict back") {
  // compression e -> V^T e V with V^T V = 1 is a unital positive linear map
  rnd::Rng rng(21);
  const Eigen::MatrixXd V = rnd::orthogonal(4, rng).leftCols(2);
  const SymAlgebra A4(4), A2(2);
  auto omega = [&](const SymMatrix& e) { return symmetric_part(V.transpose() * e.matrix() * V); };
  EffectMorphismExtension<SymAlgebra, SymAlgebra> xi(A4, A2, omega, 3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_element(A4, rng, 2.0);
    const auto b = random_element(A4, rng, 2.0);
    const double s = u(rng), t = u(rng);
    CHECK(norm(xi(s * a + t * b) - (s * xi(a) + t * xi(b))) < 1e-9);
    const auto e = random_effect(A4, rng);
    CHECK(norm(xi(e) - omega(e)) < 1e-9);
  }
  // homogeneity over rational and irrational scalars
  const auto a = random_element(A4, rng);
  for (double s : {1.0 / 3.0, 2.0 / 7.0, std::sqrt(2.0), M_PI})
    CHECK(norm(xi(s * a) - s * xi(a)) < 1e-9);
  // different choices of n give the same value
  const auto p = 0.3 * A4.unit() + 0.2 * random_effect(A4, rng);
  CHECK(norm(xi.positive_part(p, 1.0) - xi.positive_part(p, 5.0)) < 1e-12);
  // the coordinate matrix reproduces the map
  const auto m = xi.matrix();
  const auto c = random_element(A4, rng);
  CHECK((m * A4.coords(c) - A2.coords(xi(c))).norm() < 1e-9);
}

TEST_CASE("non-morphisms are detected") {
  const SymAlgebra A(2);
  const RealLine R;
  const auto D = SymMatrix::diagonal({0.5, 0.5});
  auto squared = [&](const SymMatrix& e) { return pairing(D, e) * pairing(D, e); };
  CHECK_THROWS_WITH((EffectMorphismExtension<SymAlgebra, RealLine>(A, R, squared)), "not an effect morphism");
  auto not_unital = [&](const SymMatrix& e) { return 0.5 * pairing(D, e); };
  CHECK_THROWS_WITH((EffectMorphismExtension<SymAlgebra, RealLine>(A, R, not_unital)), "not an effect morphism");
}
