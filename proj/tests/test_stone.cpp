#include <synaptica/models.hpp>
#include <synaptica/random.hpp>
#include <synaptica/stone.hpp>

#include <catch_amalgamated.hpp>

using namespace synaptica;
using Catch::Matchers::WithinAbs;

namespace {

// Every map B -> {0, 1} that preserves 0, 1, meet, join and complement,
// found by brute force over all 2^|B| maps.
std::vector<std::vector<bool>> homomorphisms(const BoundedOrtholattice& B) {
  const std::size_t n = B.size();
  const LatticeTables t(B.base());
  std::vector<std::vector<bool>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    auto x = [&](Elem b) { return static_cast<bool>(m >> b & 1); };
    bool ok = !x(B.zero()) && x(B.one());
    for (Elem a = 0; a < n && ok; ++a) {
      ok = x(B.perp(a)) != x(a);
      for (Elem b = 0; b < n && ok; ++b)
        ok = x(*t.m(a, b)) == (x(a) && x(b)) && x(*t.j(a, b)) == (x(a) || x(b));
    }
    if (ok) {
      std::vector<bool> h(n);
      for (Elem b = 0; b < n; ++b) h[b] = x(b);
      out.push_back(h);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Stone spaces of finite Boolean algebras") {
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto B = models::boolean_lattice(k);
    const auto X = stone_space(B);
    CHECK(X.size() == k);
    CHECK(verify_stone(X).ok());
    const auto homs = homomorphisms(B);
    CHECK(homs.size() == k);
    for (const auto& h : homs) {
      bool found = false;
      for (std::size_t x = 0; x < X.size() && !found; ++x) {
        bool same = true;
        for (Elem b = 0; b < B.size(); ++b) same = same && h[b] == X.value(x, b);
        found = same;
      }
      CHECK(found);
    }
    // naturality of psi
    const LatticeTables t(B.base());
    for (Elem b = 0; b < B.size(); ++b) {
      CHECK(stone_indicator(X, B.perp(b)) == RealFunction::constant(k, 1.0) - stone_indicator(X, b));
      for (Elem c = 0; c < B.size(); ++c)
        CHECK(stone_indicator(X, *t.m(b, c)) == product(stone_indicator(X, b), stone_indicator(X, c)));
    }
  }
}

TEST_CASE("Stone map examples") {
  {
    const auto X = stone_space(models::boolean_lattice(3));
    for (Elem atom : {1, 2, 4}) CHECK(std::popcount(stone_map(X, atom)) == 1);
  }
  {
    const auto B = models::boolean_lattice(0);
    const auto X = stone_space(B);
    CHECK(X.size() == 0);
  }
  {
    // {0, 1} as the two-element chain
    const auto X = stone_space(models::boolean_lattice(1));
    CHECK(X.size() == 1);
    CHECK(stone_map(X, 1) == 1);
    CHECK(stone_map(X, 0) == 0);
  }
  {
    const auto X = stone_space(models::boolean_lattice(2));
    CHECK(X.size() == 2);
    CHECK((stone_map(X, 1) | stone_map(X, 2)) == 3);
    CHECK((stone_map(X, 1) & stone_map(X, 2)) == 0);
  }
  CHECK_THROWS_WITH(stone_space(models::mo2()), "not a Boolean algebra");
  CHECK_THROWS_WITH(stone_space(models::o6()), "not a Boolean algebra");
}

TEST_CASE("functional representation of the diagonal algebra") {
  for (std::size_t k = 1; k <= 5; ++k) {
    const SymAlgebra A(k);
    std::vector<SymMatrix> gens;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<double> d(k, 0.0);
      d[i] = 1.0;
      gens.push_back(SymMatrix::diagonal(d));
    }
    const auto R = functional_representation(A, gens);
    REQUIRE(R.points() == k);
    const auto check = verify_representation(R, k);
    INFO(k);
    CHECK(check.report.ok());
    CHECK(check.round_trip_residual <= 1e-12);
    // Psi reads off diagonal entries, in atom order
    rnd::Rng rng(k);
    const auto values = rnd::uniform_values(k, -3, 3, rng);
    const auto a = SymMatrix::diagonal(values);
    const auto f = R(a);
    for (std::size_t x = 0; x < k; ++x) {
      std::size_t where = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (R.atoms()[x](i, i) == 1.0) where = i;
      CHECK_THAT(f[x], WithinAbs(values[where], 1e-15));
    }
  }
}

TEST_CASE("functional representation examples") {
  const SymAlgebra A(3);
  {
    const auto R = functional_representation(A, std::span<const SymMatrix>{});
    CHECK(R.points() == 1);
    CHECK(R(2.5 * A.unit()) == RealFunction{2.5});
    CHECK(verify_representation(R).report.ok());
  }
  {
    const auto a = SymMatrix::diagonal({1, 1, 2});
    const SymMatrix gens[] = {a};
    const auto R = functional_representation(A, gens);
    CHECK(R.points() == 2);
    CHECK(norm(R(a) - RealFunction{1, 2}) < 1e-15);
    CHECK(verify_representation(R).report.ok());
    CHECK_THROWS_WITH(R(SymMatrix::diagonal({1, 2, 3})), "not in the algebra");
  }
  {
    // rotated generators: the algebra of polynomials in a
    rnd::Rng rng(4);
    Eigen::MatrixXd u;
    const auto a = rnd::with_spectrum({-1, 2, 2, 5}, rng, &u);
    const SymMatrix gens[] = {a};
    const auto R = functional_representation(SymAlgebra(4), gens);
    CHECK(R.points() == 3);
    const auto check = verify_representation(R, 9);
    CHECK(check.report.ok());
    CHECK(check.round_trip_residual <= 1e-12);
  }
  {
    const SymMatrix gens[] = {SymMatrix::diagonal({1, 0, 0}), SymMatrix{{0.5, 0.5, 0}, {0.5, 0.5, 0}, {0, 0, 0}}};
    try {
      functional_representation(A, gens);
      FAIL("expected noncommutative_error");
    } catch (const noncommutative_error& e) {
      CHECK(std::string(e.what()) == "commutative algebras only");
      CHECK(e.first == 0);
      CHECK(e.second == 1);
    }
  }
}

TEST_CASE("extremal states transport across Psi") {
  rnd::Rng rng(12);
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<double> spectrum(k + 1);
    for (std::size_t i = 0; i <= k; ++i) spectrum[i] = static_cast<double>(std::min(i, k - 1));
    const auto a = rnd::with_spectrum(spectrum, rng);
    const SymMatrix gens[] = {a};
    const auto R = functional_representation(SymAlgebra(k + 1), gens);
    REQUIRE(R.points() == k);
    const auto ext = algebra_extremal_states(R);
    REQUIRE(ext.size() == k);
    std::set<std::size_t> hit;
    for (const auto& rho : ext) {
      CHECK(is_state(R.source(), rho));
      const auto gamma = transport_state(R, rho);
      const auto c = extremal_commutative_characterization(R.target(), gamma);
      REQUIRE(c.point);
      CHECK(c.agree());
      hit.insert(*c.point);
      CHECK(norm(pull_back_state(R, gamma).density - rho.density) < 1e-12);
    }
    CHECK(hit.size() == k);
    // an interior state stays interior
    const auto mid = transport_state(R, {(1.0 / k) * R.source().unit() * (1.0 / (k + 1.0)) * k});
    const auto c = extremal_commutative_characterization(R.target(), mid);
    CHECK(c.agree());
    CHECK(c.extremal == (k == 1));
  }
}

TEST_CASE("Rickart property and completeness on finite X") {
  const FunctionAlgebra F(5);
  const RealFunction f{2, 0, 0, 0, 0};
  CHECK(F.unit() - carrier(f) == RealFunction{0, 1, 1, 1, 1});
  CHECK(F.unit() - carrier(F.zero()) == F.unit());
  rnd::Rng rng(6);
  std::vector<RealFunction> sample{f};
  for (int i = 0; i < 10; ++i) sample.push_back(rnd::grid_function(5, -1, 1, rng));
  const auto r = check_rickart_completeness(F, sample);
  CHECK(r.ok());
  for (const auto& res : r.results) INFO(res.axiom);
  CHECK(r.results.size() == 4);
}
