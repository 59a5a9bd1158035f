#include <synaptica/effect_algebra.hpp>
#include <synaptica/models.hpp>

#include "support/ea_oracle.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

using namespace synaptica;

namespace {

std::vector<Elem> identity_map(std::size_t n) {
  std::vector<Elem> v(n);
  std::iota(v.begin(), v.end(), Elem{0});
  return v;
}

}  // namespace

TEST_CASE("curated effect algebras satisfy the axioms and derived laws") {
  for (const auto& [name, E] : models::curated_effect_algebras()) {
    INFO(name);
    const auto check = check_ea_axioms(E.table());
    CHECK(check.report.ok());
    CHECK(check.algebra.has_value());
    CHECK(check_ea_laws(E).ok());
  }
  CHECK(check_ea_laws(models::diamond_ea()).ok());
  for (std::size_t k = 1; k <= 6; ++k) CHECK(check_ea_laws(models::chain_ea(k)).ok());
}

TEST_CASE("3-chain with h (+) h = h is rejected") {
  auto t = models::three_chain().table();
  t.set(1, 1, 1);
  const auto check = check_ea_axioms(t);
  REQUIRE_FALSE(check.report.ok());
  CHECK_FALSE(check.algebra.has_value());
  const auto* v = check.report.first_violation();
  CHECK(oracle::witness_violates(t, v->axiom, v->witness));
  CHECK_THROWS_AS(FiniteEffectAlgebra(t), std::invalid_argument);
}

TEST_CASE("checker agrees with the brute-force oracle on every single-entry mutation") {
  for (const auto& [name, E] : models::curated_effect_algebras()) {
    std::vector<models::Mutation> invalid;
    for (auto& m : models::single_entry_mutations(E.table())) {
      INFO(name << " cell (" << m.e << "," << m.f << ")");
      const bool valid = oracle::is_effect_algebra(m.table);
      const auto check = check_ea_axioms(m.table);
      REQUIRE(check.report.ok() == valid);
      if (!valid) {
        const auto* v = check.report.first_violation();
        CHECK(oracle::witness_violates(m.table, v->axiom, v->witness));
        invalid.push_back(std::move(m));
      }
    }
    CHECK(models::spread(invalid, 20).size() == std::min<std::size_t>(20, invalid.size()));
  }
}

TEST_CASE("a mutation may land on another effect algebra") {
  // a (+) a = a' in 2^2 gives the 4-chain 0 < a < a' < 1
  auto t = models::boolean_ea(2).table();
  t.set(1, 1, 2);
  CHECK(oracle::is_effect_algebra(t));
  const auto check = check_ea_axioms(t);
  REQUIRE(check.algebra);
  CHECK(induced_order(*check.algebra).same_order(FinitePoset::from_pairs({"0", "a", "a'", "1"}, {{0, 1}, {1, 2}, {2, 3}})));
}

TEST_CASE("induced order") {
  const auto c = models::three_chain();
  const auto p = induced_order(c);
  CHECK(p.same_order(models::chain_poset(3)));
  for (std::size_t k = 1; k <= 5; ++k) CHECK(induced_order(models::chain_ea(k)).same_order(models::chain_poset(k + 1)));
  const auto mo2 = models::mo2();
  CHECK(induced_order(oml_to_ea(mo2)).same_order(mo2.base()));
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto b = models::boolean_lattice(k);
    CHECK(induced_order(oml_to_ea(b)).same_order(b.base()));
  }
}

TEST_CASE("OML conversion") {
  CHECK_THROWS_WITH(oml_to_ea(models::o6()), "input is not an OML");
  const auto E = models::mo2_ea();
  CHECK(E.size() == 6);
  const auto L = models::mo2();
  const LatticeTables t(L.base());
  // orthogonal implies disjoint
  for (Elem p = 0; p < E.size(); ++p)
    for (Elem q = 0; q < E.size(); ++q)
      if (E.orthogonal(p, q)) CHECK(*t.m(p, q) == L.zero());
  const auto c2 = oml_to_ea(models::boolean_lattice(1));
  CHECK(c2.size() == 2);
  CHECK(c2.osum(0, 1) == Elem{1});
  CHECK_FALSE(c2.osum(1, 1));
}

TEST_CASE("orthosums of families") {
  const auto c = models::three_chain();
  const Elem hh[] = {1, 1};
  const Elem hhh[] = {1, 1, 1};
  CHECK(orthosum_family(c, hh) == Elem{2});
  CHECK_FALSE(orthosum_family(c, hhh));
  CHECK(orthosum_family(c, std::span<const Elem>{}) == Elem{0});

  // order independence on all permutations of orthogonal families in 2^3
  const auto b = models::boolean_ea(3);
  std::vector<Elem> fam = {1, 2, 4, 0};
  std::sort(fam.begin(), fam.end());
  do {
    CHECK(orthosum_family(b, fam) == Elem{7});
  } while (std::next_permutation(fam.begin(), fam.end()));
}

TEST_CASE("sub-effect algebras") {
  const auto c = models::three_chain();
  const Elem trivial[] = {0, 2};
  const Elem bad[] = {0, 1};
  const Elem all[] = {0, 1, 2};
  CHECK(is_sub_effect_algebra(c, trivial));
  CHECK_FALSE(is_sub_effect_algebra(c, bad));
  CHECK(is_sub_effect_algebra(c, all));
  const auto b = models::boolean_ea(2);
  const Elem block[] = {0, 1, 2, 3};
  CHECK(is_sub_effect_algebra(b, block));
  const Elem half[] = {0, 1, 3};
  CHECK_FALSE(is_sub_effect_algebra(b, half));
}

TEST_CASE("effect algebra morphisms") {
  for (const auto& [name, E] : models::curated_effect_algebras()) {
    const auto id = identity_map(E.size());
    const auto r = check_morphism(E, E, id);
    CHECK(r.is_morphism);
    CHECK(r.is_isomorphism);
    if (E.size() > 2) {
      const std::vector<Elem> ones(E.size(), E.one());
      CHECK_FALSE(check_morphism(E, E, ones).is_morphism);
    }
  }
  // a state of the 3-chain onto the grid {0, 1/2, 1}
  const auto c = models::three_chain();
  const auto grid = models::chain_ea(2);
  const std::vector<Elem> state = {0, 1, 2};
  CHECK(check_morphism(c, grid, state).is_morphism);
  // 2^2 -> 2 choosing an atom is a morphism but not an isomorphism
  const auto b2 = models::boolean_ea(2);
  const auto b1 = models::boolean_ea(1);
  const std::vector<Elem> point = {0, 1, 0, 1};
  const auto r = check_morphism(b2, b1, point);
  CHECK(r.is_morphism);
  CHECK_FALSE(r.is_isomorphism);
  // a bijective morphism whose inverse is not one: 2^2 -> 4-chain
  const auto c4 = models::chain_ea(3);
  const std::vector<Elem> squash = {0, 1, 2, 3};
  const auto rs = check_morphism(b2, c4, squash);
  CHECK(rs.is_morphism);
  CHECK_FALSE(rs.is_isomorphism);
}

TEST_CASE("MV-effect algebras") {
  CHECK(is_mv_effect_algebra(models::three_chain()));
  for (std::size_t k = 1; k <= 4; ++k) CHECK(is_mv_effect_algebra(models::boolean_ea(k)));
  // MO2 is not distributive; a ^ b = 0 yet a (+) b is undefined
  CHECK_FALSE(is_mv_effect_algebra(models::mo2_ea()));
  CHECK_FALSE(is_mv_effect_algebra(models::diamond_ea()));
  CHECK_THROWS(ea_to_mv(models::diamond_ea()));
}

TEST_CASE("MV translation") {
  const auto c = models::three_chain();
  const auto m = ea_to_mv(c);
  CHECK(m.plus(1, 1) == 2);
  CHECK(m.plus(1, 2) == 2);
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto mb = ea_to_mv(models::boolean_ea(k));
    for (Elem x = 0; x < mb.size(); ++x) CHECK(mb.plus(x, x) == x);
  }
  // the Lukasiewicz MV chain and the chain effect algebra correspond
  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(mv_to_ea(models::chain_mv(k)) == models::chain_ea(k));
    CHECK(ea_to_mv(models::chain_ea(k)) == models::chain_mv(k));
  }
  for (const auto& [name, E] : models::mv_effect_algebras()) {
    INFO(name);
    const auto M = ea_to_mv(E);
    CHECK(check_mv_axioms(M.table()).report.ok());
    CHECK(mv_to_ea(M) == E);
    CHECK(ea_to_mv(mv_to_ea(M)) == M);
    CHECK(M.order().same_order(induced_order(E)));
    CHECK(classify(M.order()).is_distributive);
  }
}

TEST_CASE("MV axiom violations are reported") {
  auto t = models::chain_mv(2).table();
  t.plus[1 * 3 + 1] = 1;  // 1/2 + 1/2 = 1/2
  const auto check = check_mv_axioms(t);
  CHECK_FALSE(check.report.ok());
  CHECK_FALSE(check.algebra.has_value());
}
