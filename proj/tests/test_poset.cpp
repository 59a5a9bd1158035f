#include <synaptica/models.hpp>
#include <synaptica/poset.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace synaptica;

namespace {

// Bitmask oracle for subset lattices.
Elem bit_meet(Elem a, Elem b) { return a & b; }
Elem bit_join(Elem a, Elem b) { return a | b; }

std::vector<Elem> all_elements(std::size_t n) {
  std::vector<Elem> v(n);
  for (Elem i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("partial order axioms are enforced") {
  CHECK_THROWS_AS(FinitePoset({"x", "y"}, {1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FinitePoset({"x", "y"}, {0, 0, 0, 1}), std::invalid_argument);
  // x <= y, y <= z but not x <= z
  const auto report = FinitePoset::check_order(3, {1, 1, 0, 0, 1, 1, 0, 0, 1});
  REQUIRE_FALSE(report.ok());
  CHECK(report.first_violation()->axiom == "transitive");
  CHECK(report.first_violation()->witness == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS(FinitePoset::from_pairs({"x", "y"}, {{0, 1}, {1, 0}}));
}

TEST_CASE("meet and join on small posets") {
  const auto b2 = models::boolean_lattice(2);
  // 01 and 10 are complementary atoms
  CHECK(meet(b2.base(), 1, 2) == Elem{0});
  CHECK(join(b2.base(), 1, 2) == Elem{3});

  const auto c2 = models::chain_poset(2);
  CHECK(meet(c2, 0, 1) == Elem{0});

  const auto bow = models::bowtie_poset();
  CHECK_FALSE(join(bow, 1, 2).has_value());
  CHECK(meet(bow, 1, 2) == Elem{0});
  CHECK_FALSE(meet(bow, 3, 4).has_value());
  CHECK_FALSE(is_lattice(bow));
}

TEST_CASE("meet and join agree with the bitmask oracle on 2^k") {
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto b = models::boolean_lattice(k);
    const std::size_t n = b.size();
    for (Elem a = 0; a < n; ++a)
      for (Elem c = 0; c < n; ++c) {
        CHECK(meet(b.base(), a, c) == bit_meet(a, c));
        CHECK(join(b.base(), a, c) == bit_join(a, c));
      }
  }
}

TEST_CASE("subset infimum and supremum") {
  const auto b2 = models::boolean_lattice(2);
  const Elem single[] = {1};
  CHECK(subset_inf_sup(b2.base(), single) == std::pair<std::optional<Elem>, std::optional<Elem>>{1, 1});
  const Elem pair[] = {1, 2};
  CHECK(subset_inf_sup(b2.base(), pair) == std::pair<std::optional<Elem>, std::optional<Elem>>{0, 3});
  const auto bow = models::bowtie_poset();
  const auto [inf, sup] = subset_inf_sup(bow, pair);
  CHECK(inf == Elem{0});
  CHECK_FALSE(sup.has_value());
  CHECK_THROWS_WITH(subset_inf_sup(bow, std::span<const Elem>{}), "empty subset");

  // random subsets of 2^4 against the bitmask oracle
  const auto b4 = models::boolean_lattice(4);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Elem> q;
    const auto size = 1 + rng() % 5;
    for (std::size_t i = 0; i < size; ++i) q.push_back(rng() % 16);
    Elem m = 15, j = 0;
    for (Elem x : q) m &= x, j |= x;
    const auto [lo, hi] = subset_inf_sup(b4.base(), q);
    CHECK(lo == m);
    CHECK(hi == j);
  }
}

TEST_CASE("classification of the standard lattices") {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto c = classify(models::boolean_lattice(k));
    CHECK(c.is_boolean);
    CHECK(c.is_oml());
    CHECK(c.is_lattice_complete);
    CHECK(c.is_directed);
  }
  const auto mo2 = classify(models::mo2());
  CHECK(mo2.is_oml());
  CHECK_FALSE(mo2.is_distributive);
  CHECK(mo2.is_complemented);
  CHECK_FALSE(mo2.is_boolean);

  const auto l6 = models::o6();
  const auto o6 = classify(l6);
  CHECK_FALSE(o6.is_oml());
  REQUIRE(o6.oml_witness.size() == 2);
  // independent recheck of the witness: a <= b but a v (b ^ a') != b
  const Elem a = o6.oml_witness[0], b = o6.oml_witness[1];
  CHECK(l6.leq(a, b));
  const auto bm = meet(l6.base(), b, l6.perp(a));
  REQUIRE(bm);
  CHECK(join(l6.base(), a, *bm) != b);

  const auto bow = classify(models::bowtie_poset());
  CHECK_FALSE(bow.is_lattice);
  CHECK_FALSE(bow.is_upward_directed);
  CHECK(bow.is_downward_directed);
  CHECK_FALSE(bow.is_lattice_complete);
  CHECK_THROWS_WITH(bow.is_oml(), "no orthocomplementation");

  for (std::size_t n = 1; n <= 6; ++n) {
    const auto c = classify(models::chain_poset(n));
    CHECK(c.is_lattice);
    CHECK(c.is_distributive);
    CHECK(c.is_lattice_complete);
    CHECK(c.is_complemented == (n <= 2));
  }
}

TEST_CASE("orthocomplementation conditions are enforced") {
  const auto b2 = models::boolean_lattice(2);
  // identity map is not a complementation
  CHECK_THROWS(BoundedOrtholattice(b2.base(), {0, 1, 2, 3}));
  const auto report = BoundedOrtholattice::check(b2.base(), {3, 1, 2, 0});
  CHECK_FALSE(report.ok());
  CHECK(report.first_violation()->axiom == "complements");
  CHECK(report.first_violation()->witness == std::vector<std::size_t>{1});
}

TEST_CASE("involution duality for upper and lower bounds") {
  for (const auto& l : {models::boolean_lattice(3), models::mo2(), models::o6()}) {
    const std::size_t n = l.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Elem> q, qp;
      for (Elem x = 0; x < n; ++x)
        if ((mask >> x) & 1) q.push_back(x), qp.push_back(l.perp(x));
      for (Elem b = 0; b < n; ++b)
        CHECK(l.base().is_upper_bound(b, q) == l.base().is_lower_bound(l.perp(b), qp));
    }
  }
}

TEST_CASE("meet and join are commutative and associative where present") {
  for (const auto& p : {models::boolean_lattice(3).base(), models::mo2().base(), models::bowtie_poset(),
                        models::chain_poset(4)}) {
    const auto all = all_elements(p.size());
    for (Elem a : all)
      for (Elem b : all) {
        CHECK(meet(p, a, b) == meet(p, b, a));
        CHECK(join(p, a, b) == join(p, b, a));
        for (Elem c : all) {
          const auto ab = meet(p, a, b), bc = meet(p, b, c);
          if (ab && bc) CHECK(meet(p, *ab, c) == meet(p, a, *bc));
          const auto jab = join(p, a, b), jbc = join(p, b, c);
          if (jab && jbc) CHECK(join(p, *jab, c) == join(p, a, *jbc));
        }
      }
  }
}

TEST_CASE("complements are unique exactly in the Boolean examples") {
  for (std::size_t k = 1; k <= 4; ++k) CHECK_FALSE(non_unique_complement(models::boolean_lattice(k).base()));
  CHECK(non_unique_complement(models::mo2().base()).has_value());
}
