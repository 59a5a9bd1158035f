#pragma once

// Small named structures used by the tests, the verify suites and the
// acceptance runner.

#include <synaptica/effect_algebra.hpp>
#include <synaptica/poset.hpp>

#include <string>
#include <vector>

namespace synaptica::models {

/// Chain 0 < 1 < ... < n-1.
inline FinitePoset chain_poset(std::size_t n) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i; j < n; ++j) leq[i * n + j] = 1;
  return FinitePoset(detail::default_labels(n), std::move(leq));
}

/// Two minimal elements m1, m2 below two maximal elements M1, M2, plus a
/// bottom 0: every pair of minimal elements has two minimal upper bounds.
inline FinitePoset bowtie_poset() {
  // 0, m1, m2, M1, M2
  return FinitePoset::from_pairs({"0", "m1", "m2", "M1", "M2"},
                                 {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

inline std::string subset_label(std::size_t mask, std::size_t k) {
  std::string s;
  for (std::size_t i = 0; i < k; ++i) s += (mask >> i) & 1 ? '1' : '0';
  return s;
}

/// Boolean algebra of subsets of a k-set; element i is the bitmask i and
/// its label is the bit string (least significant bit first).
inline BoundedOrtholattice boolean_lattice(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<Elem> perp(n);
  for (Elem a = 0; a < n; ++a) {
    labels.push_back(subset_label(a, k));
    perp[a] = (n - 1) & ~a;
    for (Elem b = 0; b < n; ++b) leq[a * n + b] = (a & ~b) == 0;
  }
  return BoundedOrtholattice(FinitePoset(std::move(labels), std::move(leq)), std::move(perp));
}

/// MO2: 0 < a, a', b, b' < 1 with the four atoms pairwise incomparable.
inline BoundedOrtholattice mo2() {
  // 0, a, a', b, b', 1
  auto p = FinitePoset::from_pairs({"0", "a", "a'", "b", "b'", "1"},
                                   {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
  return BoundedOrtholattice(std::move(p), {5, 2, 1, 4, 3, 0});
}

/// Benzene ring O6: 0 < a < b < 1 and 0 < b' < a' < 1.
inline BoundedOrtholattice o6() {
  // 0, a, b, b', a', 1
  auto p = FinitePoset::from_pairs({"0", "a", "b", "b'", "a'", "1"},
                                   {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}});
  return BoundedOrtholattice(std::move(p), {5, 4, 3, 2, 1, 0});
}

/// Lukasiewicz chain {0, 1/k, ..., 1} with i (+) j = i + j when i + j <= k.
inline FiniteEffectAlgebra chain_ea(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i <= k; ++i)
    labels.push_back(i == 0 ? "0" : i == k ? "1" : std::to_string(i) + "/" + std::to_string(k));
  OrthosumTable t(std::move(labels), 0, k);
  for (Elem i = 0; i <= k; ++i)
    for (Elem j = 0; i + j <= k; ++j) t.set(i, j, i + j);
  return FiniteEffectAlgebra(std::move(t));
}

/// The 3-chain {0, h, 1} with h (+) h = 1.
inline FiniteEffectAlgebra three_chain() {
  OrthosumTable t({"0", "h", "1"}, 0, 2);
  t.set_symmetric(0, 0, 0);
  t.set_symmetric(0, 1, 1);
  t.set_symmetric(0, 2, 2);
  t.set(1, 1, 2);
  return FiniteEffectAlgebra(std::move(t));
}

inline FiniteEffectAlgebra boolean_ea(std::size_t k) { return oml_to_ea(boolean_lattice(k)); }
inline FiniteEffectAlgebra mo2_ea() { return oml_to_ea(mo2()); }

/// Horizontal sum of two 3-chains: 0 < a, b < 1 with a (+) a = b (+) b = 1.
/// A lattice-ordered effect algebra in which a ^ b = 0 but a (+) b is
/// undefined, so it is not an MV-effect algebra.
inline FiniteEffectAlgebra diamond_ea() {
  OrthosumTable t({"0", "a", "b", "1"}, 0, 3);
  for (Elem e = 0; e < 4; ++e) t.set_symmetric(0, e, e);
  t.set(1, 1, 3);
  t.set(2, 2, 3);
  return FiniteEffectAlgebra(std::move(t));
}

/// Coordinatewise product E x F; element (e, f) has index e * |F| + f.
inline FiniteEffectAlgebra product_ea(const FiniteEffectAlgebra& E, const FiniteEffectAlgebra& F) {
  const std::size_t m = F.size();
  std::vector<std::string> labels;
  for (Elem e = 0; e < E.size(); ++e)
    for (Elem f = 0; f < m; ++f) labels.push_back("(" + E.label(e) + "," + F.label(f) + ")");
  OrthosumTable t(std::move(labels), E.zero() * m + F.zero(), E.one() * m + F.one());
  for (Elem e1 = 0; e1 < E.size(); ++e1)
    for (Elem f1 = 0; f1 < m; ++f1)
      for (Elem e2 = 0; e2 < E.size(); ++e2)
        for (Elem f2 = 0; f2 < m; ++f2) {
          const auto se = E.osum(e1, e2);
          const auto sf = F.osum(f1, f2);
          if (se && sf) t.set(e1 * m + f1, e2 * m + f2, *se * m + *sf);
        }
  return FiniteEffectAlgebra(std::move(t));
}

/// Lukasiewicz MV chain {0, ..., k}: x + y = min(k, x + y), x' = k - x.
inline FiniteMVAlgebra chain_mv(std::size_t k) {
  MVTable m;
  for (std::size_t i = 0; i <= k; ++i) m.labels.push_back(std::to_string(i));
  m.zero = 0;
  m.one = k;
  for (Elem x = 0; x <= k; ++x) {
    m.perp.push_back(k - x);
    for (Elem y = 0; y <= k; ++y) m.plus.push_back(std::min(k, x + y));
  }
  return FiniteMVAlgebra(std::move(m));
}

struct NamedEffectAlgebra {
  std::string name;
  FiniteEffectAlgebra algebra;
};

/// Valid effect algebras used by the axiom oracle.
inline std::vector<NamedEffectAlgebra> curated_effect_algebras() {
  std::vector<NamedEffectAlgebra> out;
  out.push_back({"3-chain", three_chain()});
  for (std::size_t k = 1; k <= 4; ++k) out.push_back({"boolean 2^" + std::to_string(k), boolean_ea(k)});
  out.push_back({"MO2", mo2_ea()});
  return out;
}

/// MV-effect algebras used by the MV round-trip oracle.
inline std::vector<NamedEffectAlgebra> mv_effect_algebras() {
  std::vector<NamedEffectAlgebra> out;
  for (std::size_t k = 1; k <= 6; ++k) out.push_back({"chain " + std::to_string(k + 1), chain_ea(k)});
  for (std::size_t k = 1; k <= 4; ++k) out.push_back({"boolean 2^" + std::to_string(k), boolean_ea(k)});
  out.push_back({"3-chain x 3-chain", product_ea(three_chain(), three_chain())});
  out.push_back({"3-chain x 4-chain", product_ea(three_chain(), chain_ea(3))});
  out.push_back({"2^1 x 5-chain", product_ea(boolean_ea(1), chain_ea(4))});
  return out;
}

/// A table with exactly one cell changed.
struct Mutation {
  OrthosumTable table;
  Elem e = 0;
  Elem f = 0;
  Elem before = kUndefined;
  Elem after = kUndefined;
};

/// Every single-entry mutation of `t`: each cell is replaced by each other
/// element and by the undefined marker, in row-major cell order.
inline std::vector<Mutation> single_entry_mutations(const OrthosumTable& t) {
  const std::size_t n = t.size();
  std::vector<Mutation> out;
  for (std::size_t cell = 0; cell < n * n; ++cell) {
    const Elem before = t.cells[cell];
    std::vector<Elem> alternatives;
    if (before != kUndefined) alternatives.push_back(kUndefined);
    for (Elem v = 0; v < n; ++v)
      if (v != before) alternatives.push_back(v);
    for (Elem after : alternatives) {
      Mutation m{t, cell / n, cell % n, before, after};
      m.table.cells[cell] = after;
      out.push_back(std::move(m));
    }
  }
  return out;
}

/// `count` items spread evenly over `items` (all of them if fewer).
template <class T>
std::vector<T> spread(const std::vector<T>& items, std::size_t count) {
  if (items.size() <= count) return items;
  std::vector<T> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(items[i * items.size() / count]);
  return out;
}

}  // namespace synaptica::models
