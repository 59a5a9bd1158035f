#pragma once

// Finite effect algebras given by partial orthosum tables, and finite
// MV-algebras with the translation between the two.

#include <synaptica/poset.hpp>
#include <synaptica/report.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace synaptica {

/// Sentinel for an undefined orthosum.
inline constexpr Elem kUndefined = std::numeric_limits<Elem>::max();

/// Raw partial operation table, not yet validated.
struct OrthosumTable {
  std::vector<std::string> labels;
  Elem zero = 0;
  Elem one = 0;
  std::vector<Elem> cells;  // row-major n*n, kUndefined where e (+) f is undefined

  OrthosumTable() = default;
  OrthosumTable(std::vector<std::string> l, Elem z, Elem o)
      : labels(std::move(l)), zero(z), one(o), cells(labels.size() * labels.size(), kUndefined) {}

  std::size_t size() const { return labels.size(); }
  Elem at(Elem e, Elem f) const { return cells[e * size() + f]; }
  void set(Elem e, Elem f, Elem v) { cells[e * size() + f] = v; }
  void set_symmetric(Elem e, Elem f, Elem v) {
    set(e, f, v);
    set(f, e, v);
  }
  bool operator==(const OrthosumTable& o) const {
    return zero == o.zero && one == o.one && cells == o.cells;
  }
};

namespace detail {

// Validation scans; each records the first witness it meets.
inline AxiomReport scan_ea_axioms(const OrthosumTable& t) {
  AxiomReport report;
  const std::size_t n = t.size();
  {
    std::vector<std::size_t> w;
    bool ok = t.cells.size() == n * n && t.zero < n && t.one < n && n > 0;
    for (Elem e = 0; ok && e < n && w.empty(); ++e)
      for (Elem f = 0; f < n && w.empty(); ++f)
        if (t.at(e, f) != kUndefined && t.at(e, f) >= n) w = {e, f};
    report.add("table shape", ok && w.empty(), w);
    if (!report.ok()) return report;
  }
  auto sum = [&](Elem a, Elem b) -> Elem {
    if (a == kUndefined || b == kUndefined) return kUndefined;
    return t.at(a, b);
  };
  {
    std::vector<std::size_t> w;
    for (Elem e = 0; e < n && w.empty(); ++e)
      for (Elem f = e + 1; f < n && w.empty(); ++f)
        if (t.at(e, f) != t.at(f, e)) w = {e, f};
    report.add("commutativity", w.empty(), w);
  }
  {
    std::vector<std::size_t> w;
    for (Elem d = 0; d < n && w.empty(); ++d)
      for (Elem e = 0; e < n && w.empty(); ++e)
        for (Elem f = 0; f < n && w.empty(); ++f)
          if (sum(d, sum(e, f)) != sum(sum(d, e), f)) w = {d, e, f};
    report.add("associativity", w.empty(), w);
  }
  {
    std::vector<std::size_t> w;
    std::string note;
    for (Elem e = 0; e < n && w.empty(); ++e) {
      std::size_t count = 0;
      for (Elem f = 0; f < n; ++f)
        if (t.at(e, f) == t.one) ++count;
      if (count != 1) {
        w = {e};
        note = count == 0 ? "no orthosupplement" : "several orthosupplements";
      }
    }
    report.add("orthosupplementation", w.empty(), w, note);
  }
  {
    std::vector<std::size_t> w;
    for (Elem e = 0; e < n && w.empty(); ++e)
      if (e != t.zero && t.at(e, t.one) != kUndefined) w = {e};
    report.add("zero-one law", w.empty(), w);
  }
  {
    std::vector<std::size_t> w;
    for (Elem d = 0; d < n && w.empty(); ++d)
      for (Elem e = 0; e < n && w.empty(); ++e)
        for (Elem f = e + 1; f < n && w.empty(); ++f)
          if (t.at(e, d) != kUndefined && t.at(e, d) == t.at(f, d)) w = {e, f, d};
    report.add("cancelation", w.empty(), w);
  }
  return report;
}

}  // namespace detail

/// A validated finite effect algebra (E; 0, 1, perp, (+)).
class FiniteEffectAlgebra {
 public:
  /// Throws std::invalid_argument naming the first violated axiom.
  explicit FiniteEffectAlgebra(OrthosumTable table) : table_(std::move(table)) {
    const auto report = detail::scan_ea_axioms(table_);
    if (const auto* v = report.first_violation())
      throw std::invalid_argument("not an effect algebra: " + v->axiom + " fails");
    init();
  }

  std::size_t size() const { return table_.size(); }
  Elem zero() const { return table_.zero; }
  Elem one() const { return table_.one; }
  Elem perp(Elem e) const { return perp_[e]; }
  bool orthogonal(Elem e, Elem f) const { return table_.at(e, f) != kUndefined; }
  std::optional<Elem> osum(Elem e, Elem f) const {
    const Elem s = table_.at(e, f);
    if (s == kUndefined) return std::nullopt;
    return s;
  }
  const OrthosumTable& table() const { return table_; }
  const std::vector<std::string>& labels() const { return table_.labels; }
  const std::string& label(Elem e) const { return table_.labels.at(e); }

  bool operator==(const FiniteEffectAlgebra& o) const { return table_ == o.table_; }

 private:
  void init() {
    perp_.assign(size(), 0);
    for (Elem e = 0; e < size(); ++e)
      for (Elem f = 0; f < size(); ++f)
        if (table_.at(e, f) == table_.one) perp_[e] = f;
  }

  OrthosumTable table_;
  std::vector<Elem> perp_;
};

struct EffectAlgebraCheck {
  std::optional<FiniteEffectAlgebra> algebra;
  AxiomReport report;
};

/// Exhaustive O(n^3) scan of the effect-algebra axioms plus the derived
/// cancelation law.
inline EffectAlgebraCheck check_ea_axioms(const OrthosumTable& table) {
  EffectAlgebraCheck out;
  out.report = detail::scan_ea_axioms(table);
  if (out.report.ok()) out.algebra.emplace(table);
  return out;
}

/// e <= f iff e (+) d = f for some d.
inline FinitePoset induced_order(const FiniteEffectAlgebra& E) {
  const std::size_t n = E.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem e = 0; e < n; ++e)
    for (Elem d = 0; d < n; ++d)
      if (auto s = E.osum(e, d)) leq[e * n + *s] = 1;
  return FinitePoset(E.labels(), std::move(leq));
}

/// Laws every effect algebra satisfies, re-verified exhaustively.
inline AxiomReport check_ea_laws(const FiniteEffectAlgebra& E) {
  AxiomReport report;
  const std::size_t n = E.size();
  const FinitePoset P = induced_order(E);
  {
    std::vector<std::size_t> w;
    for (Elem e = 0; e < n && w.empty(); ++e)
      if (!P.leq(E.zero(), e) || !P.leq(e, E.one())) w = {e};
    report.add("bounded by 0 and 1", w.empty(), w);
  }
  {
    std::vector<std::size_t> w;
    for (Elem e = 0; e < n && w.empty(); ++e)
      for (Elem f = 0; f < n && w.empty(); ++f)
        if (P.leq(e, f) != P.leq(E.perp(f), E.perp(e))) w = {e, f};
    report.add("perp order reversing", w.empty(), w);
  }
  {
    std::vector<std::size_t> w;
    for (Elem e = 0; e < n && w.empty(); ++e)
      if (E.perp(E.perp(e)) != e) w = {e};
    report.add("perp involution", w.empty(), w);
  }
  {
    std::vector<std::size_t> w;
    for (Elem e = 0; e < n && w.empty(); ++e)
      for (Elem f = 0; f < n && w.empty(); ++f)
        if (E.orthogonal(e, f) != P.leq(e, E.perp(f))) w = {e, f};
    report.add("orthogonal iff below orthosupplement", w.empty(), w);
  }
  {
    std::vector<std::size_t> w;
    for (Elem e = 0; e < n && w.empty(); ++e)
      for (Elem f = 0; f < n && w.empty(); ++f) {
        if (!P.leq(e, f)) continue;
        const auto inner = E.osum(e, E.perp(f));
        const auto outer = inner ? E.osum(e, E.perp(*inner)) : std::nullopt;
        if (outer != f) w = {e, f};
      }
    report.add("difference law", w.empty(), w, "e <= f implies f = e + (e + f')'");
  }
  {
    std::vector<std::size_t> w;
    for (Elem d = 0; d < n && w.empty(); ++d)
      for (Elem e = 0; e < n && w.empty(); ++e)
        for (Elem f = e + 1; f < n && w.empty(); ++f)
          if (E.osum(e, d) && E.osum(e, d) == E.osum(f, d)) w = {e, f, d};
    report.add("cancelation", w.empty(), w);
  }
  return report;
}

/// Orthosum of a finite family; absent if some prefix sum is undefined.
/// The empty family sums to 0.
inline std::optional<Elem> orthosum_family(const FiniteEffectAlgebra& E,
                                           std::span<const Elem> family) {
  Elem acc = E.zero();
  for (Elem e : family) {
    const auto s = E.osum(acc, e);
    if (!s) return std::nullopt;
    acc = *s;
  }
  return acc;
}

inline bool is_sub_effect_algebra(const FiniteEffectAlgebra& E, std::span<const Elem> subset) {
  std::vector<std::uint8_t> in(E.size(), 0);
  for (Elem f : subset) {
    if (f >= E.size()) return false;
    in[f] = 1;
  }
  if (!in[E.zero()]) return false;
  for (Elem f = 0; f < E.size(); ++f) {
    if (!in[f]) continue;
    if (!in[E.perp(f)]) return false;
    for (Elem g = 0; g < E.size(); ++g)
      if (in[g])
        if (auto s = E.osum(f, g); s && !in[*s]) return false;
  }
  return true;
}

struct MorphismReport {
  bool is_morphism = false;
  bool is_isomorphism = false;
  std::string violation;      // empty when is_morphism
  std::vector<Elem> witness;  // offending element(s) of the source
};

namespace detail {

inline MorphismReport scan_morphism(const FiniteEffectAlgebra& E, const FiniteEffectAlgebra& F,
                                    std::span<const Elem> phi) {
  MorphismReport r;
  if (phi.size() != E.size()) {
    r.violation = "map is not total";
    return r;
  }
  for (Elem e = 0; e < E.size(); ++e)
    if (phi[e] >= F.size()) {
      r.violation = "map leaves the target";
      r.witness = {e};
      return r;
    }
  if (phi[E.one()] != F.one()) {
    r.violation = "phi(1) != 1";
    r.witness = {E.one()};
    return r;
  }
  for (Elem e = 0; e < E.size(); ++e)
    for (Elem f = 0; f < E.size(); ++f) {
      const auto s = E.osum(e, f);
      if (!s) continue;
      if (F.osum(phi[e], phi[f]) != phi[*s]) {
        r.violation = "orthosum not preserved";
        r.witness = {e, f};
        return r;
      }
    }
  r.is_morphism = true;
  return r;
}

}  // namespace detail

/// Effect-algebra morphism test; is_isomorphism additionally requires a
/// bijection whose inverse is a morphism.
inline MorphismReport check_morphism(const FiniteEffectAlgebra& E, const FiniteEffectAlgebra& F,
                                     std::span<const Elem> phi) {
  MorphismReport r = detail::scan_morphism(E, F, phi);
  if (!r.is_morphism || E.size() != F.size()) return r;
  std::vector<Elem> inverse(F.size(), kUndefined);
  for (Elem e = 0; e < E.size(); ++e) {
    if (inverse[phi[e]] != kUndefined) return r;
    inverse[phi[e]] = e;
  }
  r.is_isomorphism = detail::scan_morphism(F, E, inverse).is_morphism;
  return r;
}

/// The effect algebra of an orthomodular lattice: p (+) q = p v q when p <= q'.
inline FiniteEffectAlgebra oml_to_ea(const BoundedOrtholattice& L) {
  if (!classify(L).is_oml()) throw std::invalid_argument("input is not an OML");
  const LatticeTables t(L.base());
  OrthosumTable table(L.base().labels(), L.zero(), L.one());
  for (Elem p = 0; p < L.size(); ++p)
    for (Elem q = 0; q < L.size(); ++q)
      if (L.leq(p, L.perp(q))) table.set(p, q, *t.j(p, q));
  return FiniteEffectAlgebra(std::move(table));
}

/// Lattice ordered, and every disjoint pair is orthogonal.
inline bool is_mv_effect_algebra(const FiniteEffectAlgebra& E) {
  const LatticeTables t(induced_order(E));
  if (!t.is_lattice()) return false;
  for (Elem e = 0; e < E.size(); ++e)
    for (Elem f = 0; f < E.size(); ++f)
      if (*t.m(e, f) == E.zero() && !E.orthogonal(e, f)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// MV-algebras

/// Raw MV-algebra data: a total truncated addition and a unary perp.
struct MVTable {
  std::vector<std::string> labels;
  Elem zero = 0;
  Elem one = 0;
  std::vector<Elem> plus;  // row-major n*n, total
  std::vector<Elem> perp;

  std::size_t size() const { return labels.size(); }
  Elem add(Elem x, Elem y) const { return plus[x * size() + y]; }
  bool operator==(const MVTable& o) const {
    return zero == o.zero && one == o.one && plus == o.plus && perp == o.perp;
  }
};

namespace detail {

inline AxiomReport scan_mv_axioms(const MVTable& m) {
  AxiomReport report;
  const std::size_t n = m.size();
  {
    bool ok = n > 0 && m.plus.size() == n * n && m.perp.size() == n && m.zero < n && m.one < n;
    for (std::size_t i = 0; ok && i < m.plus.size(); ++i) ok = m.plus[i] < n;
    for (std::size_t i = 0; ok && i < m.perp.size(); ++i) ok = m.perp[i] < n;
    report.add("table shape", ok);
    if (!ok) return report;
  }
  auto P = [&](Elem x, Elem y) { return m.add(x, y); };
  auto N = [&](Elem x) { return m.perp[x]; };
  auto first = [&](auto pred, int arity) {
    std::vector<std::size_t> w;
    for (Elem x = 0; x < n && w.empty(); ++x)
      for (Elem y = 0; y < (arity > 1 ? n : 1) && w.empty(); ++y)
        for (Elem z = 0; z < (arity > 2 ? n : 1) && w.empty(); ++z)
          if (!pred(x, y, z)) {
            w = {x};
            if (arity > 1) w.push_back(y);
            if (arity > 2) w.push_back(z);
          }
    return w;
  };
  auto add = [&](const char* name, auto pred, int arity) {
    auto w = first(pred, arity);
    report.add(name, w.empty(), w);
  };
  add("(1) associativity", [&](Elem x, Elem y, Elem z) { return P(x, P(y, z)) == P(P(x, y), z); }, 3);
  add("(2) commutativity", [&](Elem x, Elem y, Elem) { return P(x, y) == P(y, x); }, 2);
  add("(3) zero is neutral", [&](Elem x, Elem, Elem) { return P(x, m.zero) == x; }, 1);
  add("(4) perp involution", [&](Elem x, Elem, Elem) { return N(N(x)) == x; }, 1);
  report.add("(5) perp of zero is one", N(m.zero) == m.one);
  add("(6) x + x' = 1", [&](Elem x, Elem, Elem) { return P(x, N(x)) == m.one; }, 1);
  add("(7) x + (x + y')' = y + (y + x')'",
      [&](Elem x, Elem y, Elem) { return P(x, N(P(x, N(y)))) == P(y, N(P(y, N(x)))); }, 2);
  return report;
}

}  // namespace detail

class FiniteMVAlgebra {
 public:
  /// Throws std::invalid_argument naming the first violated MV axiom.
  explicit FiniteMVAlgebra(MVTable table) : t_(std::move(table)) {
    const auto report = detail::scan_mv_axioms(t_);
    if (const auto* v = report.first_violation())
      throw std::invalid_argument("not an MV-algebra: axiom " + v->axiom + " fails");
  }

  std::size_t size() const { return t_.size(); }
  Elem zero() const { return t_.zero; }
  Elem one() const { return t_.one; }
  Elem plus(Elem x, Elem y) const { return t_.add(x, y); }
  Elem perp(Elem x) const { return t_.perp[x]; }
  /// x v y = x + (x + y')'.
  Elem join(Elem x, Elem y) const { return plus(x, perp(plus(x, perp(y)))); }
  Elem meet(Elem x, Elem y) const { return perp(join(perp(x), perp(y))); }
  /// x <= y iff y = x v y.
  bool leq(Elem x, Elem y) const { return join(x, y) == y; }
  const MVTable& table() const { return t_; }
  const std::vector<std::string>& labels() const { return t_.labels; }

  FinitePoset order() const {
    std::vector<std::uint8_t> leq(size() * size(), 0);
    for (Elem x = 0; x < size(); ++x)
      for (Elem y = 0; y < size(); ++y) leq[x * size() + y] = this->leq(x, y);
    return FinitePoset(t_.labels, std::move(leq));
  }

  bool operator==(const FiniteMVAlgebra& o) const { return t_ == o.t_; }

 private:
  MVTable t_;
};

struct MVAlgebraCheck {
  std::optional<FiniteMVAlgebra> algebra;
  AxiomReport report;
};

inline MVAlgebraCheck check_mv_axioms(const MVTable& table) {
  MVAlgebraCheck out;
  out.report = detail::scan_mv_axioms(table);
  if (out.report.ok()) out.algebra.emplace(table);
  return out;
}

/// e + f := e (+) (e' ^ f). Requires an MV-effect algebra.
inline FiniteMVAlgebra ea_to_mv(const FiniteEffectAlgebra& E) {
  if (!is_mv_effect_algebra(E)) throw std::invalid_argument("input is not an MV-effect algebra");
  const LatticeTables t(induced_order(E));
  MVTable m;
  m.labels = E.labels();
  m.zero = E.zero();
  m.one = E.one();
  m.plus.resize(E.size() * E.size());
  m.perp.resize(E.size());
  for (Elem e = 0; e < E.size(); ++e) {
    m.perp[e] = E.perp(e);
    for (Elem f = 0; f < E.size(); ++f) {
      const auto s = E.osum(e, *t.m(E.perp(e), f));
      if (!s) throw std::logic_error("e and e' ^ f not orthogonal in an MV-effect algebra");
      m.plus[e * E.size() + f] = *s;
    }
  }
  return FiniteMVAlgebra(std::move(m));
}

/// x (+) y := x + y whenever x <= y' in the MV order.
inline FiniteEffectAlgebra mv_to_ea(const FiniteMVAlgebra& M) {
  OrthosumTable table(M.labels(), M.zero(), M.one());
  for (Elem x = 0; x < M.size(); ++x)
    for (Elem y = 0; y < M.size(); ++y)
      if (M.leq(x, M.perp(y))) table.set(x, y, M.plus(x, y));
  return FiniteEffectAlgebra(std::move(table));
}

}  // namespace synaptica
