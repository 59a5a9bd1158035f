#pragma once

// Finite posets, lattices and orthocomplementations.

#include <synaptica/report.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace synaptica {

/// Elements of finite structures are opaque indices 0..n-1.
using Elem = std::size_t;

namespace detail {

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace detail

/// A partial order on {0,..,n-1} held as a dense Boolean relation table.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Takes the relation table as given (row-major, leq[i*n+j] means i <= j).
  /// Throws std::invalid_argument if it is not a partial order.
  FinitePoset(std::vector<std::string> labels, std::vector<std::uint8_t> leq)
      : labels_(std::move(labels)), leq_(std::move(leq)) {
    if (leq_.size() != labels_.size() * labels_.size())
      throw std::invalid_argument("relation table has wrong size");
    const auto report = check_order(labels_.size(), leq_);
    if (const auto* v = report.first_violation())
      throw std::invalid_argument("not a partial order: " + v->axiom + " fails");
  }

  /// Builds the reflexive-transitive closure of `pairs` and checks antisymmetry.
  static FinitePoset from_pairs(std::vector<std::string> labels,
                                const std::vector<std::pair<Elem, Elem>>& pairs) {
    const std::size_t n = labels.size();
    return FinitePoset(std::move(labels), closure(n, pairs));
  }

  static std::vector<std::uint8_t> closure(std::size_t n,
                                           const std::vector<std::pair<Elem, Elem>>& pairs) {
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw std::invalid_argument("order pair references unknown element");
      leq[a * n + b] = 1;
    }
    // Warshall.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k * n + j]) leq[i * n + j] = 1;
    return leq;
  }

  /// Reflexivity, antisymmetry and transitivity, each with its first witness.
  static AxiomReport check_order(std::size_t n, const std::vector<std::uint8_t>& leq) {
    AxiomReport report;
    auto at = [&](Elem i, Elem j) { return leq[i * n + j] != 0; };
    {
      std::vector<std::size_t> w;
      for (Elem i = 0; i < n && w.empty(); ++i)
        if (!at(i, i)) w = {i};
      report.add("reflexive", w.empty(), w);
    }
    {
      std::vector<std::size_t> w;
      for (Elem i = 0; i < n && w.empty(); ++i)
        for (Elem j = i + 1; j < n && w.empty(); ++j)
          if (at(i, j) && at(j, i)) w = {i, j};
      report.add("antisymmetric", w.empty(), w);
    }
    {
      std::vector<std::size_t> w;
      for (Elem i = 0; i < n && w.empty(); ++i)
        for (Elem j = 0; j < n && w.empty(); ++j)
          if (at(i, j))
            for (Elem k = 0; k < n && w.empty(); ++k)
              if (at(j, k) && !at(i, k)) w = {i, j, k};
      report.add("transitive", w.empty(), w);
    }
    return report;
  }

  std::size_t size() const { return labels_.size(); }
  bool leq(Elem a, Elem b) const { return leq_[a * size() + b] != 0; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }

  const std::string& label(Elem a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::uint8_t>& table() const { return leq_; }

  std::optional<Elem> index_of(const std::string& label) const {
    for (Elem i = 0; i < size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  bool is_lower_bound(Elem a, std::span<const Elem> q) const {
    return std::all_of(q.begin(), q.end(), [&](Elem x) { return leq(a, x); });
  }
  bool is_upper_bound(Elem b, std::span<const Elem> q) const {
    return std::all_of(q.begin(), q.end(), [&](Elem x) { return leq(x, b); });
  }

  /// Same relation table (labels are ignored).
  bool same_order(const FinitePoset& other) const { return leq_ == other.leq_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
};

/// Greatest lower bound of `q`, found by scanning all common lower bounds.
inline std::optional<Elem> infimum(const FinitePoset& p, std::span<const Elem> q) {
  std::vector<Elem> lower;
  for (Elem c = 0; c < p.size(); ++c)
    if (p.is_lower_bound(c, q)) lower.push_back(c);
  for (Elem g : lower)
    if (p.is_upper_bound(g, lower)) return g;
  return std::nullopt;
}

/// Least upper bound of `q`, found by scanning all common upper bounds.
inline std::optional<Elem> supremum(const FinitePoset& p, std::span<const Elem> q) {
  std::vector<Elem> upper;
  for (Elem c = 0; c < p.size(); ++c)
    if (p.is_upper_bound(c, q)) upper.push_back(c);
  for (Elem l : upper)
    if (p.is_lower_bound(l, upper)) return l;
  return std::nullopt;
}

inline std::optional<Elem> meet(const FinitePoset& p, Elem a, Elem b) {
  const Elem q[2] = {a, b};
  return infimum(p, q);
}

inline std::optional<Elem> join(const FinitePoset& p, Elem a, Elem b) {
  const Elem q[2] = {a, b};
  return supremum(p, q);
}

/// (inf Q, sup Q); each component is absent when it does not exist.
inline std::pair<std::optional<Elem>, std::optional<Elem>> subset_inf_sup(
    const FinitePoset& p, std::span<const Elem> q) {
  if (q.empty()) throw std::invalid_argument("empty subset");
  for (Elem x : q)
    if (x >= p.size()) throw std::invalid_argument("subset references unknown element");
  return {infimum(p, q), supremum(p, q)};
}

inline std::optional<Elem> minimum(const FinitePoset& p) {
  for (Elem a = 0; a < p.size(); ++a) {
    bool ok = true;
    for (Elem b = 0; b < p.size() && ok; ++b) ok = p.leq(a, b);
    if (ok) return a;
  }
  return std::nullopt;
}

inline std::optional<Elem> maximum(const FinitePoset& p) {
  for (Elem a = 0; a < p.size(); ++a) {
    bool ok = true;
    for (Elem b = 0; b < p.size() && ok; ++b) ok = p.leq(b, a);
    if (ok) return a;
  }
  return std::nullopt;
}

/// Pairwise meet and join tables; an entry is absent when the bound does not exist.
struct LatticeTables {
  std::size_t n = 0;
  std::vector<std::optional<Elem>> meet;
  std::vector<std::optional<Elem>> join;

  explicit LatticeTables(const FinitePoset& p) : n(p.size()), meet(n * n), join(n * n) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a; b < n; ++b) {
        meet[a * n + b] = meet[b * n + a] = synaptica::meet(p, a, b);
        join[a * n + b] = join[b * n + a] = synaptica::join(p, a, b);
      }
  }

  std::optional<Elem> m(Elem a, Elem b) const { return meet[a * n + b]; }
  std::optional<Elem> j(Elem a, Elem b) const { return join[a * n + b]; }

  bool is_lattice() const {
    return std::all_of(meet.begin(), meet.end(), [](auto& x) { return x.has_value(); }) &&
           std::all_of(join.begin(), join.end(), [](auto& x) { return x.has_value(); });
  }
};

inline bool is_lattice(const FinitePoset& p) { return LatticeTables(p).is_lattice(); }

/// A bounded lattice with an orthocomplementation a -> perp[a].
class BoundedOrtholattice {
 public:
  BoundedOrtholattice() = default;

  /// Throws std::invalid_argument naming the first failed condition.
  BoundedOrtholattice(FinitePoset base, std::vector<Elem> perp)
      : base_(std::move(base)), perp_(std::move(perp)) {
    const auto report = check(base_, perp_);
    if (const auto* v = report.first_violation())
      throw std::invalid_argument("not a bounded ortholattice: " + v->axiom + " fails");
    zero_ = *minimum(base_);
    one_ = *maximum(base_);
  }

  /// Bounded lattice + involutive, order-reversing complementation.
  static AxiomReport check(const FinitePoset& p, const std::vector<Elem>& perp) {
    AxiomReport report;
    const std::size_t n = p.size();
    if (perp.size() != n) {
      report.add("perp total", false, {}, "perp map must cover every element");
      return report;
    }
    for (Elem a = 0; a < n; ++a)
      if (perp[a] >= n) {
        report.add("perp total", false, {a}, "perp maps outside the element set");
        return report;
      }
    const auto lo = minimum(p);
    const auto hi = maximum(p);
    report.add("bounded", lo && hi);
    const LatticeTables t(p);
    {
      std::vector<std::size_t> w;
      for (Elem a = 0; a < n && w.empty(); ++a)
        for (Elem b = 0; b < n && w.empty(); ++b)
          if (!t.m(a, b) || !t.j(a, b)) w = {a, b};
      report.add("lattice", w.empty(), w);
    }
    {
      std::vector<std::size_t> w;
      for (Elem a = 0; a < n && w.empty(); ++a)
        if (perp[perp[a]] != a) w = {a};
      report.add("perp involution", w.empty(), w);
    }
    {
      std::vector<std::size_t> w;
      for (Elem a = 0; a < n && w.empty(); ++a)
        for (Elem b = 0; b < n && w.empty(); ++b)
          if (p.leq(a, b) && !p.leq(perp[b], perp[a])) w = {a, b};
      report.add("perp order reversing", w.empty(), w);
    }
    {
      std::vector<std::size_t> w;
      if (lo && hi)
        for (Elem a = 0; a < n && w.empty(); ++a)
          if (t.m(a, perp[a]) != lo || t.j(a, perp[a]) != hi) w = {a};
      report.add("complements", lo && hi && w.empty(), w);
    }
    return report;
  }

  const FinitePoset& base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  Elem perp(Elem a) const { return perp_.at(a); }
  const std::vector<Elem>& perp_map() const { return perp_; }
  bool leq(Elem a, Elem b) const { return base_.leq(a, b); }

 private:
  FinitePoset base_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<Elem> perp_;
};

/// Classification flags for a finite poset. The completeness predicates are
/// their finite-poset decisions.
struct Classification {
  bool is_lattice = false;
  bool is_bounded = false;
  bool is_distributive = false;
  bool is_complemented = false;
  bool is_boolean = false;
  bool is_upward_directed = false;
  bool is_downward_directed = false;
  bool is_directed = false;
  bool is_sigma_complete = false;
  bool is_dedekind_sigma_complete = false;
  bool is_monotone_sigma_complete = false;
  bool is_lattice_complete = false;
  std::optional<bool> orthomodular;
  /// Witness pair (a, b) with a <= b and b != a v (b ^ a') when not an OML.
  std::vector<Elem> oml_witness;

  /// Throws std::logic_error("no orthocomplementation") for bare posets.
  bool is_oml() const {
    if (!orthomodular) throw std::logic_error("no orthocomplementation");
    return *orthomodular;
  }
};

inline Classification classify(const FinitePoset& p) {
  Classification c;
  const std::size_t n = p.size();
  const LatticeTables t(p);
  c.is_lattice = t.is_lattice();
  const auto lo = minimum(p);
  const auto hi = maximum(p);
  c.is_bounded = lo && hi;

  c.is_upward_directed = c.is_downward_directed = true;
  bool pairwise_dedekind = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      bool has_upper = false, has_lower = false;
      for (Elem x = 0; x < n; ++x) {
        has_upper = has_upper || (p.leq(a, x) && p.leq(b, x));
        has_lower = has_lower || (p.leq(x, a) && p.leq(x, b));
      }
      c.is_upward_directed = c.is_upward_directed && has_upper;
      c.is_downward_directed = c.is_downward_directed && has_lower;
      if ((has_upper && !t.j(a, b)) || (has_lower && !t.m(a, b))) pairwise_dedekind = false;
    }
  c.is_directed = c.is_upward_directed && c.is_downward_directed;
  // Pairwise bounds iterate to bounds of any finite set.
  c.is_sigma_complete = c.is_lattice && n > 0;
  c.is_dedekind_sigma_complete = pairwise_dedekind;
  // Ascending sequences in a finite poset are eventually constant.
  c.is_monotone_sigma_complete = true;
  c.is_lattice_complete = c.is_lattice && c.is_bounded;

  if (c.is_lattice) {
    bool distributive = true;
    for (Elem a = 0; a < n && distributive; ++a)
      for (Elem b = 0; b < n && distributive; ++b)
        for (Elem d = 0; d < n && distributive; ++d) {
          const Elem lhs = *t.m(a, *t.j(b, d));
          const Elem rhs = *t.j(*t.m(a, b), *t.m(a, d));
          distributive = lhs == rhs;
        }
    c.is_distributive = distributive;
  }
  if (c.is_lattice && c.is_bounded) {
    bool complemented = true;
    for (Elem a = 0; a < n && complemented; ++a) {
      bool found = false;
      for (Elem b = 0; b < n && !found; ++b) found = t.m(a, b) == lo && t.j(a, b) == hi;
      complemented = found;
    }
    c.is_complemented = complemented;
  }
  c.is_boolean = c.is_lattice && c.is_bounded && c.is_complemented && c.is_distributive;
  return c;
}

/// As above, plus the exhaustive orthomodular-identity scan over all a <= b.
inline Classification classify(const BoundedOrtholattice& l) {
  Classification c = classify(l.base());
  const LatticeTables t(l.base());
  const std::size_t n = l.size();
  bool oml = true;
  for (Elem a = 0; a < n && oml; ++a)
    for (Elem b = 0; b < n && oml; ++b)
      if (l.leq(a, b) && *t.j(a, *t.m(b, l.perp(a))) != b) {
        oml = false;
        c.oml_witness = {a, b};
      }
  c.orthomodular = oml;
  return c;
}

/// Unique complement of every element of a Boolean algebra; returns the first
/// element with zero or several complements, if any.
inline std::optional<Elem> non_unique_complement(const FinitePoset& p) {
  const LatticeTables t(p);
  const auto lo = minimum(p);
  const auto hi = maximum(p);
  for (Elem a = 0; a < p.size(); ++a) {
    int count = 0;
    for (Elem b = 0; b < p.size(); ++b)
      if (t.m(a, b) == lo && t.j(a, b) == hi) ++count;
    if (count != 1) return a;
  }
  return std::nullopt;
}

}  // namespace synaptica
