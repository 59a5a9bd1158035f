#pragma once

// Brute-force effect-algebra validity test written independently of the
// library scan: the partial operation lives in a map and associativity is
// checked in its one-directional textbook form.

#include <synaptica/effect_algebra.hpp>

#include <map>
#include <string>
#include <vector>
#include <optional>
#include <utility>

namespace oracle {

using synaptica::Elem;

inline bool is_effect_algebra(const synaptica::OrthosumTable& t) {
  const std::size_t n = t.size();
  if (n == 0 || t.zero >= n || t.one >= n || t.cells.size() != n * n) return false;
  std::map<std::pair<Elem, Elem>, Elem> op;
  for (Elem e = 0; e < n; ++e)
    for (Elem f = 0; f < n; ++f) {
      const Elem v = t.cells[e * n + f];
      if (v == synaptica::kUndefined) continue;
      if (v >= n) return false;
      op[{e, f}] = v;
    }
  auto sum = [&](Elem e, Elem f) -> std::optional<Elem> {
    auto it = op.find({e, f});
    if (it == op.end()) return std::nullopt;
    return it->second;
  };
  for (const auto& [k, v] : op) {
    auto r = sum(k.second, k.first);
    if (!r || *r != v) return false;
  }
  for (Elem d = 0; d < n; ++d)
    for (Elem e = 0; e < n; ++e)
      for (Elem f = 0; f < n; ++f) {
        auto ef = sum(e, f);
        if (!ef || !sum(d, *ef)) continue;
        auto de = sum(d, e);
        if (!de) return false;
        auto lhs = sum(*de, f);
        if (!lhs || *lhs != *sum(d, *ef)) return false;
      }
  for (Elem e = 0; e < n; ++e) {
    int supplements = 0;
    for (Elem f = 0; f < n; ++f) supplements += sum(e, f) == t.one;
    if (supplements != 1) return false;
    if (sum(e, t.one) && e != t.zero) return false;
  }
  return true;
}

/// Independent recheck that `w` really violates `axiom` in table `t`.
inline bool witness_violates(const synaptica::OrthosumTable& t, const std::string& axiom,
                             const std::vector<std::size_t>& w) {
  using synaptica::kUndefined;
  const std::size_t n = t.size();
  auto s = [&](Elem a, Elem b) { return (a == kUndefined || b == kUndefined) ? kUndefined : t.at(a, b); };
  if (axiom == "commutativity") return w.size() == 2 && t.at(w[0], w[1]) != t.at(w[1], w[0]);
  if (axiom == "associativity")
    return w.size() == 3 && s(w[0], s(w[1], w[2])) != s(s(w[0], w[1]), w[2]);
  if (axiom == "orthosupplementation") {
    if (w.size() != 1) return false;
    std::size_t count = 0;
    for (Elem f = 0; f < n; ++f) count += t.at(w[0], f) == t.one;
    return count != 1;
  }
  if (axiom == "zero-one law") return w.size() == 1 && w[0] != t.zero && t.at(w[0], t.one) != kUndefined;
  if (axiom == "cancelation")
    return w.size() == 3 && w[0] != w[1] && t.at(w[0], w[2]) != kUndefined && t.at(w[0], w[2]) == t.at(w[1], w[2]);
  return false;
}

}  // namespace oracle
