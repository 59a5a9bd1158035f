#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace synaptica {

/// Outcome of one axiom (or law) scan. `witness` holds the element indices
/// of the first counterexample found; it is empty when the axiom holds.
struct AxiomResult {
  std::string axiom;
  bool holds = true;
  std::vector<std::size_t> witness;
  std::string note;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool ok() const {
    for (const auto& r : results)
      if (!r.holds) return false;
    return true;
  }

  const AxiomResult* first_violation() const {
    for (const auto& r : results)
      if (!r.holds) return &r;
    return nullptr;
  }

  void add(std::string axiom, bool holds, std::vector<std::size_t> witness = {},
           std::string note = {}) {
    results.push_back({std::move(axiom), holds, std::move(witness), std::move(note)});
  }
};

}  // namespace synaptica
