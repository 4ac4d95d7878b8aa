#pragma once

#include <map>

#include "sympieri/young_diagram.hpp"

namespace sympieri {

// Formal nonnegative-integer combination of irreducible Sp_2m
// representations, keyed by highest weight.  Every key F satisfies
// depth(F) <= rank; multiplicities are >= 1.
struct Decomposition {
  int rank = 0;
  std::map<YoungDiagram, long long> terms;

  void add(const YoungDiagram& f, long long mult) {
    if (mult != 0) terms[f] += mult;
  }

  long long multiplicity(const YoungDiagram& f) const {
    auto it = terms.find(f);
    return it == terms.end() ? 0 : it->second;
  }

  long long total_multiplicity() const {
    long long t = 0;
    for (const auto& [f, mult] : terms) t += mult;
    return t;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

}  // namespace sympieri
