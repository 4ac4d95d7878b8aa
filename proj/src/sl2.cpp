#include "sympieri/sl2.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sympieri {

Sl2Decomposition cg_pair(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("cg_pair: weights must be nonnegative");
  Sl2Decomposition out;
  for (int ell = std::abs(a - b); ell <= a + b; ell += 2) out[ell] = 1;
  return out;
}

Sl2Decomposition cg_multi(const std::vector<int>& factors) {
  Sl2Decomposition acc{{0, 1}};
  for (int f : factors) {
    if (f < 0) throw std::invalid_argument("cg_multi: weights must be nonnegative");
    Sl2Decomposition next;
    for (const auto& [a, mult] : acc)
      for (int ell = std::abs(a - f); ell <= a + f; ell += 2) next[ell] += mult;
    acc = std::move(next);
  }
  return acc;
}

long long cg_multiplicity(int ell, const std::vector<int>& factors) {
  if (ell < 0) throw std::invalid_argument("cg_multiplicity: weight must be nonnegative");
  Sl2Decomposition dec = cg_multi(factors);
  auto it = dec.find(ell);
  return it == dec.end() ? 0 : it->second;
}

long long sl2_total_dimension(const Sl2Decomposition& dec) {
  long long total = 0;
  for (const auto& [ell, mult] : dec) total += mult * (ell + 1);
  return total;
}

}  // namespace sympieri
