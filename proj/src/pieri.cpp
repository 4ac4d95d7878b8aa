#include "sympieri/pieri.hpp"

#include <stdexcept>
#include <string>

#include "sympieri/branching.hpp"
#include "sympieri/kostant.hpp"

namespace sympieri {

Decomposition skew_pieri(const YoungDiagram& d, int r, int m, std::optional<int> n_opt) {
  if (d.depth() > m)
    throw std::invalid_argument("skew_pieri: depth(" + d.str() + ") exceeds rank " +
                                std::to_string(m));
  if (r < 1 || r > m)
    throw std::invalid_argument("skew_pieri: fundamental index must be in 1.." +
                                std::to_string(m));
  int n = n_opt.value_or(std::max(d.first_row(), 1));
  if (n < d.first_row())
    throw std::invalid_argument("skew_pieri: auxiliary rank " + std::to_string(n) +
                                " is below the first row of " + d.str());
  YoungDiagram e0 = j_inverse(d, {n, m});
  Decomposition out{m, {}};
  for (const YoungDiagram& g : enumerate_up(e0, n, m)) {
    long long mult = lepowsky_mult(g, e0, m - r, n);
    if (mult > 0) out.add(iota(g, {n + 1, m}), mult);
  }
  return out;
}

long long multi_fundamental_mult(const YoungDiagram& d, const std::vector<int>& j,
                                 const YoungDiagram& e, int n, int m) {
  int k = static_cast<int>(j.size());
  if (!fits(d, {n, m}))
    throw std::invalid_argument("multi_fundamental_mult: " + d.str() + " outside R_{" +
                                std::to_string(n) + "," + std::to_string(m) + "}");
  if (!fits(e, {n + k, m}))
    throw std::invalid_argument("multi_fundamental_mult: " + e.str() + " outside R_{" +
                                std::to_string(n + k) + "," + std::to_string(m) + "}");
  for (int ja : j)
    if (ja < 0 || ja > m)
      throw std::invalid_argument("multi_fundamental_mult: index " + std::to_string(ja) +
                                  " outside 0.." + std::to_string(m));
  Decomposition acc{m, {}};
  acc.add(iota(d, {n, m}), 1);
  for (int ja : j) {
    if (ja == m) continue;  // omega_0 is the trivial representation
    Decomposition next{m, {}};
    for (const auto& [f, mult] : acc.terms)
      for (const auto& [g, c] : skew_pieri(f, m - ja, m).terms) next.add(g, mult * c);
    acc = std::move(next);
  }
  return acc.multiplicity(iota(e, {n + k, m}));
}

}  // namespace sympieri
