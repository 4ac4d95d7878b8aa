#pragma once

#include <optional>
#include <vector>

#include "sympieri/decomposition.hpp"
#include "sympieri/young_diagram.hpp"

namespace sympieri {

// Tensor product tau^D (x) omega_r for Sp_2m, valid for every D with
// depth(D) <= m and 1 <= r <= m.  Computed through the rank-n involution
// j_{n,m}: with E0 = j_{n,m}(D), each G in R_{n+1,m} doubly interlacing E0
// contributes its lepowsky_mult(G, E0, m-r, n) to the summand
// iota_{n+1,m}(G).  The auxiliary rank must satisfy n >= d_1; when omitted
// it defaults to max(d_1, 1).  The result does not depend on the choice.
Decomposition skew_pieri(const YoungDiagram& d, int r, int m,
                         std::optional<int> n = std::nullopt);

// Multiplicity of tau^{iota_{n+k,m}(E)} in
//   tau^{iota_{n,m}(D)} (x) omega_{m-j_1} (x) ... (x) omega_{m-j_k}
// for Sp_2m, where J = (j_1..j_k) with each j_a in [0, m] (j_a = m gives
// the trivial factor omega_0).  The fundamental factors are applied one at
// a time via skew_pieri.  Requires D in R_{n,m} and E in R_{n+k,m}.
long long multi_fundamental_mult(const YoungDiagram& d, const std::vector<int>& j,
                                 const YoungDiagram& e, int n, int m);

}  // namespace sympieri
