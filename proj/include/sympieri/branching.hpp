#pragma once

#include <vector>

#include "sympieri/sl2.hpp"
#include "sympieri/young_diagram.hpp"

namespace sympieri {

// Double interlacing E << G for E with at most n rows, G with at most n+1:
// g_i >= e_i >= g_{i+2} for all i (rows beyond the depth count as 0).
bool doubly_interlaces(const YoungDiagram& e, const YoungDiagram& g, int n);

// Merge g_1..g_{n+1}, e_1..e_n and a final 0 into one weakly decreasing list
// of 2n+2 entries, pair consecutive entries (x_1,y_1),...,(x_{n+1},y_{n+1}),
// and return rho_i = x_i - y_i.  Defined (all rho_i >= 0) exactly when
// E << G; rejects non-interlacing pairs.
std::vector<int> rho_profile(const YoungDiagram& g, const YoungDiagram& e, int n);

// Dimension of the space of Sp_2n highest-weight vectors of weight E inside
// the Sp_2n+2 representation with highest weight G: the product of
// (rho_i + 1) over the profile.  Rejects non-interlacing pairs.
long long hom_dim(const YoungDiagram& g, const YoungDiagram& e, int n);

// All E with at most n rows such that E << G, in descending lexicographic
// order.  G must have at most n+1 rows.
std::vector<YoungDiagram> enumerate_down(const YoungDiagram& g, int n);

// All G with at most n+1 rows and first row at most m such that E << G,
// in descending lexicographic order.
std::vector<YoungDiagram> enumerate_up(const YoungDiagram& e, int n, int m);

// One summand of the restriction of an Sp_2n+2 representation to
// Sp_2n x Sp_2: the Sp_2n highest weight E and the full Sp_2 decomposition
// paired with it.
struct BranchTerm {
  YoungDiagram e;
  Sl2Decomposition sl2;
};

// Restriction of the Sp_2n+2 representation with highest weight G to
// Sp_2n x Sp_2: one term per E << G, whose Sp_2 part is the tensor product
// of the weight strings tau^(rho_1) (x) ... (x) tau^(rho_{n+1}).
std::vector<BranchTerm> branch(const YoungDiagram& g, int n);

}  // namespace sympieri
