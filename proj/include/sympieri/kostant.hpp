#pragma once

#include <vector>

#include "sympieri/young_diagram.hpp"

namespace sympieri {

// Number of ways to write v in Z^{n+1} (n+1 >= 2) as a nonnegative integer
// combination of the 2n vectors u_i + u_{n+1} and u_i - u_{n+1} for
// i = 1..n, where u_i is the standard basis.  Zero when any of the first n
// coordinates is negative or the parity of the last coordinate does not
// match the sum of the others.
long long kostant_partition(const std::vector<int>& v);

// Multiplicity of tau^E (x) tau^(ell) in the restriction of tau^G from
// Sp_2n+2 to Sp_2n x Sp_2, via the partition-function difference
//   P(rho - ell*u_{n+1}) - P(rho + (ell+2)*u_{n+1})
// on the interlacing profile rho of (G, E).  Rejects non-interlacing pairs.
long long lepowsky_mult(const YoungDiagram& g, const YoungDiagram& e, int ell, int n);

}  // namespace sympieri
