#pragma once

#include "sympieri/decomposition.hpp"
#include "sympieri/young_diagram.hpp"

namespace sympieri {

// Tensor product tau^D (x) tau^E of Sp_2m representations in the stable
// range depth(D) + depth(E) <= m, where the multiplicity of tau^F is the
// triple Littlewood-Richardson sum
//   sum over G1,G2,G3 of c^F_{G1,G2} c^D_{G1,G3} c^E_{G2,G3}.
// Rejects out-of-range input.
Decomposition stable_tensor(const YoungDiagram& d, const YoungDiagram& e, int m);

// Tensor product tau^D (x) omega_r for Sp_2m in the semistable range
// r + depth(D) <= m + 1: the multiplicity of tau^F counts the diagrams E
// contained in both D and F with D/E and F/E vertical strips and
// |D/E| + |F/E| = r.  Rejects out-of-range input.
Decomposition pieri_vertical_strip(const YoungDiagram& d, int r, int m);

}  // namespace sympieri
