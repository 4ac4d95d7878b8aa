#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sympieri/decomposition.hpp"
#include "sympieri/young_diagram.hpp"

namespace sympieri {

// Sparse weight-multiplicity map of an Sp_2n torus character; keys are
// integer vectors of fixed length n.
using Weight = std::vector<int>;
using Character = std::map<Weight, long long>;

// Sparse character of an Sp_2n x Sp_2m module, keyed by weight pairs.
using JointCharacter = std::map<std::pair<Weight, Weight>, long long>;

// Full weight multiplicity map of the irreducible Sp_2n representation with
// highest weight D, built recursively: the rank-(n+1) character is the sum
// over E << G of the rank-n character of E times the weight multiset of
// tau^(rho_1) (x) ... (x) tau^(rho_{n+1}) in the last coordinate.
// Memoized; total mass equals the dimension.
Character sp_character(const YoungDiagram& d, int n);

// Total mass of sp_character(D, n).
long long sp_dim(const YoungDiagram& d, int n);

// Write a character as a nonnegative combination of irreducibles by
// highest-weight peeling: repeatedly subtract the full multiple of the
// irreducible whose highest weight is the lexicographically greatest
// remaining weight.  Throws "not a character" when a leading weight is
// non-dominant or carries a negative coefficient.
Decomposition decompose(const Character& c, int n);

// Irreducible decomposition of tau^D (x) tau^E for Sp_2m: pointwise
// convolution of the two characters, then peeling.  Guarded by the oracle
// rank cap.
Decomposition tensor_decompose(const YoungDiagram& d, const YoungDiagram& e, int m);

// Irreducible decomposition of tau^E restricted from Sp_2n to
// Sp_2p1 x ... x Sp_2pk where parts = (p1..pk) sums to n: weight vectors
// are split into coordinate blocks and peeled jointly.  Returns every
// diagram tuple with its multiplicity.  Guarded by the oracle rank cap.
std::map<std::vector<YoungDiagram>, long long> restrict_decompose(const YoungDiagram& e, int n,
                                                                  const std::vector<int>& parts);

// Character of the exterior algebra of C^2n (x) C^m as an Sp_2n x Sp_2m
// module: product over the 2nm lines (i, +/-, j) of (1 + x^{+/-eps_i}
// y^{eps'_j}), with every m-side coordinate shifted by -n at the end.  The
// shift is the unique one that is sign-symmetric on the m-side; the (1,1)
// case reproduces tau^(0)(x)tau^(1) + tau^(1)(x)tau^(0).  Guarded by the
// exterior size cap.
JointCharacter exterior_joint_character(int n, int m);

}  // namespace sympieri
