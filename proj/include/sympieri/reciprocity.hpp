#pragma once

#include <string>
#include <vector>

#include "sympieri/young_diagram.hpp"

namespace sympieri {

// Result of checking that the exterior algebra of C^2n (x) C^m decomposes
// as the multiplicity-free sum of tau^D (x) tau^{iota(D)} over all D in the
// n x m box.
struct DualityReport {
  int n = 0;
  int m = 0;
  long long mass = 0;  // total weight mass of the exterior character, 2^{2nm} when correct
  std::vector<std::string> discrepancies;  // weight records where the two sides differ
  bool pass = false;
};

DualityReport verify_duality(int n, int m);

// Both sides of the reciprocity identity
//   dim Hom(tau^{D_1} (x) ... (x) tau^{D_k}, tau^E|_{Sp_2p1 x ... x Sp_2pk})
//     = multiplicity of tau^{iota(E)} in tau^{iota(D_1)} (x) ... (x) tau^{iota(D_k)}
// where the left side restricts from Sp_2n (n = sum of parts) and the right
// side lives in Sp_2m.
struct MainTheoremResult {
  long long lhs = 0;
  long long rhs = 0;
  bool equal = false;
};

MainTheoremResult verify_main_theorem(const std::vector<int>& parts, int m,
                                      const std::vector<YoungDiagram>& d_list,
                                      const YoungDiagram& e);

// Sweep of the cross-module identities (branching vs Clebsch-Gordan vs
// restriction oracle; the general Pieri rule vs the vertical-strip rules vs
// the tensor oracle; n-invariance) over a grid bounded by depth_cap and
// size_cap.  Each identity reports the number of instances checked and the
// first counterexample, if any.
struct CrossIdentity {
  std::string name;
  long long checked = 0;
  bool pass = false;
  std::string detail;  // first counterexample, or a note when skipped
};

struct CrossReport {
  int m = 0;
  std::vector<CrossIdentity> identities;
  bool pass = false;
};

CrossReport verify_cross(int m, int depth_cap, int size_cap);

}  // namespace sympieri
