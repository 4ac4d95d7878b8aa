#pragma once

#include <map>
#include <vector>

namespace sympieri {

// Multiset of irreducible Sp_2 representations: highest weight -> multiplicity.
// tau^(ell) has dimension ell + 1.
using Sl2Decomposition = std::map<int, long long>;

// Clebsch-Gordan: tau^(a) (x) tau^(b) = sum of tau^(ell),
// ell = a+b, a+b-2, ..., |a-b|, each once.
Sl2Decomposition cg_pair(int a, int b);

// Left fold of cg_pair over the factors; the empty product is tau^(0).
Sl2Decomposition cg_multi(const std::vector<int>& factors);

// Multiplicity of tau^(ell) in the tensor product of the factors.
long long cg_multiplicity(int ell, const std::vector<int>& factors);

long long sl2_total_dimension(const Sl2Decomposition& dec);

}  // namespace sympieri
