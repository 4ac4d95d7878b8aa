#pragma once

#include <map>

#include "sympieri/young_diagram.hpp"

namespace sympieri {

// Littlewood-Richardson coefficient c^F_{D,E}: the number of semistandard
// fillings of F/D with content E whose reverse reading word is a lattice
// word.  Zero for incompatible shapes (D not contained in F, or
// |F| != |D| + |E|).
long long lr_coeff(const YoungDiagram& f, const YoungDiagram& d, const YoungDiagram& e);

// Full product expansion: all F with lr_coeff(F, D, E) > 0 and their
// coefficients.
std::map<YoungDiagram, long long> lr_expand(const YoungDiagram& d, const YoungDiagram& e);

}  // namespace sympieri
