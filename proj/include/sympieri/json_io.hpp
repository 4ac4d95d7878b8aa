#pragma once

#include <nlohmann/json.hpp>
#include <vector>

#include "sympieri/branching.hpp"
#include "sympieri/decomposition.hpp"

namespace sympieri {

// Serialized form:
//   {"group":"Sp","rank":m,
//    "summands":[{"diagram":[...],"multiplicity":k}, ...],
//    "total_multiplicity":T, "total_dimension":D}
// Summands are sorted descending; total_dimension is emitted only when
// with_dimension is set (the CLI sets it when the rank is within the oracle
// guard).
nlohmann::ordered_json decomposition_to_json(const Decomposition& dec, bool with_dimension);
Decomposition decomposition_from_json(const nlohmann::json& j);

// Branch tables use the same envelope with rank n and one extra per-summand
// field "sl2": [{"weight":l,"multiplicity":k}, ...]; the summand
// multiplicity is the total over the Sp_2 weights.
nlohmann::ordered_json branch_to_json(const std::vector<BranchTerm>& terms, int n,
                                      bool with_dimension);
std::vector<BranchTerm> branch_from_json(const nlohmann::json& j);

}  // namespace sympieri
