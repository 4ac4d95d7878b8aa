#pragma once

namespace sympieri {

// Desk-scale budget for the brute-force character oracle.  The cap K
// defaults to 24 and can be overridden through the environment variable
// SYMPIERI_ORACLE_CAP.  Exterior-algebra constructions require 2nm <= K;
// oracle decompositions require rank <= K/8.
int oracle_cap();
int oracle_rank_cap();

// Throw std::invalid_argument when 2nm exceeds the cap.
void require_exterior_within_cap(int n, int m);

// Throw std::invalid_argument when the rank exceeds the per-rank guard;
// `what` names the rejected operation in the message.
void require_oracle_rank(int rank, const char* what);

}  // namespace sympieri
