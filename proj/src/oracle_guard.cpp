#include "sympieri/oracle_guard.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sympieri {

int oracle_cap() {
  static const int cap = [] {
    const char* env = std::getenv("SYMPIERI_ORACLE_CAP");
    if (!env || !*env) return 24;
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1)
      throw std::invalid_argument("SYMPIERI_ORACLE_CAP must be a positive integer, got '" +
                                  std::string(env) + "'");
    return static_cast<int>(value);
  }();
  return cap;
}

int oracle_rank_cap() { return oracle_cap() / 8; }

void require_exterior_within_cap(int n, int m) {
  if (2 * n * m > oracle_cap())
    throw std::invalid_argument(
        "exterior character: 2*n*m = " + std::to_string(2 * n * m) + " exceeds the oracle cap " +
        std::to_string(oracle_cap()) + " (raise SYMPIERI_ORACLE_CAP to override)");
}

void require_oracle_rank(int rank, const char* what) {
  if (rank > oracle_rank_cap())
    throw std::invalid_argument(std::string(what) + ": rank " + std::to_string(rank) +
                                " exceeds the oracle guard " + std::to_string(oracle_rank_cap()) +
                                " (raise SYMPIERI_ORACLE_CAP to override)");
}

}  // namespace sympieri
