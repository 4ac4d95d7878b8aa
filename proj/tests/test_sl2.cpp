#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "sympieri/sl2.hpp"

using namespace sympieri;

namespace {

long long product_dimension(const std::vector<int>& parts) {
  long long p = 1;
  for (int a : parts) p *= a + 1;
  return p;
}

}  // namespace

TEST_SUITE("sl2") {

TEST_CASE("cg_pair gives the weight ladder |a-b| .. a+b step 2") {
  CHECK(cg_pair(2, 3) == Sl2Decomposition{{1, 1}, {3, 1}, {5, 1}});
  CHECK(cg_pair(0, 4) == Sl2Decomposition{{4, 1}});
  CHECK(cg_pair(3, 3) == Sl2Decomposition{{0, 1}, {2, 1}, {4, 1}, {6, 1}});
  CHECK(cg_pair(1, 0) == Sl2Decomposition{{1, 1}});
  CHECK_THROWS_AS(cg_pair(-1, 2), std::invalid_argument);
}

TEST_CASE("cg_pair is symmetric") {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) CHECK(cg_pair(a, b) == cg_pair(b, a));
}

TEST_CASE("cg_multi on small lists") {
  CHECK(cg_multi({}) == Sl2Decomposition{{0, 1}});
  CHECK(cg_multi({5}) == Sl2Decomposition{{5, 1}});
  CHECK(cg_multi({1, 1, 1}) == Sl2Decomposition{{1, 2}, {3, 1}});
  CHECK(cg_multi({2, 2}) == Sl2Decomposition{{0, 1}, {2, 1}, {4, 1}});
  CHECK(cg_multi({1, 2, 3}) == Sl2Decomposition{{0, 1}, {2, 2}, {4, 2}, {6, 1}});
  // Four spin-1/2 factors: multiplicities are ballot counts 2, 3, 1.
  CHECK(cg_multi({1, 1, 1, 1}) == Sl2Decomposition{{0, 2}, {2, 3}, {4, 1}});
}

TEST_CASE("cg_multi is order independent") {
  CHECK(cg_multi({3, 1, 2}) == cg_multi({1, 2, 3}));
  CHECK(cg_multi({2, 0, 2, 1}) == cg_multi({1, 2, 2, 0}));
}

TEST_CASE("dimension bookkeeping: sum of (ell+1) * mult equals product of (a_i+1)") {
  std::vector<std::vector<int>> cases = {
      {}, {4}, {1, 1}, {2, 3}, {1, 2, 3}, {2, 2, 2}, {1, 1, 1, 1, 1}, {3, 4, 5}, {0, 0, 7}};
  for (const auto& parts : cases) {
    auto dec = cg_multi(parts);
    CHECK(sl2_total_dimension(dec) == product_dimension(parts));
    // Weights in a tensor product of integer strings have uniform parity.
    int parity = 0;
    for (int a : parts) parity = (parity + a) % 2;
    for (const auto& [ell, mult] : dec) {
      CHECK(ell % 2 == parity);
      CHECK(mult > 0);
    }
  }
}

TEST_CASE("cg_multiplicity reads a single component") {
  CHECK(cg_multiplicity(1, {1, 1, 1}) == 2);
  CHECK(cg_multiplicity(3, {1, 1, 1}) == 1);
  CHECK(cg_multiplicity(5, {1, 1, 1}) == 0);
  CHECK(cg_multiplicity(0, {1, 1, 1}) == 0);
  CHECK(cg_multiplicity(2, {2, 2}) == 1);
}

}  // TEST_SUITE
