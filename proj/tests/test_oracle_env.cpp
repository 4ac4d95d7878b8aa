#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include "sympieri/character.hpp"
#include "sympieri/oracle_guard.hpp"
#include "sympieri/young_diagram.hpp"

using namespace sympieri;

// The cap is read from the environment once, on first use, so the whole
// override scenario must run inside one binary in a fixed order.
TEST_SUITE("oracle_env") {

TEST_CASE("SYMPIERI_ORACLE_CAP overrides the oracle budget") {
  // Rejected values are not cached; the read is retried until one succeeds.
  setenv("SYMPIERI_ORACLE_CAP", "abc", 1);
  CHECK_THROWS_AS(oracle_cap(), std::invalid_argument);
  setenv("SYMPIERI_ORACLE_CAP", "-3", 1);
  CHECK_THROWS_AS(oracle_cap(), std::invalid_argument);
  setenv("SYMPIERI_ORACLE_CAP", "0", 1);
  CHECK_THROWS_AS(oracle_cap(), std::invalid_argument);

  setenv("SYMPIERI_ORACLE_CAP", "40", 1);
  CHECK(oracle_cap() == 40);
  CHECK(oracle_rank_cap() == 5);

  // The first successful read sticks for the rest of the process.
  setenv("SYMPIERI_ORACLE_CAP", "16", 1);
  CHECK(oracle_cap() == 40);

  CHECK_NOTHROW(require_oracle_rank(5, "test"));
  CHECK_THROWS_AS(require_oracle_rank(6, "test"), std::invalid_argument);
  CHECK_NOTHROW(require_exterior_within_cap(4, 5));
  CHECK_THROWS_AS(require_exterior_within_cap(4, 6), std::invalid_argument);

  // Ranks beyond the default guard of 3 are now admitted.
  auto dec = tensor_decompose(YoungDiagram{1}, YoungDiagram{1}, 4);
  CHECK(dec.multiplicity(YoungDiagram{2}) == 1);
  CHECK(dec.multiplicity(YoungDiagram{1, 1}) == 1);
  CHECK(dec.multiplicity(YoungDiagram{}) == 1);

  using Key = std::vector<YoungDiagram>;
  auto res = restrict_decompose(YoungDiagram{1}, 4, {2, 2});
  CHECK(res == std::map<Key, long long>{{Key{YoungDiagram{1}, YoungDiagram{}}, 1},
                                        {Key{YoungDiagram{}, YoungDiagram{1}}, 1}});
}

}  // TEST_SUITE
