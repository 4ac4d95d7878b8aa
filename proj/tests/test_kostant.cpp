#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <stdexcept>
#include <vector>

#include "sympieri/branching.hpp"
#include "sympieri/kostant.hpp"
#include "sympieri/sl2.hpp"
#include "sympieri/young_diagram.hpp"

using namespace sympieri;

namespace {

// Direct enumeration over generator coefficients: v_i = c_i + d_i with
// c_i, d_i >= 0, and the last coordinate must equal sum(d_i - c_i).
long long kostant_brute(const std::vector<int>& v) {
  int n = static_cast<int>(v.size()) - 1;
  long long count = 0;
  std::function<void(int, int)> rec = [&](int i, int diff) {
    if (i == n) {
      if (diff == v[n]) ++count;
      return;
    }
    if (v[i] < 0) return;
    for (int d = 0; d <= v[i]; ++d) rec(i + 1, diff + d - (v[i] - d));
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST_SUITE("kostant") {

TEST_CASE("pinned values") {
  CHECK(kostant_partition({1, 0, 0, 1, 0, 0}) == 2);
  CHECK(kostant_partition({1, 0, 0, 1, 0, 4}) == 0);
  CHECK(kostant_partition({2, 1, 3}) == 1);
  CHECK(kostant_partition({2, 2, 0}) == 3);
  CHECK(kostant_partition({3, 3, 3, 1}) == 12);
  CHECK(kostant_partition({0, 0}) == 1);    // only the empty sum
  CHECK(kostant_partition({0, 1}) == 0);    // nothing reaches the last coordinate alone
  CHECK(kostant_partition({1, -1}) == 1);   // u_1 - u_2
  CHECK(kostant_partition({1, 1}) == 1);    // u_1 + u_2
  CHECK(kostant_partition({-1, 0, 0}) == 0);
  CHECK(kostant_partition({1, 0, 0}) == 0);  // parity obstruction
}

TEST_CASE("rejects vectors shorter than two coordinates") {
  CHECK_THROWS_AS(kostant_partition({}), std::invalid_argument);
  CHECK_THROWS_AS(kostant_partition({3}), std::invalid_argument);
}

TEST_CASE("matches direct enumeration on a dense grid") {
  for (int a = -1; a <= 3; ++a)
    for (int b = -1; b <= 3; ++b)
      for (int last = -7; last <= 7; ++last) {
        std::vector<int> v = {a, b, last};
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(last);
        CHECK(kostant_partition(v) == kostant_brute(v));
      }
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int last = -8; last <= 8; ++last) {
          std::vector<int> v = {a, b, c, last};
          CHECK(kostant_partition(v) == kostant_brute(v));
        }
}

TEST_CASE("symmetric under negating the last coordinate") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int last = 0; last <= 7; ++last) {
        std::vector<int> v = {a, b, last};
        std::vector<int> w = {a, b, -last};
        CHECK(kostant_partition(v) == kostant_partition(w));
      }
}

TEST_CASE("lepowsky_mult pinned small cases") {
  CHECK(lepowsky_mult(YoungDiagram{1}, YoungDiagram{}, 1, 1) == 1);
  CHECK(lepowsky_mult(YoungDiagram{1}, YoungDiagram{}, 0, 1) == 0);
  CHECK(lepowsky_mult(YoungDiagram{1}, YoungDiagram{}, 3, 1) == 0);
  // G=(1,1), E=(1): profile (0,1), a single weight-1 string.
  CHECK(lepowsky_mult(YoungDiagram{1, 1}, YoungDiagram{1}, 1, 1) == 1);
  CHECK(lepowsky_mult(YoungDiagram{1, 1}, YoungDiagram{1}, 0, 1) == 0);
  // G=(2,1), E=(1): profile (1,1), the string product tau^1 (x) tau^1.
  CHECK(lepowsky_mult(YoungDiagram{2, 1}, YoungDiagram{1}, 0, 1) == 1);
  CHECK(lepowsky_mult(YoungDiagram{2, 1}, YoungDiagram{1}, 2, 1) == 1);
  CHECK(lepowsky_mult(YoungDiagram{2, 1}, YoungDiagram{1}, 1, 1) == 0);
  CHECK(lepowsky_mult(YoungDiagram{2, 1}, YoungDiagram{1}, 4, 1) == 0);
  CHECK_THROWS_AS(lepowsky_mult(YoungDiagram{1}, YoungDiagram{}, -1, 1), std::invalid_argument);
}

TEST_CASE("rank zero closes the recursion: multiplicity is a weight match") {
  for (int k = 0; k <= 5; ++k)
    for (int ell = 0; ell <= 6; ++ell)
      CHECK(lepowsky_mult(YoungDiagram{k}, YoungDiagram{}, ell, 0) == (k == ell ? 1 : 0));
}

TEST_CASE("agrees with the Clebsch-Gordan expansion of the gap profile") {
  // The string multiplicity computed by the partition-function difference must
  // equal the coefficient of ell in the tensor product of weight strings given
  // by the gap profile.  Sweep every interlacing pair in small boxes.
  for (int n = 1; n <= 3; ++n)
    for (const YoungDiagram& g : diagrams_in_box(n + 1, 4))
      for (const YoungDiagram& e : enumerate_down(g, n)) {
        auto rho = rho_profile(g, e, n);
        auto dec = cg_multi(rho);
        int top = 0;
        for (int r : rho) top += r;
        for (int ell = 0; ell <= top + 2; ++ell) {
          CAPTURE(g.str());
          CAPTURE(e.str());
          CAPTURE(ell);
          CHECK(lepowsky_mult(g, e, ell, n) == cg_multiplicity(ell, rho));
          auto it = dec.find(ell);
          long long expect = it == dec.end() ? 0 : it->second;
          CHECK(lepowsky_mult(g, e, ell, n) == expect);
        }
      }
}

}  // TEST_SUITE
