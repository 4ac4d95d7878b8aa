#include "sympieri/kostant.hpp"

#include <numeric>
#include <stdexcept>

#include "sympieri/branching.hpp"

namespace sympieri {

long long kostant_partition(const std::vector<int>& v) {
  if (v.size() < 2) throw std::invalid_argument("kostant_partition: vector must have length >= 2");
  int n = static_cast<int>(v.size()) - 1;
  for (int i = 0; i < n; ++i)
    if (v[i] < 0) return 0;
  // Writing c_i*(u_i+u_last) + d_i*(u_i-u_last) forces c_i + d_i = v_i, so a
  // solution is a choice of c_i in [0, v_i] with sum (S + v_last)/2 where
  // S = v_1 + ... + v_n.
  long long s = std::accumulate(v.begin(), v.end() - 1, 0LL);
  long long t2 = s + v[n];
  if (t2 % 2 != 0) return 0;
  long long t = t2 / 2;
  if (t < 0 || t > s) return 0;
  std::vector<long long> dp(t + 1, 0);
  dp[0] = 1;
  for (int i = 0; i < n; ++i) {
    // dp[k] <- sum of dp[k - a] over a in [0, v_i], via prefix sums.
    std::vector<long long> pre(t + 2, 0);
    for (long long k = 0; k <= t; ++k) pre[k + 1] = pre[k] + dp[k];
    for (long long k = t; k >= 0; --k) {
      long long lo = k - v[i] < 0 ? 0 : k - v[i];
      dp[k] = pre[k + 1] - pre[lo];
    }
  }
  return dp[t];
}

long long lepowsky_mult(const YoungDiagram& g, const YoungDiagram& e, int ell, int n) {
  if (ell < 0) throw std::invalid_argument("lepowsky_mult: weight must be nonnegative");
  std::vector<int> rho = rho_profile(g, e, n);
  // Rank 0: the generator set is empty, so P(v) = [v == 0]; the second
  // term never fires because rho_1 + ell + 2 > 0.
  if (n == 0) return rho[0] == ell ? 1 : 0;
  std::vector<int> minus = rho, plus = rho;
  minus[n] -= ell;
  plus[n] += ell + 2;
  return kostant_partition(minus) - kostant_partition(plus);
}

}  // namespace sympieri
