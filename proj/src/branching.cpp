#include "sympieri/branching.hpp"

#include <stdexcept>

namespace sympieri {

namespace {

void check_rank_pair(const YoungDiagram& e, const YoungDiagram& g, int n) {
  if (n < 0) throw std::invalid_argument("branching: rank must be nonnegative");
  if (e.depth() > n)
    throw std::invalid_argument("branching: lower diagram exceeds " + std::to_string(n) + " rows");
  if (g.depth() > n + 1)
    throw std::invalid_argument("branching: upper diagram exceeds " + std::to_string(n + 1) +
                                " rows");
}

void check_interlacing(const YoungDiagram& e, const YoungDiagram& g, int n) {
  if (!doubly_interlaces(e, g, n))
    throw std::invalid_argument("branching: '" + e.str() + "' does not doubly interlace '" +
                                g.str() + "'");
}

}  // namespace

bool doubly_interlaces(const YoungDiagram& e, const YoungDiagram& g, int n) {
  check_rank_pair(e, g, n);
  for (int i = 0; i < n; ++i) {
    if (e.row(i) > g.row(i)) return false;
    if (g.row(i + 2) > e.row(i)) return false;
  }
  return true;
}

std::vector<int> rho_profile(const YoungDiagram& g, const YoungDiagram& e, int n) {
  check_interlacing(e, g, n);
  // Merge g_1..g_{n+1} with e_1..e_n,0 (both weakly decreasing; ties broken
  // g-first, which does not affect the pairing differences).
  std::vector<int> merged;
  merged.reserve(2 * n + 2);
  int ig = 0, ie = 0;
  while (ig < n + 1 || ie < n + 1) {
    int gv = ig < n + 1 ? g.row(ig) : -1;
    int ev = ie < n + 1 ? e.row(ie) : -1;
    if (gv >= ev) {
      merged.push_back(gv);
      ++ig;
    } else {
      merged.push_back(ev);
      ++ie;
    }
  }
  std::vector<int> rho(n + 1);
  for (int i = 0; i <= n; ++i) rho[i] = merged[2 * i] - merged[2 * i + 1];
  return rho;
}

long long hom_dim(const YoungDiagram& g, const YoungDiagram& e, int n) {
  long long dim = 1;
  for (int r : rho_profile(g, e, n)) dim *= r + 1;
  return dim;
}

namespace {

// Rows of G satisfy e_i <= g_i <= min(g_{i-1}, e_{i-2}) with e_0 = e_{-1} = m;
// recursing in descending row order yields descending lexicographic output.
void up_rec(const YoungDiagram& e, int n, int m, int i, std::vector<int>& cur,
            std::vector<YoungDiagram>& out) {
  if (i == n + 1) {
    out.emplace_back(cur);
    return;
  }
  int lo = e.row(i);
  int hi = i == 0 ? m : std::min(cur[i - 1], i >= 2 ? e.row(i - 2) : m);
  for (int v = hi; v >= lo; --v) {
    cur[i] = v;
    up_rec(e, n, m, i + 1, cur, out);
  }
}

// Rows of E satisfy g_{i+2} <= e_i <= min(g_i, e_{i-1}).
void down_rec(const YoungDiagram& g, int n, int i, std::vector<int>& cur,
              std::vector<YoungDiagram>& out) {
  if (i == n) {
    out.emplace_back(cur);
    return;
  }
  int lo = g.row(i + 2);
  int hi = i == 0 ? g.row(0) : std::min(g.row(i), cur[i - 1]);
  for (int v = hi; v >= lo; --v) {
    cur[i] = v;
    down_rec(g, n, i + 1, cur, out);
  }
}

}  // namespace

std::vector<YoungDiagram> enumerate_down(const YoungDiagram& g, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_down: rank must be nonnegative");
  if (g.depth() > n + 1)
    throw std::invalid_argument("enumerate_down: diagram exceeds " + std::to_string(n + 1) +
                                " rows");
  std::vector<YoungDiagram> out;
  std::vector<int> cur(n, 0);
  down_rec(g, n, 0, cur, out);
  return out;
}

std::vector<YoungDiagram> enumerate_up(const YoungDiagram& e, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("enumerate_up: bounds must be nonnegative");
  if (!fits(e, {n, m}))
    throw std::invalid_argument("enumerate_up: diagram must fit in " + std::to_string(n) + " x " +
                                std::to_string(m));
  std::vector<YoungDiagram> out;
  std::vector<int> cur(n + 1, 0);
  up_rec(e, n, m, 0, cur, out);
  return out;
}

std::vector<BranchTerm> branch(const YoungDiagram& g, int n) {
  std::vector<BranchTerm> out;
  for (const YoungDiagram& e : enumerate_down(g, n))
    out.push_back({e, cg_multi(rho_profile(g, e, n))});
  return out;
}

}  // namespace sympieri
