#include "sympieri/lr.hpp"

#include <vector>

namespace sympieri {

namespace {

struct Cell {
  int row;
  int col;
};

// Backtracking over the cells of F/D in reverse reading order (rows top to
// bottom, each row right to left), which is exactly the order in which the
// lattice-word condition must hold prefix by prefix.
struct LrCounter {
  const YoungDiagram& f;
  const YoungDiagram& d;
  const YoungDiagram& e;
  std::vector<Cell> cells;
  std::vector<std::vector<int>> fill;   // fill[row][col], 0 = unassigned
  std::vector<int> count;               // boxes labelled v so far, 1-based
  long long total = 0;

  LrCounter(const YoungDiagram& f_, const YoungDiagram& d_, const YoungDiagram& e_)
      : f(f_), d(d_), e(e_), count(e_.depth() + 1, 0) {
    fill.resize(f.depth());
    for (int r = 0; r < f.depth(); ++r) {
      fill[r].assign(f.row(r), 0);
      for (int c = f.row(r) - 1; c >= d.row(r); --c) cells.push_back({r, c});
    }
  }

  void search(std::size_t k) {
    if (k == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[k];
    // Row constraint against the already-placed right neighbour; column
    // constraint against the row above (inside D counts as no constraint).
    int row_cap = c + 1 < f.row(r) ? fill[r][c + 1] : e.depth();
    int col_floor = r > 0 && c >= d.row(r - 1) ? fill[r - 1][c] + 1 : 1;
    for (int v = col_floor; v <= row_cap; ++v) {
      if (count[v] >= e.row(v - 1)) continue;                 // content bound
      if (v > 1 && count[v] >= count[v - 1]) continue;        // lattice word
      ++count[v];
      fill[r][c] = v;
      search(k + 1);
      fill[r][c] = 0;
      --count[v];
    }
  }
};

}  // namespace

long long lr_coeff(const YoungDiagram& f, const YoungDiagram& d, const YoungDiagram& e) {
  if (!contains(f, d)) return 0;
  if (f.size() != d.size() + e.size()) return 0;
  LrCounter counter(f, d, e);
  counter.search(0);
  return counter.total;
}

std::map<YoungDiagram, long long> lr_expand(const YoungDiagram& d, const YoungDiagram& e) {
  // Candidates beyond these bounds have coefficient zero: the product lives
  // in degree |D|+|E|, inside at most depth(D)+depth(E) rows and
  // d_1+e_1 columns, and every constituent contains D.
  std::map<YoungDiagram, long long> out;
  int target = d.size() + e.size();
  for (const YoungDiagram& f : diagrams_in_box(d.depth() + e.depth(), d.first_row() + e.first_row())) {
    if (f.size() != target || !contains(f, d)) continue;
    long long c = lr_coeff(f, d, e);
    if (c > 0) out[f] = c;
  }
  return out;
}

}  // namespace sympieri
