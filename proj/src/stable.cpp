#include "sympieri/stable.hpp"

#include <stdexcept>
#include <vector>

#include "sympieri/lr.hpp"

namespace sympieri {

Decomposition stable_tensor(const YoungDiagram& d, const YoungDiagram& e, int m) {
  if (d.depth() + e.depth() > m)
    throw std::invalid_argument("stable_tensor: depth(" + d.str() + ") + depth(" + e.str() +
                                ") exceeds rank " + std::to_string(m));
  Decomposition out{m, {}};
  // The sum is finite: G3 is contained in both factors, and the nonzero
  // coefficients force |G1| = |D| - |G3|, |G2| = |E| - |G3|.
  for (const YoungDiagram& g3 : sub_diagrams(d)) {
    if (!contains(e, g3)) continue;
    std::vector<std::pair<YoungDiagram, long long>> left, right;
    for (const YoungDiagram& g1 : sub_diagrams(d)) {
      if (g1.size() != d.size() - g3.size()) continue;
      if (long long c = lr_coeff(d, g1, g3); c > 0) left.emplace_back(g1, c);
    }
    for (const YoungDiagram& g2 : sub_diagrams(e)) {
      if (g2.size() != e.size() - g3.size()) continue;
      if (long long c = lr_coeff(e, g2, g3); c > 0) right.emplace_back(g2, c);
    }
    for (const auto& [g1, c1] : left)
      for (const auto& [g2, c2] : right)
        for (const auto& [f, c] : lr_expand(g1, g2)) out.add(f, c * c1 * c2);
  }
  return out;
}

namespace {

// All diagrams obtained from e by adding a vertical strip of `boxes` boxes
// within the first `max_rows` rows.
std::vector<YoungDiagram> add_vertical_strips(const YoungDiagram& e, int boxes, int max_rows) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur(max_rows, 0);
  // delta_i in {0,1} per row with the result weakly decreasing.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (left > max_rows - i) return;
    if (i == max_rows) {
      out.emplace_back(cur);
      return;
    }
    for (int delta = 1; delta >= 0; --delta) {
      if (delta > left) continue;
      int v = e.row(i) + delta;
      if (i > 0 && v > cur[i - 1]) continue;
      cur[i] = v;
      self(self, i + 1, left - delta);
    }
  };
  rec(rec, 0, boxes);
  return out;
}

}  // namespace

Decomposition pieri_vertical_strip(const YoungDiagram& d, int r, int m) {
  if (r < 1 || r > m)
    throw std::invalid_argument("pieri_vertical_strip: strip size must be in 1.." +
                                std::to_string(m));
  if (r + d.depth() > m + 1)
    throw std::invalid_argument("pieri_vertical_strip: " + std::to_string(r) + " + depth(" +
                                d.str() + ") exceeds " + std::to_string(m + 1) +
                                " (semistable range)");
  Decomposition out{m, {}};
  // E ranges over diagrams with D/E a vertical strip of at most r boxes.
  std::vector<int> erows(d.depth(), 0);
  auto rec = [&](auto&& self, int i, int removed) -> void {
    if (removed > r) return;
    if (i == d.depth()) {
      YoungDiagram e(erows);
      for (const YoungDiagram& f : add_vertical_strips(e, r - removed, m)) out.add(f, 1);
      return;
    }
    for (int delta = 0; delta <= 1 && delta <= d.row(i); ++delta) {
      int v = d.row(i) - delta;
      if (i > 0 && v > erows[i - 1]) continue;
      erows[i] = v;
      self(self, i + 1, removed + delta);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace sympieri
