#pragma once

#include <vector>

#include "sympieri/young_diagram.hpp"

namespace sympieri::testing {

// All diagrams with at most max_size boxes (any shape).
inline std::vector<YoungDiagram> partitions_up_to(int max_size) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max_row) -> void {
    out.emplace_back(cur);
    for (int r = std::min(left, max_row); r >= 1; --r) {
      cur.push_back(r);
      self(self, left - r, r);
      cur.pop_back();
    }
  };
  rec(rec, max_size, max_size);
  return out;
}

inline YoungDiagram column(int r) { return YoungDiagram(std::vector<int>(r, 1)); }

}  // namespace sympieri::testing
