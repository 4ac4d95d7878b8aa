#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace sympieri {

// Young diagram in canonical form: weakly decreasing positive row lengths,
// no trailing zeros. The empty diagram is the empty sequence.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);
  YoungDiagram(std::initializer_list<int> rows);

  // Text form "d1,d2,..."; "" and "0" both denote the empty diagram.
  static YoungDiagram parse(const std::string& text);

  const std::vector<int>& rows() const { return rows_; }
  // Row length with zero padding past the depth (0-based index).
  int row(std::size_t i) const { return i < rows_.size() ? rows_[i] : 0; }
  int depth() const { return static_cast<int>(rows_.size()); }
  int size() const;
  int first_row() const { return rows_.empty() ? 0 : rows_[0]; }
  bool empty() const { return rows_.empty(); }

  std::string str() const;

  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

// Box bound for the set R_{n,m}: at most n rows and m columns. For the
// involutions r_{n,m}, iota_{n,m}, j_{n,m} the bound carries the (n,m)
// subscript pair of the map, not the box the argument lives in.
struct RectBound {
  int n;  // max rows
  int m;  // max columns
};

struct SkewShape {
  SkewShape(YoungDiagram outer, YoungDiagram inner);
  YoungDiagram outer;
  YoungDiagram inner;
  int size() const { return outer.size() - inner.size(); }
};

YoungDiagram conjugate(const YoungDiagram& d);

// true iff depth(d) <= bound.n and d1 <= bound.m
bool fits(const YoungDiagram& d, RectBound bound);

// r_{n,m}: complement in the m x n box rotated by 180 degrees.
// Involution on R_{m,n}; the argument is zero-padded to m rows.
YoungDiagram r_involution(const YoungDiagram& e, RectBound bound);

// iota_{n,m} = r_{n,m} composed with conjugation: R_{n,m} -> R_{m,n}.
YoungDiagram iota(const YoungDiagram& d, RectBound bound);

// j_{n,m} = iota_{n,m}^{-1} = (r_{n,m}(.))^t: R_{m,n} -> R_{n,m}.
YoungDiagram j_inverse(const YoungDiagram& e, RectBound bound);

// true iff e_i <= d_i for all rows
bool contains(const YoungDiagram& d, const YoungDiagram& e);

SkewShape skew(const YoungDiagram& d, const YoungDiagram& e);

// at most one box per row
bool is_vertical_strip(const SkewShape& s);

// All diagrams of R_{rows,cols}, lexicographically descending.
std::vector<YoungDiagram> diagrams_in_box(int rows, int cols);

// All sub-diagrams of d (row-wise containment), lexicographically descending.
std::vector<YoungDiagram> sub_diagrams(const YoungDiagram& d);

}  // namespace sympieri
