#include "sympieri/young_diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sympieri {

namespace {

void validate_rows(const std::vector<int>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0) throw std::invalid_argument("Young diagram rows must be nonnegative");
    if (i > 0 && rows[i] > rows[i - 1])
      throw std::invalid_argument("Young diagram rows must be weakly decreasing");
  }
}

std::vector<int> canonicalize(std::vector<int> rows) {
  validate_rows(rows);
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows;
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(canonicalize(std::move(rows))) {}

YoungDiagram::YoungDiagram(std::initializer_list<int> rows)
    : YoungDiagram(std::vector<int>(rows)) {}

YoungDiagram YoungDiagram::parse(const std::string& text) {
  if (text.empty() || text == "0") return {};
  std::vector<int> rows;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad diagram row '" + part + "' in '" + text + "'");
    }
    if (used != part.size())
      throw std::invalid_argument("bad diagram row '" + part + "' in '" + text + "'");
    rows.push_back(value);
  }
  return YoungDiagram(std::move(rows));
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

std::string YoungDiagram::str() const {
  if (rows_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rows_[i]);
  }
  return out;
}

YoungDiagram conjugate(const YoungDiagram& d) {
  std::vector<int> cols(d.first_row(), 0);
  for (int row : d.rows())
    for (int c = 0; c < row; ++c) ++cols[c];
  return YoungDiagram(std::move(cols));
}

bool fits(const YoungDiagram& d, RectBound bound) {
  return d.depth() <= bound.n && d.first_row() <= bound.m;
}

YoungDiagram r_involution(const YoungDiagram& e, RectBound bound) {
  if (!fits(e, {bound.m, bound.n}))
    throw std::invalid_argument("r_involution: diagram " + e.str() + " outside R_{" +
                                std::to_string(bound.m) + "," + std::to_string(bound.n) + "}");
  std::vector<int> out(bound.m);
  for (int i = 0; i < bound.m; ++i) out[i] = bound.n - e.row(bound.m - 1 - i);
  return YoungDiagram(std::move(out));
}

YoungDiagram iota(const YoungDiagram& d, RectBound bound) {
  if (!fits(d, bound))
    throw std::invalid_argument("iota: diagram " + d.str() + " outside R_{" +
                                std::to_string(bound.n) + "," + std::to_string(bound.m) + "}");
  // closed form: m-d1 copies of n, then d_i - d_{i+1} copies of n-i
  std::vector<int> out;
  out.reserve(bound.m);
  out.insert(out.end(), bound.m - d.first_row(), bound.n);
  for (int i = 1; i <= bound.n; ++i)
    out.insert(out.end(), d.row(i - 1) - d.row(i), bound.n - i);
  return YoungDiagram(std::move(out));
}

YoungDiagram j_inverse(const YoungDiagram& e, RectBound bound) {
  if (!fits(e, {bound.m, bound.n}))
    throw std::invalid_argument("j_inverse: diagram " + e.str() + " outside R_{" +
                                std::to_string(bound.m) + "," + std::to_string(bound.n) + "}");
  std::vector<int> out;
  out.reserve(bound.n);
  out.insert(out.end(), bound.n - e.first_row(), bound.m);
  for (int i = 1; i <= bound.m; ++i)
    out.insert(out.end(), e.row(i - 1) - e.row(i), bound.m - i);
  return YoungDiagram(std::move(out));
}

bool contains(const YoungDiagram& d, const YoungDiagram& e) {
  for (int i = 0; i < e.depth(); ++i)
    if (e.row(i) > d.row(i)) return false;
  return true;
}

SkewShape::SkewShape(YoungDiagram outer_, YoungDiagram inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!contains(outer, inner))
    throw std::invalid_argument("skew shape " + outer.str() + "/" + inner.str() +
                                ": inner diagram not contained in outer");
}

SkewShape skew(const YoungDiagram& d, const YoungDiagram& e) { return SkewShape(d, e); }

bool is_vertical_strip(const SkewShape& s) {
  for (int i = 0; i < s.outer.depth(); ++i)
    if (s.outer.row(i) - s.inner.row(i) > 1) return false;
  return true;
}

namespace {

void box_rec(int rows_left, int max_row, std::vector<int>& cur,
             std::vector<YoungDiagram>& out) {
  out.emplace_back(cur);
  if (rows_left == 0) return;
  for (int r = max_row; r >= 1; --r) {
    cur.push_back(r);
    box_rec(rows_left - 1, r, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> diagrams_in_box(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("diagrams_in_box: negative bound");
  // Recursion emits prefixes before extensions, which is ascending; sort
  // descending for the canonical output order.
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  box_rec(rows, cols, cur, out);
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

void sub_rec(const YoungDiagram& d, int i, int prev, std::vector<int>& cur,
             std::vector<YoungDiagram>& out) {
  if (i == d.depth()) {
    out.emplace_back(cur);
    return;
  }
  for (int r = std::min(prev, d.row(i)); r >= 0; --r) {
    cur.push_back(r);
    sub_rec(d, i + 1, r, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> sub_diagrams(const YoungDiagram& d) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  sub_rec(d, 0, d.first_row(), cur, out);
  std::sort(out.rbegin(), out.rend());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sympieri
