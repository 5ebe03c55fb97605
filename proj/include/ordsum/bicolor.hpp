// bicolor.hpp
// -----------
// Product bi-colorings of finite orders m x n: a 2-coloring p with
//   (i)  b < b'  implies  p(a,b) <= p(a,b')
//   (ii) a' < a  implies  p(a,b) <= p(a',b)
// encodes which cross pairs satisfy a < b in a sum of m and n. Valid
// colorings correspond exactly to the interleavings of m and n.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordsum/order_term.hpp"

namespace ordsum {

struct BiColoring {
  std::size_t m = 0, n = 0;
  std::vector<std::uint8_t> p;  // row-major, p[a * n + b] in {0, 1}

  std::uint8_t at(std::size_t a, std::size_t b) const { return p[a * n + b]; }
};

inline bool validate_bicoloring(const BiColoring& c) {
  if (c.p.size() != c.m * c.n) return false;
  for (std::uint8_t v : c.p)
    if (v > 1) return false;
  for (std::size_t a = 0; a < c.m; ++a)
    for (std::size_t b = 0; b + 1 < c.n; ++b)
      if (c.at(a, b) > c.at(a, b + 1)) return false;
  for (std::size_t a = 0; a + 1 < c.m; ++a)
    for (std::size_t b = 0; b < c.n; ++b)
      if (c.at(a + 1, b) > c.at(a, b)) return false;
  return true;
}

struct RealizedSum {
  OrderTerm type;           // the finite order type m + n
  std::string realization;  // interleaving word over {A, B}, bottom to top
};

// The order on the disjoint union with a < b iff p(a, b) = 1; the coloring
// conditions make the relation a strict total order, which is verified
// explicitly before linearizing.
inline RealizedSum sum_from_bicoloring(const BiColoring& c) {
  if (!validate_bicoloring(c))
    throw std::domain_error("sum_from_bicoloring: invalid coloring");
  const std::size_t total = c.m + c.n;
  // element i < m is a_i, element m + j is b_j
  auto less = [&](std::size_t x, std::size_t y) {
    bool xa = x < c.m, ya = y < c.m;
    if (xa && ya) return x < y;
    if (!xa && !ya) return x < y;
    if (xa) return c.at(x, y - c.m) == 1;
    return c.at(y, x - c.m) == 0;
  };
  for (std::size_t x = 0; x < total; ++x)
    for (std::size_t y = 0; y < total; ++y) {
      if (x == y) continue;
      if (less(x, y) == less(y, x))
        throw std::logic_error("bi-coloring relation not total");
      for (std::size_t z = 0; z < total; ++z)
        if (z != x && z != y && less(x, y) && less(y, z) && !less(x, z))
          throw std::logic_error("bi-coloring relation not transitive");
    }
  std::vector<std::size_t> order(total);
  for (std::size_t i = 0; i < total; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), less);
  RealizedSum out;
  out.type = term_from_nat(total);
  for (std::size_t i : order) out.realization += (i < c.m ? 'A' : 'B');
  return out;
}

// Extracts the coloring of a sum realization given as an interleaving word.
inline BiColoring coloring_of_sum(std::size_t m, std::size_t n,
                                  const std::string& word) {
  if (word.size() != m + n)
    throw std::invalid_argument("realization word has the wrong length");
  std::vector<std::size_t> a_pos, b_pos;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == 'A')
      a_pos.push_back(i);
    else if (word[i] == 'B')
      b_pos.push_back(i);
    else
      throw std::invalid_argument("realization word may contain only A and B");
  }
  if (a_pos.size() != m || b_pos.size() != n)
    throw std::invalid_argument("realization word has the wrong composition");
  BiColoring c{m, n, std::vector<std::uint8_t>(m * n, 0)};
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b)
      c.p[a * n + b] = a_pos[a] < b_pos[b] ? 1 : 0;
  return c;
}

// All valid colorings of m x n, in row-major lexicographic order of the map.
// Valid rows are 0..01..1 with thresholds non-decreasing down the rows, so
// the enumeration walks threshold sequences directly.
inline std::vector<BiColoring> enumerate_bicolorings(std::size_t m,
                                                     std::size_t n) {
  if (m * n > 36)
    throw capacity_error("bi-coloring enumeration limited to m*n <= 36");
  std::vector<BiColoring> out;
  std::vector<std::size_t> thresholds(m, 0);  // zeros per row
  auto emit = [&]() {
    BiColoring c{m, n, std::vector<std::uint8_t>(m * n, 0)};
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = thresholds[a]; b < n; ++b) c.p[a * n + b] = 1;
    out.push_back(std::move(c));
  };
  if (m == 0) {
    out.push_back(BiColoring{m, n, {}});
    return out;
  }
  auto rec = [&](auto&& self, std::size_t row, std::size_t lo) -> void {
    if (row == m) {
      emit();
      return;
    }
    for (std::size_t j = lo; j <= n; ++j) {
      thresholds[row] = j;
      self(self, row + 1, j);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(),
            [](const BiColoring& x, const BiColoring& y) { return x.p < y.p; });
  return out;
}

inline std::string bicoloring_to_string(const BiColoring& c) {
  std::string s;
  for (std::size_t a = 0; a < c.m; ++a) {
    for (std::size_t b = 0; b < c.n; ++b) s += char('0' + c.at(a, b));
    s += '\n';
  }
  return s;
}

}  // namespace ordsum
