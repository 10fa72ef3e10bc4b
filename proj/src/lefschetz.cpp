#include "starsurg/lefschetz.hpp"

#include <algorithm>
#include <utility>

#include "starsurg/errors.hpp"

namespace starsurg {

long euler_char(const Factorization& f) {
  if (!f.is_positive()) throw DomainError("euler characteristic needs a positive factorization");
  return 1 - f.holes() + f.length();
}

std::vector<Integer> invariant_factors(std::vector<std::vector<Integer>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Integer> diag;
  bool exhausted = false;
  for (std::size_t t = 0; t < std::min(rows, cols) && !exhausted; ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        exhausted = true;
        break;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = m[i][t] / m[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = m[t][j] / m[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
            divides = false;
          }
      if (divides) break;
    }
    if (!exhausted) diag.push_back(abs(m[t][t]));
  }
  return diag;
}

FillingInvariants homology(const Factorization& f) {
  const int n = f.holes();
  std::vector<std::vector<Integer>> rows;
  for (const auto& t : f.word()) {
    std::vector<Integer> row(n, 0);
    for (int h : t.holes) row[h - 1] = 1;
    rows.push_back(std::move(row));
  }
  FillingInvariants inv;
  inv.euler = euler_char(f);
  const std::vector<Integer> d = invariant_factors(rows);
  inv.b1 = n - static_cast<int>(d.size());
  for (const auto& x : d)
    if (x > 1) inv.torsion.push_back(x);
  return inv;
}

bool boundary_open_book_equal(const Factorization& f, const Factorization& g, const ActOptions& options) {
  if (f.holes() != g.holes()) throw DomainError("open books have different numbers of holes");
  return equal(f, g, options);
}

}  // namespace starsurg
