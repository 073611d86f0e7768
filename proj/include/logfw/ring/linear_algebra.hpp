#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace logfw::ring {

// Dense matrices over a field F (same interface as polynomial coefficients).
template <class F>
using Matrix = std::vector<std::vector<typename F::Element>>;

// Reduced row echelon form in place. Pivots are taken column by column, each
// time from the first remaining row with a nonzero entry. Returns pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(const F& k, Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pick = r;
    while (pick < m.size() && k.is_zero(m[pick][c])) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[r], m[pick]);
    const auto inv = k.inv(m[r][c]);
    for (auto& x : m[r]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || k.is_zero(m[i][c])) continue;
      const auto f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

template <class F>
std::size_t matrix_rank(const F& k, Matrix<F> m) {
  return row_reduce(k, m).size();
}

// Basis of {v : m v = 0}.
template <class F>
Matrix<F> kernel_basis(const F& k, Matrix<F> m, std::size_t cols) {
  const auto pivots = row_reduce(k, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<F> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(cols, k.zero());
    v[free] = k.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace logfw::ring
