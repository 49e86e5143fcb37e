#include "linalg.hpp"

namespace insdel::detail {

std::vector<std::size_t> rref(const Field& f, Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t found = row;
    while (found < m.size() && m[found][col] == 0) ++found;
    if (found == m.size()) continue;
    std::swap(m[row], m[found]);
    const FieldElement scale = f.inv(m[row][col]);
    for (auto& x : m[row]) x = f.mul(x, scale);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const FieldElement factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) {
        if (m[row][c] != 0) m[r][c] = f.sub(m[r][c], f.mul(factor, m[row][c]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::optional<std::vector<FieldElement>> solve(const Field& f, Matrix a,
                                               const std::vector<FieldElement>& b,
                                               std::size_t cols) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    a[r].resize(cols, 0);
    a[r].push_back(b[r]);
  }
  auto pivots = rref(f, a, cols + 1);
  std::vector<FieldElement> x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;
    x[pivots[r]] = a[r][cols];
  }
  return x;
}

std::optional<std::vector<FieldElement>> kernel_vector(const Field& f, Matrix a, std::size_t cols) {
  for (auto& row : a) row.resize(cols, 0);
  auto pivots = rref(f, a, cols);
  if (pivots.size() == cols) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<FieldElement> x(cols, 0);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(a[r][free_col]);
  return x;
}

}  // namespace insdel::detail
