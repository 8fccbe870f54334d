#include "multitype/linear_solve.hpp"

#include <utility>

#include "multitype/errors.hpp"

namespace multitype {

std::optional<std::vector<Coefficient>> solve_linear(CoefficientMatrix a,
                                                     std::vector<Coefficient> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw DimensionError("right-hand side length does not match matrix");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw DimensionError("ragged coefficient matrix");
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);

    const Coefficient inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Coefficient f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      }
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }

  std::vector<Coefficient> x(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
  return x;
}

}  // namespace multitype
