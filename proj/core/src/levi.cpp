#include "multitype/levi.hpp"

#include <bit>
#include <cstdint>

#include "multitype/errors.hpp"

namespace multitype {

LeviMatrix::LeviMatrix(std::size_t n, std::size_t num_vars)
    : rows_(n), cols_(n), entries_(n * n, MixedPolynomial(num_vars)) {}

LeviMatrix::LeviMatrix(std::size_t rows, std::size_t cols, std::vector<MixedPolynomial> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw DimensionError("entry count does not match shape");
}

LeviMatrix levi(const MixedPolynomial& p) {
  const std::size_t n = p.num_vars();
  LeviMatrix a(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const MixedPolynomial dk = partial_holo(p, k);
    for (std::size_t l = 0; l < n; ++l) a.at(k, l) = partial_anti(dk, l);
  }
  return a;
}

bool is_hermitian(const LeviMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t k = 0; k < a.rows(); ++k) {
    for (std::size_t l = k; l < a.cols(); ++l) {
      if (a.at(k, l) != a.at(l, k).conj()) return false;
    }
  }
  return true;
}

std::vector<std::size_t> nonzero_rows(const LeviMatrix& a) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a.at(r, c).is_zero()) {
        out.push_back(r);
        break;
      }
    }
  }
  return out;
}

LeviMatrix principal_submatrix(const LeviMatrix& a, const std::vector<std::size_t>& indices) {
  std::vector<MixedPolynomial> entries;
  entries.reserve(indices.size() * indices.size());
  for (auto r : indices) {
    for (auto c : indices) entries.push_back(a.at(r, c));
  }
  return LeviMatrix(indices.size(), indices.size(), std::move(entries));
}

LeviMatrix restricted(const LeviMatrix& a) { return principal_submatrix(a, nonzero_rows(a)); }

LeviMatrix paired_row_col_op(const LeviMatrix& a, std::size_t central, const Polynomial& h) {
  const std::size_t n = a.rows();
  if (a.cols() != n || central >= n || h.num_vars() != n) {
    throw DimensionError("paired operation does not match matrix shape");
  }
  if (h.involves(central)) {
    throw InvalidSubstitutionError("row operation polynomial involves the central variable");
  }
  LeviMatrix out = a;
  for (auto l : h.variables()) {
    const MixedPolynomial f = MixedPolynomial::from_holomorphic(partial_derivative(h, l));
    for (std::size_t c = 0; c < n; ++c) out.at(l, c) -= f * out.at(central, c);
  }
  for (auto l : h.variables()) {
    const MixedPolynomial f = MixedPolynomial::conjugate_of(partial_derivative(h, l));
    for (std::size_t r = 0; r < n; ++r) out.at(r, l) -= out.at(r, central) * f;
  }
  return out;
}

LeviMatrix in_new_coordinates(const LeviMatrix& a, const Substitution& s) {
  LeviMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = substitute(a.at(r, c), s);
  }
  return out;
}

MixedPolynomial determinant(const LeviMatrix& a, std::size_t num_vars) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionError("determinant of a non-square matrix");
  if (n >= 24) throw DimensionError("matrix too large for subset expansion");

  // dp[mask]: signed sum over assignments of the first popcount(mask) rows to
  // the columns in mask.
  std::vector<MixedPolynomial> dp(std::size_t{1} << n, MixedPolynomial(num_vars));
  dp[0] = MixedPolynomial::constant(num_vars, Coefficient(1));
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (dp[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1U) continue;
      const MixedPolynomial& entry = a.at(row, j);
      if (entry.is_zero()) continue;
      const int inversions = std::popcount(mask >> (j + 1));
      MixedPolynomial term = dp[mask] * entry;
      if (inversions % 2 != 0) {
        dp[mask | (1U << j)] -= term;
      } else {
        dp[mask | (1U << j)] += term;
      }
    }
  }
  return dp[(1U << n) - 1];
}

MixedPolynomial determinant(const LeviMatrix& a) {
  std::size_t num_vars = 0;
  if (a.rows() > 0 && a.cols() > 0) num_vars = a.at(0, 0).num_vars();
  return determinant(a, num_vars);
}

}  // namespace multitype
