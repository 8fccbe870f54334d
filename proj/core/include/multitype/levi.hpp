#pragma once

#include <cstddef>
#include <vector>

#include "multitype/mixed_polynomial.hpp"
#include "multitype/polynomial.hpp"

namespace multitype {

/// Square matrix of mixed polynomials, stored row-major.
class LeviMatrix {
 public:
  LeviMatrix() = default;
  /// n x n zero matrix over num_vars variables.
  LeviMatrix(std::size_t n, std::size_t num_vars);
  /// Throws DimensionError unless entries.size() == rows * cols.
  LeviMatrix(std::size_t rows, std::size_t cols, std::vector<MixedPolynomial> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const MixedPolynomial& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  MixedPolynomial& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }

  friend bool operator==(const LeviMatrix&, const LeviMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MixedPolynomial> entries_;
};

/// Entry (k, l) is the derivative of P in z_k and conj(z_l).
LeviMatrix levi(const MixedPolynomial& p);

bool is_hermitian(const LeviMatrix& a);

/// Indices of rows with at least one nonzero entry.
std::vector<std::size_t> nonzero_rows(const LeviMatrix& a);

/// Principal submatrix on the given indices.
LeviMatrix principal_submatrix(const LeviMatrix& a, const std::vector<std::size_t>& indices);

/// Principal submatrix on the nonzero rows.
LeviMatrix restricted(const LeviMatrix& a);

/// For every variable l occurring in h: R_l - (dh/dz_l) R_central, then
/// C_l - conj(dh/dz_l) C_central. Entries stay expressed in the old coordinates.
/// Throws InvalidSubstitutionError if h involves z_central.
LeviMatrix paired_row_col_op(const LeviMatrix& a, std::size_t central, const Polynomial& h);

/// Rewrites every entry in the coordinates produced by s.
LeviMatrix in_new_coordinates(const LeviMatrix& a, const Substitution& s);

/// Exact determinant by expansion over column subsets. The empty matrix has
/// determinant 1. Throws DimensionError if not square.
MixedPolynomial determinant(const LeviMatrix& a, std::size_t num_vars);
MixedPolynomial determinant(const LeviMatrix& a);

}  // namespace multitype
