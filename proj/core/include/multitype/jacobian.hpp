#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "multitype/multi_index.hpp"
#include "multitype/polynomial.hpp"
#include "multitype/weight.hpp"

namespace multitype {

/// Rows are variables, columns are generators: entry (l, i) = dh_i/dz_l.
class JacobianMatrix {
 public:
  JacobianMatrix() = default;
  JacobianMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Polynomial& at(std::size_t row, std::size_t col) const { return entries_.at(row * cols_ + col); }
  bool row_is_zero(std::size_t row) const;

  friend bool operator==(const JacobianMatrix&, const JacobianMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

/// Throws InvalidInputError on an empty list, DimensionError on mixed rings.
JacobianMatrix jacobian(std::span<const Polynomial> gens);

/// Every monomial of weighted length exactly `target` avoiding the excluded
/// variables, in canonical order. Throws InvalidInputError if a variable that
/// is not excluded has weight zero.
std::vector<MultiIndex> homogeneous_monomials(const Weight& w, const Rational& target,
                                              const std::set<std::size_t>& excluded);
std::vector<MultiIndex> homogeneous_monomials(const Weight& w, const Rational& target,
                                              std::size_t excluded_var);

}  // namespace multitype
