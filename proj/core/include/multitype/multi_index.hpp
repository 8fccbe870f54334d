#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace multitype {

/// Exponent vector of a monomial in n variables.
class MultiIndex {
 public:
  using Exponent = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
  explicit MultiIndex(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  MultiIndex(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static MultiIndex unit(std::size_t n, std::size_t var, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const;
  bool is_constant() const;
  bool involves(std::size_t var) const { return exps_[var] != 0; }

  /// Throws DimensionError on length mismatch.
  MultiIndex operator+(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Graded reverse lexicographic order: higher total degree first; ties go to the
/// monomial with the smaller exponent in the last differing variable.
/// Used as the "greater first" comparator for canonical term storage.
struct GrevlexGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

}  // namespace multitype
