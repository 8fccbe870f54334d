#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "multitype/coefficient.hpp"
#include "multitype/multi_index.hpp"
#include "multitype/polynomial.hpp"

namespace multitype {

/// Per-variable weight assignment. Entries lie in [0, 1/2]; `sorted()` gives
/// the nonincreasing tuple used for ordering and reporting.
class Weight {
 public:
  Weight() = default;
  /// Throws InvalidInputError if an entry lies outside [0, 1/2].
  explicit Weight(std::vector<Rational> per_variable);
  static Weight uniform(std::size_t n, const Rational& value);

  std::size_t size() const noexcept { return per_variable_.size(); }
  const Rational& operator[](std::size_t var) const { return per_variable_.at(var); }
  const std::vector<Rational>& per_variable() const noexcept { return per_variable_; }
  std::vector<Rational> sorted() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<Rational> per_variable_;
};

struct WeightCheck {
  bool valid = true;
  std::string diagnostic;

  explicit operator bool() const noexcept { return valid; }
};

/// Checks a tuple as written: nonincreasing, entries in [0, 1/2], and for every
/// positive entry mu_t some a_1..a_t >= 0 with a_t > 0 and sum a_j mu_j = 1.
WeightCheck validate_weight_tuple(std::span<const Rational> tuple);
/// validate_weight_tuple applied to the sorted view.
WeightCheck validate_weight(const Weight& w);

/// Lexicographic comparison of the sorted views. Throws DimensionError on
/// length mismatch.
std::strong_ordering lex_compare(const Weight& a, const Weight& b);

/// Sum of exponent times weight. Throws DimensionError on length mismatch.
Rational weighted_length(const MultiIndex& m, const Weight& w);

/// True iff every term of p has weighted length exactly `degree`.
bool is_homogeneous(const Polynomial& p, const Weight& w, const Rational& degree);

struct Multitype {
  std::vector<Rational> entries;

  friend bool operator==(const Multitype&, const Multitype&) = default;
};

/// Reciprocals of the sorted view. Throws InfiniteTypeError on a zero entry.
Multitype multitype_of(const Weight& w);

std::string to_string(const Multitype& m);
/// "(1/2, 1/6, 1/6)"
std::string to_string(std::span<const Rational> tuple);

/// True iff every step's shift is homogeneous of its target's weight.
bool check_homogeneous_substitution(const Substitution& s, const Weight& w);

}  // namespace multitype
