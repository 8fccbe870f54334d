#pragma once

#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "multitype/coefficient.hpp"
#include "multitype/mixed_polynomial.hpp"
#include "multitype/polynomial.hpp"
#include "multitype/weight.hpp"

namespace testsupport {

using multitype::Coefficient;
using multitype::MixedMonomial;
using multitype::MixedPolynomial;
using multitype::MultiIndex;
using multitype::Polynomial;
using multitype::Rational;

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Nonzero integer in [-range, range].
  int nonzero(int range);

  /// Monomial of total degree in [min_degree, max_degree].
  MultiIndex monomial(std::size_t n, unsigned min_degree, unsigned max_degree);
  /// Same, using only the listed variables.
  MultiIndex monomial_in(std::size_t n, const std::vector<std::size_t>& vars, unsigned min_degree,
                         unsigned max_degree);

  /// Up to `terms` terms, small integer coefficients, degree in [min_degree, max_degree].
  Polynomial polynomial(std::size_t n, std::size_t terms, unsigned min_degree, unsigned max_degree,
                        int coeff_range = 3);
  /// Coefficients may be Gaussian integers.
  Polynomial complex_polynomial(std::size_t n, std::size_t terms, unsigned min_degree,
                                unsigned max_degree, int coeff_range = 2);
  /// Polynomial avoiding one variable.
  Polynomial polynomial_avoiding(std::size_t n, std::size_t avoid, std::size_t terms,
                                 unsigned min_degree, unsigned max_degree);

  MixedMonomial mixed_monomial(std::size_t n, unsigned max_degree);

  /// Generators vanishing at the origin; each variable gets a pure power in some
  /// generator with probability `pure_power_chance` percent.
  std::vector<Polynomial> ideal(std::size_t n, std::size_t count, unsigned max_degree,
                                int pure_power_chance = 80);

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// Sum of f * conj(f) computed term by term.
MixedPolynomial sos_by_terms(const std::vector<Polynomial>& gens);

/// Leibniz-formula determinant over all permutations.
MixedPolynomial leibniz_determinant(const std::vector<std::vector<MixedPolynomial>>& a,
                                    std::size_t num_vars);

/// Weighted length by direct summation.
Rational direct_length(const MultiIndex& m, const std::vector<Rational>& weights);

}  // namespace testsupport
