#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "multitype/config.hpp"
#include "multitype/multi_index.hpp"
#include "multitype/polynomial.hpp"
#include "multitype/weight.hpp"

namespace multitype {

struct BloomGraham {
  unsigned type = 0;
  Weight initial_weight;
};

/// Type is twice the vanishing order; the initial weight is 1/type everywhere.
BloomGraham bloom_graham(std::span<const Polynomial> gens);

/// Per generator, the terms of weighted length exactly 1/2; zero parts dropped.
std::vector<Polynomial> leading_ideal(std::span<const Polynomial> gens, const Weight& w);

struct ThetaResult {
  std::vector<MultiIndex> theta;
  std::optional<Rational> w_max;
};

/// Monomials of the generators, other than weighted-length-1/2 terms, whose
/// length over leading_vars is below 1/2, and the largest value of
/// (1/2 - sum_{i in L} a_i mu_i) / (sum_{i not in L} a_i) among them.
ThetaResult theta_and_wmax(std::span<const Polynomial> gens, const std::set<std::size_t>& leading_vars,
                           const Weight& w);

/// Keeps w on leading_vars and sets every other variable to w_max.
/// Throws InvalidAdvancementError if w_max <= 0.
Weight advance_weight(const Weight& w, const std::set<std::size_t>& leading_vars,
                      const Rational& w_max);

struct StepTrace {
  std::size_t step = 0;
  Weight weight;
  /// Leading ideal after this step's change of variables, each generator monic.
  std::vector<Polynomial> leading_ideal;
  Substitution substitution;
  std::size_t d = 0;
  std::size_t theta_size = 0;
  std::optional<Rational> w_max;
  std::set<std::size_t> leading_vars;
  bool fast_path = false;
  bool fast_path_violation = false;
};

struct MultitypeReport {
  Multitype multitype;
  Weight final_weight;
  std::vector<Polynomial> model_ideal;
  std::vector<StepTrace> traces;
  Substitution total_substitution;
  unsigned bloom_graham_type = 0;
  std::vector<std::string> warnings;
};

/// Throws InfiniteTypeError when some variable never enters the leading ideal
/// and NonterminationError past config.max_steps.
MultitypeReport run(std::span<const Polynomial> gens, const RunConfig& config = {});

/// Every term of every generator has weighted length 1/2.
bool leading_terms_have_half_length(std::span<const Polynomial> leading, const Weight& w);

}  // namespace multitype
