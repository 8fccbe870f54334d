#pragma once

#include <span>
#include <vector>

#include "multitype/config.hpp"
#include "multitype/kolar.hpp"
#include "multitype/mixed_polynomial.hpp"
#include "multitype/polynomial.hpp"

namespace multitype {

struct MixedStep {
  /// Terms of sum |f|^2 of weighted length 1 after the step's change of variables.
  MixedPolynomial leading_polynomial;
  /// Holomorphic leading generators produced by row reduction, not normalized.
  std::vector<Polynomial> ideal_leading;
};

struct MixedRunResult {
  MultitypeReport report;
  std::vector<MixedStep> steps;
};

/// The real-valued algorithm on P = sum |f|^2: leading polynomials and W values
/// are computed on mixed terms, while changes of variables come from row
/// reduction of the holomorphic leading generators.
MixedRunResult run_mixed_kolar(std::span<const Polynomial> gens, const RunConfig& config = {});

}  // namespace multitype
