#pragma once

#include <optional>
#include <vector>

#include "multitype/coefficient.hpp"

namespace multitype {

using CoefficientMatrix = std::vector<std::vector<Coefficient>>;

/// One exact solution of matrix * x = rhs by Gauss-Jordan elimination, with
/// free unknowns set to zero; nullopt when the system is inconsistent.
/// Throws DimensionError when rows are ragged or rhs has the wrong length.
std::optional<std::vector<Coefficient>> solve_linear(CoefficientMatrix matrix,
                                                     std::vector<Coefficient> rhs);

}  // namespace multitype
