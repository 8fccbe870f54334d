#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "multitype/config.hpp"
#include "multitype/kolar.hpp"
#include "multitype/polynomial.hpp"

namespace multitype {

struct InputSpec {
  std::vector<std::string> variable_names;
  std::vector<Polynomial> generators;
  RunConfig config;
};

/// Parses
///
///     # comment
///     vars: z1 z2 z3
///     beta: 6            (optional truncation order)
///     max_steps: 32      (optional)
///     strategy: greedy   (optional; greedy or exhaustive)
///     gens:
///     z1 - z2 + z3^2
///     z1^2 - z2^2
///
/// Throws ParseError with a 1-based line and column.
InputSpec parse_input(std::string_view text);

/// Parses a single polynomial over the given variable names.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// Canonical rendering such as "z2*z3^2", "(1/2)*z1^2 - i*z2", "(2+3i)*z1".
/// parse_polynomial reads it back to the same polynomial.
std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names);

/// "z1' = z1 - z2" for the step z1~ = z1 + (-z2).
std::string format_substitution_step(const SubstitutionStep& step,
                                     const std::vector<std::string>& names);

struct EmitOptions {
  OutputFormat format = OutputFormat::Text;
  /// Text output includes the per-step trace; JSON always includes steps.
  bool trace = false;
};

std::string emit_report(const MultitypeReport& report, const std::vector<std::string>& names,
                        const EmitOptions& options = {});

}  // namespace multitype
