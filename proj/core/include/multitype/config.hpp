#pragma once

#include <cstddef>
#include <optional>

namespace multitype {

enum class Strategy { Greedy, Exhaustive };

enum class OutputFormat { Text, Json };

struct RunConfig {
  /// Generators are truncated to this total degree before the run.
  std::optional<unsigned> truncation_order;
  std::size_t max_steps = 64;
  Strategy strategy = Strategy::Greedy;
  /// Also run the mixed-polynomial algorithm and compare final weights.
  bool cross_check = false;
  OutputFormat output_format = OutputFormat::Text;
  /// When the restricted Levi determinant is nonzero, still run the row
  /// search and record whether it would have changed anything.
  bool audit_fast_path = false;
};

}  // namespace multitype
