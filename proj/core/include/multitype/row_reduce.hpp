#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multitype/config.hpp"
#include "multitype/jacobian.hpp"
#include "multitype/polynomial.hpp"
#include "multitype/weight.hpp"

namespace multitype {

/// Certified relation d_k h_i = sum_c gamma_c d_c h_i, either for one column i
/// or, when `column` is empty, for every column simultaneously.
struct DependenceWitness {
  std::size_t row = 0;
  std::optional<std::size_t> column;
  std::map<std::size_t, Polynomial> coefficients;

  std::set<std::size_t> centrals() const;

  friend bool operator==(const DependenceWitness&, const DependenceWitness&) = default;
};

/// Central rows eligible for eliminating row k in `column` (all columns when
/// empty), ordered by decreasing weight then increasing index.
std::vector<std::size_t> central_candidates(const JacobianMatrix& j, std::optional<std::size_t> column,
                                            const Weight& w, const std::set<std::size_t>& forbidden,
                                            std::size_t k);

/// Tries the homogeneous ansatz for a fixed set of central rows. Each gamma_c
/// is homogeneous of weighted degree w[c] - w[k] and avoids every central
/// variable, so the resulting steps can be applied one after another.
std::optional<DependenceWitness> solve_witness(const JacobianMatrix& j,
                                               std::optional<std::size_t> column, const Weight& w,
                                               std::size_t k, const std::vector<std::size_t>& centrals);

/// First witness over central subsets of increasing size for row k of one
/// column; nullopt if row k is zero there or no subset works.
std::optional<DependenceWitness> find_dependent_row(const JacobianMatrix& j, std::size_t column,
                                                    const Weight& w,
                                                    const std::set<std::size_t>& forbidden_centrals,
                                                    std::size_t k);

/// Same search with one relation shared by all columns.
std::optional<DependenceWitness> find_dependent_row_all_columns(
    const JacobianMatrix& j, const Weight& w, const std::set<std::size_t>& forbidden_centrals,
    std::size_t k);

/// One step per nonzero gamma_c: target c, shift the antiderivative of gamma_c in z_k.
Substitution witness_to_substitution(const DependenceWitness& wit);

/// Number of variables occurring in none of the generators.
std::size_t absent_variable_count(std::span<const Polynomial> gens);

struct EliminationStep {
  DependenceWitness witness;
  Substitution substitution;
};

struct EliminationPlan {
  std::vector<EliminationStep> steps;
  std::set<std::size_t> used_central_rows;
  /// (variable, generator) pairs; generator is empty for all-column witnesses.
  /// A row serving as central for one gradient ideal is never central for
  /// another, but may be reused within the same one.
  std::set<std::pair<std::size_t, std::optional<std::size_t>>> used_central_generators;
};

struct EliminationOptions {
  Strategy strategy = Strategy::Greedy;
  bool use_fast_path = true;
  bool audit_fast_path = false;
  std::size_t exhaustive_node_limit = 20000;
  /// The exhaustive search falls back to greedy above this many variables.
  std::size_t exhaustive_max_vars = 6;
};

struct EliminationResult {
  std::vector<Polynomial> generators;
  Substitution substitution;
  std::size_t d = 0;
  EliminationPlan plan;
  bool fast_path = false;
  /// Set only when auditing: the fast path fired but the search would have
  /// found a dependent row.
  bool fast_path_violation = false;
  std::vector<std::string> warnings;
};

/// Nonzero determinant of the Levi matrix of sum |h|^2 restricted to its
/// nonzero rows.
bool restricted_levi_determinant_nonzero(std::span<const Polynomial> gens);

/// Simplifies the leading ideal by homogeneous changes of variables,
/// maximizing the number of variables absent from the result.
EliminationResult eliminate_all(std::span<const Polynomial> leading_gens, const Weight& w,
                                const EliminationOptions& options = {});

}  // namespace multitype
