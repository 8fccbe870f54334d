#include "multitype/row_reduce.hpp"

#include <algorithm>
#include <stdexcept>

#include "multitype/errors.hpp"
#include "multitype/levi.hpp"
#include "multitype/linear_solve.hpp"
#include "multitype/mixed_polynomial.hpp"

namespace multitype {

std::set<std::size_t> DependenceWitness::centrals() const {
  std::set<std::size_t> out;
  for (const auto& [c, gamma] : coefficients) out.insert(c);
  return out;
}

namespace {

bool entry_nonzero(const JacobianMatrix& j, std::optional<std::size_t> column, std::size_t row) {
  return column ? !j.at(row, *column).is_zero() : !j.row_is_zero(row);
}

// Increasing weight, then decreasing index.
std::vector<std::size_t> row_order(const Weight& w) {
  std::vector<std::size_t> rows(w.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
    const int c = cmp(w[a], w[b]);
    return c != 0 ? c < 0 : a > b;
  });
  return rows;
}

template <typename Visit>
bool for_each_subset(const std::vector<std::size_t>& items, Visit&& visit) {
  const std::size_t m = items.size();
  for (std::size_t size = 1; size <= m; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<std::size_t> subset;
      subset.reserve(size);
      for (auto i : idx) subset.push_back(items[i]);
      if (visit(subset)) return true;
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == m - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return false;
}

std::optional<DependenceWitness> first_witness(const JacobianMatrix& j,
                                               std::optional<std::size_t> column, const Weight& w,
                                               const std::set<std::size_t>& forbidden, std::size_t k) {
  if (k >= j.rows() || !entry_nonzero(j, column, k)) return std::nullopt;
  std::optional<DependenceWitness> found;
  for_each_subset(central_candidates(j, column, w, forbidden, k),
                  [&](const std::vector<std::size_t>& subset) {
                    found = solve_witness(j, column, w, k, subset);
                    return found.has_value();
                  });
  return found;
}

}  // namespace

std::vector<std::size_t> central_candidates(const JacobianMatrix& j, std::optional<std::size_t> column,
                                            const Weight& w, const std::set<std::size_t>& forbidden,
                                            std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < j.rows(); ++c) {
    if (c == k || forbidden.count(c) != 0 || w[c] < w[k]) continue;
    if (!entry_nonzero(j, column, c)) continue;
    out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  return out;
}

std::optional<DependenceWitness> solve_witness(const JacobianMatrix& j,
                                               std::optional<std::size_t> column, const Weight& w,
                                               std::size_t k, const std::vector<std::size_t>& centrals) {
  if (j.rows() != w.size()) throw DimensionError("jacobian and weight sizes differ");
  std::vector<std::size_t> columns;
  if (column) {
    columns.push_back(*column);
  } else {
    for (std::size_t i = 0; i < j.cols(); ++i) columns.push_back(i);
  }
  const std::set<std::size_t> excluded(centrals.begin(), centrals.end());

  struct Unknown {
    std::size_t central;
    MultiIndex monomial;
  };
  std::vector<Unknown> unknowns;
  for (auto c : centrals) {
    const Rational degree = w[c] - w[k];
    for (auto& m : homogeneous_monomials(w, degree, excluded)) unknowns.push_back({c, std::move(m)});
  }
  if (unknowns.empty()) return std::nullopt;

  // One equation per monomial of the identity, per column.
  std::map<std::pair<std::size_t, MultiIndex>, std::size_t> equation_of;
  auto equation = [&](std::size_t col, const MultiIndex& m) {
    auto [it, inserted] = equation_of.try_emplace({col, m}, equation_of.size());
    return it->second;
  };
  std::map<std::size_t, Coefficient> rhs_entries;
  for (auto col : columns) {
    for (const auto& [m, c] : j.at(k, col).terms()) rhs_entries[equation(col, m)] = c;
  }
  std::vector<std::map<std::size_t, Coefficient>> columns_of_unknowns(unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    for (auto col : columns) {
      for (const auto& [m, c] : j.at(unknowns[u].central, col).terms()) {
        columns_of_unknowns[u][equation(col, m + unknowns[u].monomial)] += c;
      }
    }
  }

  const std::size_t equations = equation_of.size();
  CoefficientMatrix matrix(equations, std::vector<Coefficient>(unknowns.size()));
  std::vector<Coefficient> rhs(equations);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    for (const auto& [e, c] : columns_of_unknowns[u]) matrix[e][u] = c;
  }
  for (const auto& [e, c] : rhs_entries) rhs[e] = c;

  auto solution = solve_linear(std::move(matrix), std::move(rhs));
  if (!solution) return std::nullopt;

  DependenceWitness wit;
  wit.row = k;
  wit.column = column;
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    if ((*solution)[u].is_zero()) continue;
    auto [it, inserted] = wit.coefficients.try_emplace(unknowns[u].central, Polynomial(w.size()));
    it->second.add_term(unknowns[u].monomial, (*solution)[u]);
  }
  if (wit.coefficients.empty()) return std::nullopt;

  for (auto col : columns) {
    Polynomial combination(w.size());
    for (const auto& [c, gamma] : wit.coefficients) combination += gamma * j.at(c, col);
    if (combination != j.at(k, col)) throw std::logic_error("dependence witness failed verification");
  }
  return wit;
}

std::optional<DependenceWitness> find_dependent_row(const JacobianMatrix& j, std::size_t column,
                                                    const Weight& w,
                                                    const std::set<std::size_t>& forbidden_centrals,
                                                    std::size_t k) {
  if (column >= j.cols()) throw DimensionError("column index out of range");
  return first_witness(j, column, w, forbidden_centrals, k);
}

std::optional<DependenceWitness> find_dependent_row_all_columns(
    const JacobianMatrix& j, const Weight& w, const std::set<std::size_t>& forbidden_centrals,
    std::size_t k) {
  return first_witness(j, std::nullopt, w, forbidden_centrals, k);
}

Substitution witness_to_substitution(const DependenceWitness& wit) {
  Substitution s;
  for (const auto& [c, gamma] : wit.coefficients) {
    if (gamma.is_zero()) continue;
    s.append({c, antiderivative(gamma, wit.row)});
  }
  return s;
}

std::size_t absent_variable_count(std::span<const Polynomial> gens) {
  if (gens.empty()) return 0;
  return gens.front().num_vars() - variables_of(gens).size();
}

bool restricted_levi_determinant_nonzero(std::span<const Polynomial> gens) {
  if (gens.empty()) return false;
  const std::size_t n = gens.front().num_vars();
  const LeviMatrix a = restricted(levi(expand_sos(gens)));
  if (a.rows() == 0) return false;
  return !determinant(a, n).is_zero();
}

namespace {

struct SearchState {
  std::vector<Polynomial> gens;
  Substitution total;
  EliminationPlan plan;
};

// Central rows already used for a different gradient ideal (or for all of them).
std::set<std::size_t> forbidden_for(const EliminationPlan& plan, std::optional<std::size_t> column) {
  std::set<std::size_t> out;
  for (const auto& [row, col] : plan.used_central_generators) {
    if (!column || !col || *col != *column) out.insert(row);
  }
  return out;
}

void apply_witness(SearchState& state, const DependenceWitness& wit, const Weight& w) {
  Substitution sub = witness_to_substitution(wit);
  if (!check_homogeneous_substitution(sub, w)) {
    throw std::logic_error("row reduction produced a non-homogeneous substitution");
  }
  state.gens = substitute(state.gens, sub);
  for (auto c : wit.centrals()) {
    state.plan.used_central_rows.insert(c);
    state.plan.used_central_generators.insert({c, wit.column});
  }
  state.total.append(sub);
  state.plan.steps.push_back({wit, std::move(sub)});
}

SearchState greedy(const SearchState& start, const Weight& w) {
  const std::size_t ncols = start.gens.size();
  const auto order = row_order(w);
  SearchState state = start;

  for (std::size_t col = 0; col < ncols; ++col) {
    // Each row is reduced at most once per gradient ideal.
    std::set<std::size_t> reduced;
    while (true) {
      const JacobianMatrix j = jacobian(state.gens);
      std::optional<DependenceWitness> wit;
      for (auto k : order) {
        if (state.plan.used_central_rows.count(k) != 0 || reduced.count(k) != 0) continue;
        wit = find_dependent_row(j, col, w, forbidden_for(state.plan, col), k);
        if (wit) break;
      }
      if (!wit) break;
      reduced.insert(wit->row);
      apply_witness(state, *wit, w);
    }
  }
  // A column pass that eliminates nothing is discarded.
  if (absent_variable_count(state.gens) <= absent_variable_count(start.gens)) state = start;

  bool improved = true;
  while (improved) {
    improved = false;
    const JacobianMatrix j = jacobian(state.gens);
    const std::size_t base = absent_variable_count(state.gens);
    for (auto k : order) {
      if (state.plan.used_central_rows.count(k) != 0) continue;
      auto wit = find_dependent_row_all_columns(j, w, state.plan.used_central_rows, k);
      if (!wit) continue;
      SearchState trial = state;
      apply_witness(trial, *wit, w);
      if (absent_variable_count(trial.gens) > base) {
        state = std::move(trial);
        improved = true;
        break;
      }
    }
  }
  return state;
}

struct Exhaustive {
  Exhaustive(const Weight& weight, std::size_t limit) : w(weight), node_limit(limit) {}

  const Weight& w;
  std::size_t node_limit;
  std::size_t nodes = 0;
  std::size_t max_depth = 0;
  bool truncated = false;
  std::vector<std::size_t> order;
  SearchState best;
  std::size_t best_d = 0;

  void visit(const SearchState& state, std::size_t depth) {
    if (nodes >= node_limit) {
      truncated = true;
      return;
    }
    ++nodes;
    const std::size_t d = absent_variable_count(state.gens);
    if (d > best_d) {
      best = state;
      best_d = d;
    }
    if (depth >= max_depth) return;
    const JacobianMatrix j = jacobian(state.gens);
    std::vector<std::optional<std::size_t>> columns;
    for (std::size_t c = 0; c < j.cols(); ++c) columns.emplace_back(c);
    columns.emplace_back(std::nullopt);

    for (const auto& col : columns) {
      for (auto k : order) {
        if (state.plan.used_central_rows.count(k) != 0) continue;
        if (!entry_nonzero(j, col, k)) continue;
        for_each_subset(central_candidates(j, col, w, forbidden_for(state.plan, col), k),
                        [&](const std::vector<std::size_t>& subset) {
                          if (truncated) return true;
                          auto wit = solve_witness(j, col, w, k, subset);
                          if (wit) {
                            SearchState child = state;
                            apply_witness(child, *wit, w);
                            visit(child, depth + 1);
                          }
                          return false;
                        });
        if (truncated) return;
      }
    }
  }
};

}  // namespace

EliminationResult eliminate_all(std::span<const Polynomial> leading_gens, const Weight& w,
                                const EliminationOptions& options) {
  if (leading_gens.empty()) throw InvalidInputError("empty leading ideal");
  for (const auto& g : leading_gens) {
    if (g.num_vars() != w.size()) throw DimensionError("generator and weight sizes differ");
  }

  SearchState start;
  start.gens.assign(leading_gens.begin(), leading_gens.end());

  EliminationResult result;
  auto finish = [&](SearchState state) {
    result.d = absent_variable_count(state.gens);
    result.generators = std::move(state.gens);
    result.substitution = std::move(state.total);
    result.plan = std::move(state.plan);
    return result;
  };

  if (options.use_fast_path && restricted_levi_determinant_nonzero(start.gens)) {
    result.fast_path = true;
    if (options.audit_fast_path) {
      const SearchState searched = greedy(start, w);
      bool dependent = !searched.plan.steps.empty();
      const JacobianMatrix j = jacobian(start.gens);
      for (std::size_t k = 0; k < j.rows() && !dependent; ++k) {
        dependent = find_dependent_row_all_columns(j, w, {}, k).has_value();
      }
      result.fast_path_violation = dependent;
      if (dependent) {
        result.warnings.push_back("nonzero restricted Levi determinant but a dependent row exists");
      }
    }
    return finish(std::move(start));
  }

  SearchState chosen = greedy(start, w);
  if (options.strategy == Strategy::Exhaustive) {
    if (w.size() > options.exhaustive_max_vars) {
      result.warnings.push_back("exhaustive search skipped for " + std::to_string(w.size()) +
                                " variables; greedy result used");
    } else {
      Exhaustive search(w, options.exhaustive_node_limit);
      search.order = row_order(w);
      search.best = start;
      search.best_d = absent_variable_count(start.gens);
      search.max_depth = w.size() * (start.gens.size() + 1);
      search.visit(start, 0);
      if (search.truncated) {
        result.warnings.push_back("exhaustive search stopped at the node limit");
      }
      const std::size_t greedy_d = absent_variable_count(chosen.gens);
      if (search.best_d > greedy_d) {
        result.warnings.push_back("exhaustive search eliminated " + std::to_string(search.best_d) +
                                  " variables where greedy eliminated " + std::to_string(greedy_d));
        chosen = std::move(search.best);
      }
    }
  }
  return finish(std::move(chosen));
}

}  // namespace multitype
