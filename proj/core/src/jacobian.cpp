#include "multitype/jacobian.hpp"

#include <algorithm>

#include "multitype/errors.hpp"

namespace multitype {

JacobianMatrix::JacobianMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw DimensionError("entry count does not match shape");
}

bool JacobianMatrix::row_is_zero(std::size_t row) const {
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!at(row, c).is_zero()) return false;
  }
  return true;
}

JacobianMatrix jacobian(std::span<const Polynomial> gens) {
  if (gens.empty()) throw InvalidInputError("jacobian of an empty generator list");
  const std::size_t n = gens.front().num_vars();
  for (const auto& g : gens) {
    if (g.num_vars() != n) throw DimensionError("generators over different rings");
  }
  std::vector<Polynomial> entries;
  entries.reserve(n * gens.size());
  for (std::size_t l = 0; l < n; ++l) {
    for (const auto& g : gens) entries.push_back(partial_derivative(g, l));
  }
  return JacobianMatrix(n, gens.size(), std::move(entries));
}

namespace {

void enumerate(const Weight& w, const std::vector<std::size_t>& vars, std::size_t pos,
               const Rational& remaining, MultiIndex& current, std::vector<MultiIndex>& out) {
  if (sgn(remaining) == 0) {
    out.push_back(current);
    return;
  }
  if (pos == vars.size()) return;
  const std::size_t v = vars[pos];
  Rational left = remaining;
  for (MultiIndex::Exponent e = 0;; ++e) {
    current[v] = e;
    enumerate(w, vars, pos + 1, left, current, out);
    left -= w[v];
    if (sgn(left) < 0) break;
  }
  current[v] = 0;
}

}  // namespace

std::vector<MultiIndex> homogeneous_monomials(const Weight& w, const Rational& target,
                                              const std::set<std::size_t>& excluded) {
  std::vector<MultiIndex> out;
  if (sgn(target) < 0) return out;
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (excluded.count(v) != 0) continue;
    if (sgn(w[v]) == 0) throw InvalidInputError("homogeneous monomials need positive weights");
    vars.push_back(v);
  }
  MultiIndex current(w.size());
  enumerate(w, vars, 0, target, current, out);
  std::sort(out.begin(), out.end(), GrevlexGreater());
  return out;
}

std::vector<MultiIndex> homogeneous_monomials(const Weight& w, const Rational& target,
                                              std::size_t excluded_var) {
  return homogeneous_monomials(w, target, std::set<std::size_t>{excluded_var});
}

}  // namespace multitype
