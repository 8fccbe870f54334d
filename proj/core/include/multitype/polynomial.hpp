#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "multitype/coefficient.hpp"
#include "multitype/multi_index.hpp"

namespace multitype {

/// Sparse polynomial in n complex variables with Gaussian-rational coefficients.
///
/// Terms are kept in canonical graded reverse lexicographic order (greatest
/// monomial first) and zero coefficients are never stored, so two polynomials
/// are equal exactly when their term maps are equal.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Coefficient, GrevlexGreater>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Coefficient& c);
  static Polynomial variable(std::size_t num_vars, std::size_t var);
  static Polynomial monomial(const MultiIndex& m, const Coefficient& c = Coefficient(1));

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Accumulates c into the coefficient of m, erasing the term if it cancels.
  void add_term(const MultiIndex& m, const Coefficient& c);
  Coefficient coefficient(const MultiIndex& m) const;

  /// Greatest term under the canonical order. Precondition: nonzero.
  const TermMap::value_type& leading_term() const;
  /// Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  bool involves(std::size_t var) const;
  /// Indices of the variables occurring in some term.
  std::set<std::size_t> variables() const;
  bool has_constant_term() const;
  /// Lowest total degree of a stored term. Precondition: nonzero.
  std::uint64_t min_degree() const;
  std::uint64_t max_degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial scaled(const Coefficient& c) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Coefficient& c, const Polynomial& p) { return p.scaled(c); }
  Polynomial operator-() const { return scaled(Coefficient(-1)); }

  Polynomial pow(unsigned exponent) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_ring(const Polynomial& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

/// Formal partial derivative with respect to z_var.
Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// Integral from 0 to z_var in the variable z_var.
Polynomial antiderivative(const Polynomial& p, std::size_t var);

/// Drops every term of total degree greater than `degree`.
Polynomial truncate(const Polynomial& p, std::uint64_t degree);

/// One coordinate change z~_target = z_target + shift.
struct SubstitutionStep {
  std::size_t target;
  Polynomial shift;

  friend bool operator==(const SubstitutionStep&, const SubstitutionStep&) = default;
};

/// Ordered sequence of single-variable coordinate changes.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::vector<SubstitutionStep> steps) : steps_(std::move(steps)) {}

  const std::vector<SubstitutionStep>& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }
  std::size_t size() const noexcept { return steps_.size(); }

  void append(SubstitutionStep step) { steps_.push_back(std::move(step)); }
  void append(const Substitution& other);

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::vector<SubstitutionStep> steps_;
};

/// Rewrites p in the new coordinates: each step in order replaces z_target by
/// z_target - shift. Throws InvalidSubstitutionError when a shift involves its
/// own target and DimensionError on ring mismatch.
Polynomial substitute(const Polynomial& p, const Substitution& s);
Polynomial substitute(const Polynomial& p, const SubstitutionStep& step);
std::vector<Polynomial> substitute(std::span<const Polynomial> gens, const Substitution& s);

/// Minimum total degree over all terms of all generators.
/// Throws InvalidInputError on a constant term, DegenerateInputError when
/// every generator is zero.
std::uint64_t vanishing_order(std::span<const Polynomial> gens);

/// Variables occurring in at least one generator.
std::set<std::size_t> variables_of(std::span<const Polynomial> gens);

}  // namespace multitype
