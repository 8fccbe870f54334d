#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>

#include "multitype/coefficient.hpp"
#include "multitype/multi_index.hpp"
#include "multitype/polynomial.hpp"
#include "multitype/weight.hpp"

namespace multitype {

/// Monomial z^holo * conj(z)^anti.
struct MixedMonomial {
  MultiIndex holo;
  MultiIndex anti;

  std::uint64_t total_degree() const { return holo.total_degree() + anti.total_degree(); }
  MixedMonomial swapped() const { return {anti, holo}; }

  friend bool operator==(const MixedMonomial&, const MixedMonomial&) = default;
};

/// Higher total degree first, then grevlex on the holomorphic part, then on
/// the antiholomorphic part.
struct MixedMonomialGreater {
  bool operator()(const MixedMonomial& a, const MixedMonomial& b) const;
};

/// Polynomial in z and conj(z) with Gaussian-rational coefficients.
class MixedPolynomial {
 public:
  using TermMap = std::map<MixedMonomial, Coefficient, MixedMonomialGreater>;

  explicit MixedPolynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MixedPolynomial constant(std::size_t num_vars, const Coefficient& c);
  /// f(z) viewed as a mixed polynomial.
  static MixedPolynomial from_holomorphic(const Polynomial& f);
  /// conj(f(z)): coefficients conjugated, exponents moved to conj(z).
  static MixedPolynomial conjugate_of(const Polynomial& f);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const MixedMonomial& m, const Coefficient& c);
  Coefficient coefficient(const MixedMonomial& m) const;

  MixedPolynomial& operator+=(const MixedPolynomial& other);
  MixedPolynomial& operator-=(const MixedPolynomial& other);
  MixedPolynomial scaled(const Coefficient& c) const;
  friend MixedPolynomial operator+(MixedPolynomial a, const MixedPolynomial& b) { return a += b; }
  friend MixedPolynomial operator-(MixedPolynomial a, const MixedPolynomial& b) { return a -= b; }
  friend MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b);
  MixedPolynomial operator-() const { return scaled(Coefficient(-1)); }
  MixedPolynomial pow(unsigned exponent) const;

  /// Complex conjugate: swaps holo/anti exponents and conjugates coefficients.
  MixedPolynomial conj() const;
  /// Coefficient at (a, b) is the conjugate of the coefficient at (b, a).
  bool is_real() const;
  /// Some term is purely holomorphic or purely antiholomorphic.
  bool has_pluriharmonic_terms() const;
  std::set<std::size_t> variables() const;

  friend bool operator==(const MixedPolynomial& a, const MixedPolynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_ring(const MixedPolynomial& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

MixedPolynomial partial_holo(const MixedPolynomial& p, std::size_t var);
MixedPolynomial partial_anti(const MixedPolynomial& p, std::size_t var);

/// Coordinate change z~_t = z_t + h applied to both z_t and conj(z_t).
MixedPolynomial substitute(const MixedPolynomial& p, const SubstitutionStep& step);
MixedPolynomial substitute(const MixedPolynomial& p, const Substitution& s);

/// Sum of f * conj(f) over the generators. Throws InvalidInputError when a
/// generator has a constant term.
MixedPolynomial expand_sos(std::span<const Polynomial> gens);

/// Weighted length of holo plus weighted length of anti.
Rational weighted_length(const MixedMonomial& m, const Weight& w);

/// Terms whose weighted length is exactly 1.
MixedPolynomial leading_mixed(const MixedPolynomial& p, const Weight& w);

/// (1 - sum_{i in L} (a_i + b_i) mu_i) / (sum_{i not in L} (a_i + b_i)), or
/// nullopt when the numerator is <= 0 or the denominator vanishes.
std::optional<Rational> w_value_mixed(const MixedMonomial& m,
                                      const std::set<std::size_t>& leading_vars, const Weight& w);

enum class MonomialClass { Gamma1, Gamma2, Gamma3 };

/// Gamma1: only non-leading variables; Gamma2: both kinds; Gamma3: only
/// leading variables. Throws InvalidInputError on the constant monomial.
MonomialClass classify_monomial(const MixedMonomial& m, const std::set<std::size_t>& leading_vars);
MonomialClass classify_monomial(const MultiIndex& m, const std::set<std::size_t>& leading_vars);

}  // namespace multitype
