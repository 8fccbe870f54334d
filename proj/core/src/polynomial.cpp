#include "multitype/polynomial.hpp"

#include <stdexcept>

#include "multitype/errors.hpp"

namespace multitype {

Polynomial Polynomial::constant(std::size_t num_vars, const Coefficient& c) {
  Polynomial p(num_vars);
  p.add_term(MultiIndex(num_vars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t var) {
  if (var >= num_vars) throw DimensionError("variable index out of range");
  return monomial(MultiIndex::unit(num_vars, var));
}

Polynomial Polynomial::monomial(const MultiIndex& m, const Coefficient& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const MultiIndex& m, const Coefficient& c) {
  if (m.size() != num_vars_) throw DimensionError("monomial length does not match ring");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coefficient Polynomial::coefficient(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

const Polynomial::TermMap::value_type& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.begin();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_term().second.inverse());
}

bool Polynomial::involves(std::size_t var) const {
  for (const auto& [m, c] : terms_) {
    if (m.involves(var)) return true;
  }
  return false;
}

std::set<std::size_t> Polynomial::variables() const {
  std::set<std::size_t> vars;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (m[i] != 0) vars.insert(i);
    }
  }
  return vars;
}

bool Polynomial::has_constant_term() const {
  return terms_.find(MultiIndex(num_vars_)) != terms_.end();
}

std::uint64_t Polynomial::min_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  // Grevlex stores higher degrees first, so the last term has minimal degree.
  return terms_.rbegin()->first.total_degree();
}

std::uint64_t Polynomial::max_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.begin()->first.total_degree();
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (other.num_vars_ != num_vars_) throw DimensionError("polynomials over different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  Polynomial out(num_vars_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, coeff * c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial out(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(num_vars_, Coefficient(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.num_vars()) throw DimensionError("variable index out of range");
  Polynomial out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    MultiIndex d = m;
    d[var] -= 1;
    out.add_term(d, c * Coefficient(Rational(m[var])));
  }
  return out;
}

Polynomial antiderivative(const Polynomial& p, std::size_t var) {
  if (var >= p.num_vars()) throw DimensionError("variable index out of range");
  Polynomial out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    MultiIndex up = m;
    up[var] += 1;
    out.add_term(up, c * Coefficient(make_rational(1, static_cast<long>(up[var]))));
  }
  return out;
}

Polynomial truncate(const Polynomial& p, std::uint64_t degree) {
  Polynomial out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    if (m.total_degree() <= degree) out.add_term(m, c);
  }
  return out;
}

void Substitution::append(const Substitution& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
}

Polynomial substitute(const Polynomial& p, const SubstitutionStep& step) {
  const std::size_t n = p.num_vars();
  if (step.shift.num_vars() != n || step.target >= n) {
    throw DimensionError("substitution step does not match the polynomial ring");
  }
  if (step.shift.involves(step.target)) {
    throw InvalidSubstitutionError("substitution shift involves its target variable");
  }
  if (step.shift.is_zero() || !p.involves(step.target)) return p;

  // z_t -> z_t - shift; powers are cached by exponent.
  const Polynomial replacement = Polynomial::variable(n, step.target) - step.shift;
  std::map<unsigned, Polynomial> powers;
  auto power = [&](unsigned e) -> const Polynomial& {
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, replacement.pow(e)).first;
    return it->second;
  };

  Polynomial out(n);
  for (const auto& [m, c] : p.terms()) {
    if (m[step.target] == 0) {
      out.add_term(m, c);
      continue;
    }
    MultiIndex rest = m;
    rest[step.target] = 0;
    const Polynomial& pw = power(m[step.target]);
    for (const auto& [mp, cp] : pw.terms()) out.add_term(rest + mp, c * cp);
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const Substitution& s) {
  Polynomial out = p;
  for (const auto& step : s.steps()) out = substitute(out, step);
  return out;
}

std::vector<Polynomial> substitute(std::span<const Polynomial> gens, const Substitution& s) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(substitute(g, s));
  return out;
}

std::uint64_t vanishing_order(std::span<const Polynomial> gens) {
  bool any = false;
  std::uint64_t order = 0;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.has_constant_term()) {
      throw InvalidInputError("generator has a constant term; it must vanish at the origin");
    }
    const auto d = g.min_degree();
    if (!any || d < order) order = d;
    any = true;
  }
  if (!any) throw DegenerateInputError("all generators are zero");
  return order;
}

std::set<std::size_t> variables_of(std::span<const Polynomial> gens) {
  std::set<std::size_t> vars;
  for (const auto& g : gens) vars.merge(g.variables());
  return vars;
}

}  // namespace multitype
