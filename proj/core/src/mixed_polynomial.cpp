#include "multitype/mixed_polynomial.hpp"

#include "multitype/errors.hpp"

namespace multitype {

namespace {

MixedMonomial constant_monomial(std::size_t n) { return {MultiIndex(n), MultiIndex(n)}; }

MixedMonomial operator+(const MixedMonomial& a, const MixedMonomial& b) {
  return {a.holo + b.holo, a.anti + b.anti};
}

}  // namespace

bool MixedMonomialGreater::operator()(const MixedMonomial& a, const MixedMonomial& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da > db;
  const GrevlexGreater g;
  if (a.holo != b.holo) return g(a.holo, b.holo);
  return g(a.anti, b.anti);
}

MixedPolynomial MixedPolynomial::constant(std::size_t num_vars, const Coefficient& c) {
  MixedPolynomial p(num_vars);
  p.add_term(constant_monomial(num_vars), c);
  return p;
}

MixedPolynomial MixedPolynomial::from_holomorphic(const Polynomial& f) {
  const std::size_t n = f.num_vars();
  MixedPolynomial p(n);
  for (const auto& [m, c] : f.terms()) p.add_term({m, MultiIndex(n)}, c);
  return p;
}

MixedPolynomial MixedPolynomial::conjugate_of(const Polynomial& f) {
  const std::size_t n = f.num_vars();
  MixedPolynomial p(n);
  for (const auto& [m, c] : f.terms()) p.add_term({MultiIndex(n), m}, c.conj());
  return p;
}

void MixedPolynomial::add_term(const MixedMonomial& m, const Coefficient& c) {
  if (m.holo.size() != num_vars_ || m.anti.size() != num_vars_) {
    throw DimensionError("mixed monomial length does not match ring");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coefficient MixedPolynomial::coefficient(const MixedMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

void MixedPolynomial::check_same_ring(const MixedPolynomial& other) const {
  if (other.num_vars_ != num_vars_) throw DimensionError("mixed polynomials over different rings");
}

MixedPolynomial& MixedPolynomial::operator+=(const MixedPolynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MixedPolynomial& MixedPolynomial::operator-=(const MixedPolynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MixedPolynomial MixedPolynomial::scaled(const Coefficient& c) const {
  MixedPolynomial out(num_vars_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, coeff * c);
  return out;
}

MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b) {
  a.check_same_ring(b);
  MixedPolynomial out(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  }
  return out;
}

MixedPolynomial MixedPolynomial::pow(unsigned exponent) const {
  MixedPolynomial result = constant(num_vars_, Coefficient(1));
  MixedPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MixedPolynomial MixedPolynomial::conj() const {
  MixedPolynomial out(num_vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.swapped(), c.conj());
  return out;
}

bool MixedPolynomial::is_real() const { return conj() == *this; }

bool MixedPolynomial::has_pluriharmonic_terms() const {
  for (const auto& [m, c] : terms_) {
    if (m.holo.is_constant() || m.anti.is_constant()) return true;
  }
  return false;
}

std::set<std::size_t> MixedPolynomial::variables() const {
  std::set<std::size_t> vars;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (m.holo[i] != 0 || m.anti[i] != 0) vars.insert(i);
    }
  }
  return vars;
}

MixedPolynomial partial_holo(const MixedPolynomial& p, std::size_t var) {
  if (var >= p.num_vars()) throw DimensionError("variable index out of range");
  MixedPolynomial out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    if (m.holo[var] == 0) continue;
    MixedMonomial d = m;
    d.holo[var] -= 1;
    out.add_term(d, c * Coefficient(Rational(m.holo[var])));
  }
  return out;
}

MixedPolynomial partial_anti(const MixedPolynomial& p, std::size_t var) {
  if (var >= p.num_vars()) throw DimensionError("variable index out of range");
  MixedPolynomial out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    if (m.anti[var] == 0) continue;
    MixedMonomial d = m;
    d.anti[var] -= 1;
    out.add_term(d, c * Coefficient(Rational(m.anti[var])));
  }
  return out;
}

MixedPolynomial substitute(const MixedPolynomial& p, const SubstitutionStep& step) {
  const std::size_t n = p.num_vars();
  if (step.shift.num_vars() != n || step.target >= n) {
    throw DimensionError("substitution step does not match the polynomial ring");
  }
  if (step.shift.involves(step.target)) {
    throw InvalidSubstitutionError("substitution shift involves its target variable");
  }
  if (step.shift.is_zero()) return p;

  const Polynomial replacement = Polynomial::variable(n, step.target) - step.shift;
  const MixedPolynomial holo = MixedPolynomial::from_holomorphic(replacement);
  const MixedPolynomial anti = MixedPolynomial::conjugate_of(replacement);
  std::map<unsigned, MixedPolynomial> holo_powers;
  std::map<unsigned, MixedPolynomial> anti_powers;
  auto power = [](std::map<unsigned, MixedPolynomial>& cache, const MixedPolynomial& base,
                  unsigned e) -> const MixedPolynomial& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, base.pow(e)).first;
    return it->second;
  };

  MixedPolynomial out(n);
  for (const auto& [m, c] : p.terms()) {
    const unsigned a = m.holo[step.target];
    const unsigned b = m.anti[step.target];
    if (a == 0 && b == 0) {
      out.add_term(m, c);
      continue;
    }
    MixedMonomial rest = m;
    rest.holo[step.target] = 0;
    rest.anti[step.target] = 0;
    MixedPolynomial factor = power(holo_powers, holo, a) * power(anti_powers, anti, b);
    for (const auto& [mf, cf] : factor.terms()) out.add_term(rest + mf, c * cf);
  }
  return out;
}

MixedPolynomial substitute(const MixedPolynomial& p, const Substitution& s) {
  MixedPolynomial out = p;
  for (const auto& step : s.steps()) out = substitute(out, step);
  return out;
}

MixedPolynomial expand_sos(std::span<const Polynomial> gens) {
  if (gens.empty()) return MixedPolynomial();
  MixedPolynomial out(gens.front().num_vars());
  for (const auto& f : gens) {
    if (f.has_constant_term()) {
      throw InvalidInputError("generator has a constant term; it must vanish at the origin");
    }
    out += MixedPolynomial::from_holomorphic(f) * MixedPolynomial::conjugate_of(f);
  }
  return out;
}

Rational weighted_length(const MixedMonomial& m, const Weight& w) {
  return weighted_length(m.holo, w) + weighted_length(m.anti, w);
}

MixedPolynomial leading_mixed(const MixedPolynomial& p, const Weight& w) {
  MixedPolynomial out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    if (weighted_length(m, w) == 1) out.add_term(m, c);
  }
  return out;
}

std::optional<Rational> w_value_mixed(const MixedMonomial& m,
                                      const std::set<std::size_t>& leading_vars, const Weight& w) {
  if (m.holo.size() != w.size() || m.anti.size() != w.size()) {
    throw DimensionError("mixed monomial and weight lengths differ");
  }
  Rational numerator = 1;
  Rational denominator = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const unsigned e = m.holo[i] + m.anti[i];
    if (e == 0) continue;
    if (leading_vars.count(i) != 0) {
      numerator -= w[i] * e;
    } else {
      denominator += e;
    }
  }
  if (sgn(numerator) <= 0 || sgn(denominator) == 0) return std::nullopt;
  return Rational(numerator / denominator);
}

MonomialClass classify_monomial(const MixedMonomial& m, const std::set<std::size_t>& leading_vars) {
  return classify_monomial(m.holo + m.anti, leading_vars);
}

MonomialClass classify_monomial(const MultiIndex& m, const std::set<std::size_t>& leading_vars) {
  bool leading = false;
  bool other = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    (leading_vars.count(i) != 0 ? leading : other) = true;
  }
  if (!leading && !other) throw InvalidInputError("constant monomial has no class");
  if (leading && other) return MonomialClass::Gamma2;
  return leading ? MonomialClass::Gamma3 : MonomialClass::Gamma1;
}

}  // namespace multitype
