#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace testsupport {

int Gen::nonzero(int range) {
  int v = 0;
  while (v == 0) v = uniform(-range, range);
  return v;
}

MultiIndex Gen::monomial_in(std::size_t n, const std::vector<std::size_t>& vars, unsigned min_degree,
                            unsigned max_degree) {
  MultiIndex m(n);
  if (vars.empty()) return m;
  const unsigned degree = static_cast<unsigned>(uniform(static_cast<int>(min_degree), static_cast<int>(max_degree)));
  for (unsigned d = 0; d < degree; ++d) {
    m[vars[static_cast<std::size_t>(uniform(0, static_cast<int>(vars.size()) - 1))]] += 1;
  }
  return m;
}

MultiIndex Gen::monomial(std::size_t n, unsigned min_degree, unsigned max_degree) {
  std::vector<std::size_t> vars(n);
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  return monomial_in(n, vars, min_degree, max_degree);
}

Polynomial Gen::polynomial(std::size_t n, std::size_t terms, unsigned min_degree, unsigned max_degree,
                           int coeff_range) {
  Polynomial p(n);
  for (std::size_t t = 0; t < terms; ++t) {
    p.add_term(monomial(n, min_degree, max_degree), Coefficient(nonzero(coeff_range)));
  }
  return p;
}

Polynomial Gen::complex_polynomial(std::size_t n, std::size_t terms, unsigned min_degree,
                                   unsigned max_degree, int coeff_range) {
  Polynomial p(n);
  for (std::size_t t = 0; t < terms; ++t) {
    Coefficient c(Rational(uniform(-coeff_range, coeff_range)), Rational(uniform(-coeff_range, coeff_range)));
    if (c.is_zero()) c = Coefficient(1);
    p.add_term(monomial(n, min_degree, max_degree), c);
  }
  return p;
}

Polynomial Gen::polynomial_avoiding(std::size_t n, std::size_t avoid, std::size_t terms,
                                    unsigned min_degree, unsigned max_degree) {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != avoid) vars.push_back(v);
  }
  Polynomial p(n);
  for (std::size_t t = 0; t < terms; ++t) {
    p.add_term(monomial_in(n, vars, min_degree, max_degree), Coefficient(nonzero(3)));
  }
  return p;
}

MixedMonomial Gen::mixed_monomial(std::size_t n, unsigned max_degree) {
  return {monomial(n, 0, max_degree), monomial(n, 0, max_degree)};
}

std::vector<Polynomial> Gen::ideal(std::size_t n, std::size_t count, unsigned max_degree,
                                   int pure_power_chance) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < count; ++i) {
    gens.push_back(polynomial(n, static_cast<std::size_t>(uniform(1, 3)), 1, max_degree));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (uniform(1, 100) > pure_power_chance) continue;
    const auto power = static_cast<MultiIndex::Exponent>(uniform(1, static_cast<int>(max_degree)));
    gens[static_cast<std::size_t>(uniform(0, static_cast<int>(count) - 1))].add_term(
        MultiIndex::unit(n, v, power), Coefficient(nonzero(2)));
  }
  for (auto& g : gens) {
    if (g.is_zero()) g = Polynomial::variable(n, static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1)));
  }
  return gens;
}

MixedPolynomial sos_by_terms(const std::vector<Polynomial>& gens) {
  const std::size_t n = gens.front().num_vars();
  MixedPolynomial out(n);
  for (const auto& f : gens) {
    for (const auto& [a, ca] : f.terms()) {
      for (const auto& [b, cb] : f.terms()) out.add_term({a, b}, ca * cb.conj());
    }
  }
  return out;
}

MixedPolynomial leibniz_determinant(const std::vector<std::vector<MixedPolynomial>>& a,
                                    std::size_t num_vars) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  MixedPolynomial total(num_vars);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    MixedPolynomial prod = MixedPolynomial::constant(num_vars, Coefficient(inversions % 2 == 0 ? 1 : -1));
    for (std::size_t i = 0; i < n; ++i) prod = prod * a[i][perm[i]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rational direct_length(const MultiIndex& m, const std::vector<Rational>& weights) {
  Rational total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) total += weights[i] * Rational(m[i]);
  return total;
}

}  // namespace testsupport
