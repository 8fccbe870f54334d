#include "multitype/weight.hpp"

#include <algorithm>
#include <functional>

#include "multitype/errors.hpp"

namespace multitype {

namespace {

const Rational kHalf = make_rational(1, 2);

// Beyond this common denominator the knapsack table is not attempted.
constexpr unsigned long kMaxCommonDenominator = 50'000'000;

}  // namespace

Weight::Weight(std::vector<Rational> per_variable) : per_variable_(std::move(per_variable)) {
  for (const auto& mu : per_variable_) {
    if (sgn(mu) < 0 || mu > kHalf) {
      throw InvalidInputError("weight entry " + to_string(mu) + " outside [0, 1/2]");
    }
  }
}

Weight Weight::uniform(std::size_t n, const Rational& value) {
  return Weight(std::vector<Rational>(n, value));
}

std::vector<Rational> Weight::sorted() const {
  std::vector<Rational> s = per_variable_;
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

WeightCheck validate_weight_tuple(std::span<const Rational> tuple) {
  for (std::size_t t = 0; t < tuple.size(); ++t) {
    if (sgn(tuple[t]) < 0 || tuple[t] > kHalf) {
      return {false, "entry " + std::to_string(t + 1) + " = " + to_string(tuple[t]) +
                         " outside [0, 1/2]"};
    }
    if (t > 0 && tuple[t] > tuple[t - 1]) {
      return {false, "entries " + std::to_string(t) + " and " + std::to_string(t + 1) +
                         " are not nonincreasing"};
    }
  }

  mpz_class common = 1;
  for (const auto& mu : tuple) {
    if (sgn(mu) > 0) common = lcm(common, mpz_class(mu.get_den()));
  }
  if (common > kMaxCommonDenominator) {
    return {false, "common denominator " + common.get_str() + " too large to check"};
  }
  const auto target = common.get_ui();

  // reach[s]: s is a nonnegative integer combination of the scaled entries seen so far.
  std::vector<char> reach(target + 1, 0);
  reach[0] = 1;
  for (std::size_t t = 0; t < tuple.size(); ++t) {
    if (sgn(tuple[t]) == 0) continue;
    mpq_class scaled_q = tuple[t] * common;
    const auto v = mpz_class(scaled_q.get_num()).get_ui();
    for (unsigned long s = v; s <= target; ++s) {
      if (reach[s - v]) reach[s] = 1;
    }
    if (!reach[target - v]) {
      return {false, "entry " + std::to_string(t + 1) + " = " + to_string(tuple[t]) +
                         " admits no integer combination reaching 1"};
    }
  }
  return {};
}

WeightCheck validate_weight(const Weight& w) {
  const auto s = w.sorted();
  return validate_weight_tuple(s);
}

std::strong_ordering lex_compare(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw DimensionError("weights of different lengths");
  const auto sa = a.sorted();
  const auto sb = b.sorted();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const int c = cmp(sa[i], sb[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Rational weighted_length(const MultiIndex& m, const Weight& w) {
  if (m.size() != w.size()) throw DimensionError("multiindex and weight lengths differ");
  Rational total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) total += w[i] * m[i];
  }
  return total;
}

bool is_homogeneous(const Polynomial& p, const Weight& w, const Rational& degree) {
  for (const auto& [m, c] : p.terms()) {
    if (weighted_length(m, w) != degree) return false;
  }
  return true;
}

Multitype multitype_of(const Weight& w) {
  Multitype out;
  for (const auto& mu : w.sorted()) {
    if (sgn(mu) == 0) throw InfiniteTypeError("weight has a zero entry; multitype is infinite");
    out.entries.push_back(1 / mu);
  }
  return out;
}

std::string to_string(std::span<const Rational> tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(tuple[i]);
  }
  return out + ")";
}

std::string to_string(const Multitype& m) { return to_string(std::span<const Rational>(m.entries)); }

bool check_homogeneous_substitution(const Substitution& s, const Weight& w) {
  for (const auto& step : s.steps()) {
    if (step.target >= w.size() || step.shift.num_vars() != w.size()) return false;
    if (!is_homogeneous(step.shift, w, w[step.target])) return false;
  }
  return true;
}

}  // namespace multitype
