#include "multitype/kolar.hpp"

#include <algorithm>
#include <stdexcept>

#include "multitype/errors.hpp"
#include "multitype/row_reduce.hpp"

namespace multitype {

namespace {

const Rational kHalf = make_rational(1, 2);

std::vector<Polynomial> monic_all(std::span<const Polynomial> gens) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.monic());
  return out;
}

std::vector<Polynomial> prepared(std::span<const Polynomial> gens, const RunConfig& config) {
  if (gens.empty()) throw DegenerateInputError("no generators");
  if (config.max_steps == 0) throw InvalidInputError("max_steps must be at least 1");
  std::vector<Polynomial> out(gens.begin(), gens.end());
  if (config.truncation_order) {
    if (*config.truncation_order == 0) throw InvalidInputError("truncation order must be at least 1");
    for (auto& g : out) g = truncate(g, *config.truncation_order);
  }
  return out;
}

}  // namespace

BloomGraham bloom_graham(std::span<const Polynomial> gens) {
  const auto order = vanishing_order(gens);
  const auto type = static_cast<unsigned>(2 * order);
  return {type, Weight::uniform(gens.front().num_vars(), make_rational(1, type))};
}

std::vector<Polynomial> leading_ideal(std::span<const Polynomial> gens, const Weight& w) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial part(g.num_vars());
    for (const auto& [m, c] : g.terms()) {
      if (weighted_length(m, w) == kHalf) part.add_term(m, c);
    }
    if (!part.is_zero()) out.push_back(std::move(part));
  }
  return out;
}

ThetaResult theta_and_wmax(std::span<const Polynomial> gens, const std::set<std::size_t>& leading_vars,
                           const Weight& w) {
  std::set<MultiIndex> seen;
  ThetaResult result;
  for (const auto& g : gens) {
    for (const auto& [m, c] : g.terms()) {
      if (weighted_length(m, w) == kHalf) continue;
      Rational prefix = 0;
      unsigned long rest = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (leading_vars.count(i) != 0) {
          prefix += w[i] * m[i];
        } else {
          rest += m[i];
        }
      }
      if (prefix >= kHalf || rest == 0) continue;
      if (!seen.insert(m).second) continue;
      result.theta.push_back(m);
      Rational value = (kHalf - prefix) / rest;
      if (!result.w_max || value > *result.w_max) result.w_max = value;
    }
  }
  return result;
}

Weight advance_weight(const Weight& w, const std::set<std::size_t>& leading_vars,
                      const Rational& w_max) {
  if (sgn(w_max) <= 0) throw InvalidAdvancementError("next weight entry must be positive");
  std::vector<Rational> next = w.per_variable();
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (leading_vars.count(i) == 0) next[i] = w_max;
  }
  return Weight(std::move(next));
}

bool leading_terms_have_half_length(std::span<const Polynomial> leading, const Weight& w) {
  for (const auto& g : leading) {
    if (!is_homogeneous(g, w, kHalf)) return false;
  }
  return true;
}

MultitypeReport run(std::span<const Polynomial> input, const RunConfig& config) {
  std::vector<Polynomial> gens = prepared(input, config);
  const std::size_t n = gens.front().num_vars();

  MultitypeReport report;
  const BloomGraham bg = bloom_graham(gens);
  report.bloom_graham_type = bg.type;
  Weight w = bg.initial_weight;

  EliminationOptions options;
  options.strategy = config.strategy;
  options.audit_fast_path = config.audit_fast_path;

  std::set<std::size_t> finalized;
  for (std::size_t step = 1;; ++step) {
    if (step > config.max_steps) {
      throw NonterminationError("no terminal weight within " + std::to_string(config.max_steps) +
                                " steps");
    }
    const std::vector<Polynomial> lead = leading_ideal(gens, w);
    EliminationResult elim = eliminate_all(lead, w, options);
    gens = substitute(gens, elim.substitution);
    for (auto& msg : elim.warnings) report.warnings.push_back("step " + std::to_string(step) + ": " + msg);

    const std::vector<Polynomial> new_lead = leading_ideal(gens, w);
    if (new_lead != elim.generators) {
      throw std::logic_error("leading ideal does not commute with the change of variables");
    }
    if (!leading_terms_have_half_length(new_lead, w)) {
      throw std::logic_error("leading ideal term with weighted length other than 1/2");
    }

    const std::set<std::size_t> lead_vars = variables_of(new_lead);
    if (!std::includes(lead_vars.begin(), lead_vars.end(), finalized.begin(), finalized.end())) {
      report.warnings.push_back("step " + std::to_string(step) +
                                ": a finalized variable left the leading ideal");
    }
    std::set<std::size_t> leading_vars = finalized;
    leading_vars.insert(lead_vars.begin(), lead_vars.end());

    StepTrace trace;
    trace.step = step;
    trace.weight = w;
    trace.leading_ideal = monic_all(new_lead);
    trace.substitution = elim.substitution;
    trace.d = n - lead_vars.size();
    trace.leading_vars = leading_vars;
    trace.fast_path = elim.fast_path;
    trace.fast_path_violation = elim.fast_path_violation;
    report.total_substitution.append(elim.substitution);

    if (leading_vars.size() == n) {
      report.traces.push_back(std::move(trace));
      break;
    }
    const ThetaResult theta = theta_and_wmax(gens, leading_vars, w);
    trace.theta_size = theta.theta.size();
    trace.w_max = theta.w_max;
    report.traces.push_back(std::move(trace));
    if (!theta.w_max) {
      throw InfiniteTypeError("no admissible monomial involves the remaining variables; "
                              "the multitype is infinite");
    }
    w = advance_weight(w, leading_vars, *theta.w_max);
    finalized = std::move(leading_vars);
  }

  report.final_weight = w;
  report.multitype = multitype_of(w);
  report.model_ideal = report.traces.back().leading_ideal;
  return report;
}

}  // namespace multitype
