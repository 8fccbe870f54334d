#include "multitype/mixed_kolar.hpp"

#include "multitype/errors.hpp"
#include "multitype/row_reduce.hpp"

namespace multitype {

MixedRunResult run_mixed_kolar(std::span<const Polynomial> input, const RunConfig& config) {
  if (input.empty()) throw DegenerateInputError("no generators");
  if (config.max_steps == 0) throw InvalidInputError("max_steps must be at least 1");
  std::vector<Polynomial> gens(input.begin(), input.end());
  if (config.truncation_order) {
    for (auto& g : gens) g = truncate(g, *config.truncation_order);
  }
  const std::size_t n = gens.front().num_vars();

  MixedPolynomial p = expand_sos(gens);
  if (p.is_zero()) throw DegenerateInputError("all generators are zero");
  std::uint64_t lowest = p.terms().begin()->first.total_degree();
  for (const auto& [m, c] : p.terms()) lowest = std::min(lowest, m.total_degree());

  MixedRunResult result;
  MultitypeReport& report = result.report;
  report.bloom_graham_type = static_cast<unsigned>(lowest);
  Weight w = Weight::uniform(n, make_rational(1, static_cast<long>(lowest)));

  EliminationOptions options;
  options.strategy = config.strategy;

  std::set<std::size_t> finalized;
  for (std::size_t step = 1;; ++step) {
    if (step > config.max_steps) {
      throw NonterminationError("no terminal weight within " + std::to_string(config.max_steps) +
                                " steps");
    }
    const EliminationResult elim = eliminate_all(leading_ideal(gens, w), w, options);
    gens = substitute(gens, elim.substitution);
    p = substitute(p, elim.substitution);

    MixedPolynomial lead = leading_mixed(p, w);
    const std::set<std::size_t> lead_vars = lead.variables();
    std::set<std::size_t> leading_vars = finalized;
    leading_vars.insert(lead_vars.begin(), lead_vars.end());

    StepTrace trace;
    trace.step = step;
    trace.weight = w;
    for (const auto& g : elim.generators) trace.leading_ideal.push_back(g.monic());
    trace.substitution = elim.substitution;
    trace.d = n - lead_vars.size();
    trace.leading_vars = leading_vars;
    trace.fast_path = elim.fast_path;
    report.total_substitution.append(elim.substitution);
    result.steps.push_back({std::move(lead), elim.generators});

    if (leading_vars.size() == n) {
      report.traces.push_back(std::move(trace));
      break;
    }

    std::optional<Rational> w_max;
    for (const auto& [m, c] : p.terms()) {
      if (weighted_length(m, w) == 1) continue;
      const auto value = w_value_mixed(m, leading_vars, w);
      if (!value) continue;
      ++trace.theta_size;
      if (!w_max || *value > *w_max) w_max = value;
    }
    trace.w_max = w_max;
    report.traces.push_back(std::move(trace));
    if (!w_max) {
      throw InfiniteTypeError("no admissible mixed term involves the remaining variables; "
                              "the multitype is infinite");
    }
    w = advance_weight(w, leading_vars, *w_max);
    finalized = std::move(leading_vars);
  }

  report.final_weight = w;
  report.multitype = multitype_of(w);
  report.model_ideal = report.traces.back().leading_ideal;
  return result;
}

}  // namespace multitype
