#include <gtest/gtest.h>

#include "generators.hpp"
#include "multitype/errors.hpp"
#include "multitype/io.hpp"
#include "multitype/kolar.hpp"

using namespace multitype;

namespace {

Rational q(long n, long d) { return make_rational(n, d); }

const std::vector<std::string> kNames3{"z1", "z2", "z3"};
const std::vector<std::string> kNames4{"z1", "z2", "z3", "z4"};

std::vector<Polynomial> parse_all(std::initializer_list<const char*> texts,
                                  const std::vector<std::string>& names) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, names));
  return out;
}

Weight W(std::initializer_list<std::pair<long, long>> entries) {
  std::vector<Rational> v;
  for (auto [n, d] : entries) v.push_back(q(n, d));
  return Weight(v);
}

std::vector<Polynomial> three_variable_ideal() { return parse_all({"z1 - z2 + z3^2", "z1^2 - z2^2"}, kNames3); }

std::vector<Polynomial> four_variable_ideal() {
  return parse_all({"(z1 + z2 z4)^2 + z2^4", "(z1 + z2 z3^2)^2", "z2^9", "z3^10", "z4^12"}, kNames4);
}

std::vector<Rational> R(std::initializer_list<std::pair<long, long>> entries) {
  std::vector<Rational> v;
  for (auto [n, d] : entries) v.push_back(q(n, d));
  return v;
}

}  // namespace

TEST(BloomGraham, Examples) {
  const auto a = bloom_graham(three_variable_ideal());
  EXPECT_EQ(a.type, 2u);
  EXPECT_EQ(a.initial_weight, Weight::uniform(3, q(1, 2)));
  const auto b = bloom_graham(four_variable_ideal());
  EXPECT_EQ(b.type, 4u);
  EXPECT_EQ(b.initial_weight, Weight::uniform(4, q(1, 4)));
  const auto c = bloom_graham(parse_all({"z1^3"}, {"z1"}));
  EXPECT_EQ(c.type, 6u);
  EXPECT_EQ(c.initial_weight, Weight::uniform(1, q(1, 6)));
}

TEST(LeadingIdeal, Examples) {
  EXPECT_EQ(leading_ideal(three_variable_ideal(), Weight::uniform(3, q(1, 2))), parse_all({"z1 - z2"}, kNames3));

  const auto third = parse_all({"z1", "z1^2 + 2 z1 z3^2 + z3^4 + 2 z1 z2 - 2 z2 z3^2"}, kNames3);
  EXPECT_EQ(leading_ideal(third, W({{1, 2}, {1, 6}, {1, 6}})), parse_all({"z1", "-2 z2 z3^2"}, kNames3));

  EXPECT_TRUE(leading_ideal(parse_all({"z2^3"}, {"z1", "z2"}), Weight::uniform(2, q(1, 2))).empty());
}

TEST(ThetaAndWmax, Examples) {
  const auto first = parse_all({"z1 + z3^2", "z1^2 + 2 z1 z2"}, kNames3);
  const auto a = theta_and_wmax(first, {0}, Weight::uniform(3, q(1, 2)));
  EXPECT_EQ(a.w_max, q(1, 4));
  EXPECT_EQ(a.theta, (std::vector<MultiIndex>{{0, 0, 2}}));

  const auto fourth = parse_all(
      {"z1^2 + z2^4", "(z1 - z2 z4)^2", "z2^9", "z3^10", "(z4 + z3^2)^12"}, kNames4);
  const auto b = theta_and_wmax(fourth, {0, 1, 3}, W({{1, 4}, {1, 8}, {1, 16}, {1, 8}}));
  EXPECT_EQ(b.w_max, q(1, 20));

  const auto c = theta_and_wmax(parse_all({"z1"}, {"z1"}), {0}, Weight::uniform(1, q(1, 2)));
  EXPECT_TRUE(c.theta.empty());
  EXPECT_FALSE(c.w_max);
}

TEST(AdvanceWeight, Examples) {
  EXPECT_EQ(advance_weight(Weight::uniform(3, q(1, 2)), {0}, q(1, 4)), W({{1, 2}, {1, 4}, {1, 4}}));
  EXPECT_EQ(advance_weight(W({{1, 4}, {1, 8}, {1, 16}, {1, 8}}), {0, 1, 3}, q(1, 20)),
            W({{1, 4}, {1, 8}, {1, 20}, {1, 8}}));
  const Weight w = W({{1, 2}, {1, 4}});
  EXPECT_EQ(advance_weight(w, {0, 1}, q(1, 8)), w);
  EXPECT_THROW(advance_weight(w, {0}, 0), InvalidAdvancementError);
}

TEST(Run, WorkedExampleThreeVariables) {
  const auto r = run(three_variable_ideal());
  EXPECT_EQ(r.multitype.entries, (std::vector<Rational>{2, 6, 6}));
  EXPECT_EQ(r.final_weight.sorted(), R({{1, 2}, {1, 6}, {1, 6}}));
  EXPECT_EQ(r.model_ideal, parse_all({"z1", "z2 z3^2"}, kNames3));
  ASSERT_EQ(r.traces.size(), 3u);
  EXPECT_EQ(r.traces[0].d, 2u);
  EXPECT_EQ(r.traces[1].d, 2u);
  EXPECT_EQ(r.traces[2].d, 0u);
  EXPECT_EQ(r.traces[0].w_max, q(1, 4));
  EXPECT_EQ(r.traces[1].w_max, q(1, 6));
  EXPECT_FALSE(r.traces[2].w_max);
  EXPECT_EQ(r.final_weight, r.traces.back().weight);
  EXPECT_EQ(r.model_ideal, r.traces.back().leading_ideal);
  EXPECT_EQ(r.multitype, multitype_of(r.final_weight));
}

TEST(Run, WorkedExampleFourVariables) {
  const auto r = run(four_variable_ideal());
  ASSERT_EQ(r.traces.size(), 4u);
  EXPECT_EQ(r.traces[0].weight.sorted(), R({{1, 4}, {1, 4}, {1, 4}, {1, 4}}));
  EXPECT_EQ(r.traces[1].weight.sorted(), R({{1, 4}, {1, 8}, {1, 8}, {1, 8}}));
  EXPECT_EQ(r.traces[2].weight.sorted(), R({{1, 4}, {1, 8}, {1, 8}, {1, 16}}));
  EXPECT_EQ(r.traces[3].weight.sorted(), R({{1, 4}, {1, 8}, {1, 8}, {1, 20}}));
  EXPECT_EQ(r.traces[2].w_max, q(1, 20));
  EXPECT_EQ(r.multitype.entries, (std::vector<Rational>{4, 8, 8, 20}));
}

TEST(Run, NoChangeOfVariablesNeeded) {
  const auto r = run(parse_all({"z1", "z2^2"}, {"z1", "z2"}));
  EXPECT_EQ(r.multitype.entries, (std::vector<Rational>{2, 4}));
  EXPECT_TRUE(r.total_substitution.empty());
}

TEST(Run, Errors) {
  EXPECT_THROW(run(parse_all({"z1"}, {"z1", "z2"})), InfiniteTypeError);
  EXPECT_THROW(run(parse_all({"z1", "z1^2"}, {"z1", "z2"})), InfiniteTypeError);
  // z1 + z2^2 + z1^4 is itself a coordinate, so z2 only reappears at ever higher order.
  RunConfig capped;
  capped.max_steps = 8;
  EXPECT_THROW(run(parse_all({"z1 + z2^2 + z1^4"}, {"z1", "z2"}), capped), NonterminationError);
  EXPECT_THROW(run(parse_all({"z1 + 1"}, {"z1"})), InvalidInputError);
  RunConfig tight;
  tight.max_steps = 2;
  EXPECT_THROW(run(three_variable_ideal(), tight), NonterminationError);
}

TEST(Run, TruncationOrder) {
  RunConfig config;
  config.truncation_order = 2;
  // Truncated at 2 the ideal is (z1, z1 z2); at 5 it contains z2^6.
  EXPECT_THROW(run(parse_all({"z1 + z2^5", "z1 z2"}, {"z1", "z2"}), config), InfiniteTypeError);
  config.truncation_order = 5;
  EXPECT_EQ(run(parse_all({"z1 + z2^5", "z1 z2"}, {"z1", "z2"}), config).multitype.entries,
            (std::vector<Rational>{2, 12}));
}

class KolarProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(KolarProperties, TraceInvariants) {
  testsupport::Gen g(GetParam());
  int finite = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
    const auto gens = g.ideal(n, static_cast<std::size_t>(g.uniform(static_cast<int>(n), 3)), 4);
    MultitypeReport r;
    try {
      r = run(gens);
    } catch (const InfiniteTypeError&) {
      continue;
    } catch (const NonterminationError&) {
      continue;
    }
    ++finite;
    for (std::size_t s = 0; s < r.traces.size(); ++s) {
      const auto& t = r.traces[s];
      EXPECT_TRUE(validate_weight(t.weight)) << validate_weight(t.weight).diagnostic;
      EXPECT_TRUE(leading_terms_have_half_length(t.leading_ideal, t.weight));
      if (s > 0) EXPECT_EQ(lex_compare(r.traces[s - 1].weight, t.weight), std::strong_ordering::greater);
    }
    EXPECT_EQ(r.traces.back().d, 0u);
    EXPECT_EQ(variables_of(r.model_ideal).size(), n);
  }
  EXPECT_GT(finite, 10);
}

INSTANTIATE_TEST_SUITE_P(Seeds, KolarProperties, ::testing::Values(4u, 21u, 314u));
