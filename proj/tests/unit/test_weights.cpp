#include <gtest/gtest.h>

#include "generators.hpp"
#include "multitype/errors.hpp"
#include "multitype/io.hpp"
#include "multitype/weight.hpp"

using namespace multitype;

namespace {

Rational q(long n, long d) { return make_rational(n, d); }

Weight W(std::initializer_list<std::pair<long, long>> entries) {
  std::vector<Rational> v;
  for (auto [n, d] : entries) v.push_back(q(n, d));
  return Weight(v);
}

}  // namespace

TEST(Weight, RejectsOutOfRangeEntries) {
  EXPECT_THROW(W({{2, 3}}), InvalidInputError);
  EXPECT_THROW(W({{-1, 4}}), InvalidInputError);
  EXPECT_NO_THROW(W({{1, 2}, {0, 1}}));
}

TEST(Weight, SortedViewIsNonincreasing) {
  const Weight w = W({{1, 4}, {1, 8}, {1, 20}, {1, 8}});
  EXPECT_EQ(w.sorted(), (std::vector<Rational>{q(1, 4), q(1, 8), q(1, 8), q(1, 20)}));
}

TEST(ValidateWeight, WorkedExamples) {
  EXPECT_TRUE(validate_weight(W({{1, 2}, {1, 6}, {1, 6}})));
  EXPECT_TRUE(validate_weight(W({{1, 4}, {1, 8}, {1, 8}, {1, 20}})));
  const std::vector<Rational> unsorted{q(1, 3), q(1, 2)};
  const auto check = validate_weight_tuple(unsorted);
  EXPECT_FALSE(check);
  EXPECT_NE(check.diagnostic.find("nonincreasing"), std::string::npos);
}

TEST(ValidateWeight, IntegerCombinationCondition) {
  // No multiple of 2/5 equals 1.
  const std::vector<Rational> lone{q(2, 5)};
  EXPECT_FALSE(validate_weight_tuple(lone));
  // 3 * 1/3 = 1 and 1/3 + 4 * 1/6 = 1.
  const std::vector<Rational> paired{q(1, 3), q(1, 6)};
  EXPECT_TRUE(validate_weight_tuple(paired));
  // 3/10 with 1/2 before it: 1/2 + a*3/10 never equals 1, 3/10 alone neither.
  const std::vector<Rational> bad{q(1, 2), q(3, 10)};
  EXPECT_FALSE(validate_weight_tuple(bad));
}

TEST(LexCompare, WorkedExamples) {
  EXPECT_EQ(lex_compare(W({{1, 2}, {1, 4}, {1, 4}}), W({{1, 2}, {1, 6}, {1, 6}})),
            std::strong_ordering::greater);
  EXPECT_EQ(lex_compare(W({{1, 4}, {1, 4}, {1, 4}, {1, 4}}), W({{1, 4}, {1, 8}, {1, 8}, {1, 8}})),
            std::strong_ordering::greater);
  const Weight w = W({{1, 2}, {1, 6}, {1, 6}});
  EXPECT_EQ(lex_compare(w, w), std::strong_ordering::equal);
  EXPECT_THROW(lex_compare(W({{1, 2}}), w), DimensionError);
}

TEST(WeightedLength, WorkedExamples) {
  EXPECT_EQ(weighted_length(MultiIndex{0, 1, 2}, W({{1, 2}, {1, 6}, {1, 6}})), q(1, 2));
  // 1/8 + 1/8
  EXPECT_EQ(weighted_length(MultiIndex{0, 1, 0, 1}, W({{1, 4}, {1, 8}, {1, 8}, {1, 8}})), q(1, 4));
  EXPECT_EQ(weighted_length(MultiIndex(3), W({{1, 2}, {1, 6}, {1, 6}})), 0);
  EXPECT_THROW(weighted_length(MultiIndex{1, 0}, W({{1, 2}, {1, 6}, {1, 6}})), DimensionError);
}

TEST(MultitypeOf, WorkedExamples) {
  EXPECT_EQ(multitype_of(W({{1, 2}, {1, 6}, {1, 6}})).entries, (std::vector<Rational>{2, 6, 6}));
  EXPECT_EQ(multitype_of(W({{1, 4}, {1, 8}, {1, 20}, {1, 8}})).entries,
            (std::vector<Rational>{4, 8, 8, 20}));
  EXPECT_EQ(multitype_of(W({{1, 2}})).entries, (std::vector<Rational>{2}));
  EXPECT_THROW(multitype_of(W({{1, 2}, {0, 1}})), InfiniteTypeError);
}

TEST(HomogeneousSubstitution, WorkedExamples) {
  const std::vector<std::string> names{"z1", "z2", "z3", "z4"};
  Substitution a;
  a.append({0, parse_polynomial("z2 z4", names)});
  EXPECT_TRUE(check_homogeneous_substitution(a, W({{1, 4}, {1, 8}, {1, 8}, {1, 8}})));

  Substitution b;
  b.append({3, parse_polynomial("-z3^2", names)});
  EXPECT_TRUE(check_homogeneous_substitution(b, W({{1, 4}, {1, 8}, {1, 16}, {1, 8}})));

  Substitution c;
  c.append({0, parse_polynomial("z2", {"z1", "z2"})});
  EXPECT_FALSE(check_homogeneous_substitution(c, W({{1, 2}, {1, 4}})));
}

namespace {

Weight random_weight(testsupport::Gen& g, std::size_t n) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(q(1, g.uniform(2, 12)));
  return Weight(v);
}

}  // namespace

class WeightProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(WeightProperties, LexCompareIsTotalOrder) {
  testsupport::Gen g(GetParam());
  for (int trial = 0; trial < 200; ++trial) {
    const Weight a = random_weight(g, 3);
    const Weight b = random_weight(g, 3);
    const Weight c = random_weight(g, 3);
    const auto ab = lex_compare(a, b);
    const auto ba = lex_compare(b, a);
    EXPECT_EQ(ab == std::strong_ordering::less, ba == std::strong_ordering::greater);
    EXPECT_EQ(ab == std::strong_ordering::equal, a.sorted() == b.sorted());
    if (ab == std::strong_ordering::less && lex_compare(b, c) == std::strong_ordering::less) {
      EXPECT_EQ(lex_compare(a, c), std::strong_ordering::less);
    }
  }
}

TEST_P(WeightProperties, WeightedLengthIsAdditive) {
  testsupport::Gen g(GetParam());
  for (int trial = 0; trial < 200; ++trial) {
    const Weight w = random_weight(g, 4);
    const auto a = g.monomial(4, 0, 6);
    const auto b = g.monomial(4, 0, 6);
    EXPECT_EQ(weighted_length(a + b, w), weighted_length(a, w) + weighted_length(b, w));
    EXPECT_EQ(weighted_length(a, w), testsupport::direct_length(a, w.per_variable()));
  }
}

TEST_P(WeightProperties, HomogeneousSubstitutionPreservesHomogeneity) {
  testsupport::Gen g(GetParam());
  const Weight w = W({{1, 4}, {1, 8}, {1, 8}, {1, 16}});
  // Monomials of each weighted length up to 1, enumerated by brute force.
  std::map<Rational, std::vector<MultiIndex>> by_length;
  for (unsigned a = 0; a <= 4; ++a) {
    for (unsigned b = 0; b <= 8; ++b) {
      for (unsigned c = 0; c <= 8; ++c) {
        for (unsigned d = 0; d <= 16; ++d) {
          MultiIndex m{a, b, c, d};
          const Rational len = weighted_length(m, w);
          if (len <= 1) by_length[len].push_back(m);
        }
      }
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    const auto target = static_cast<std::size_t>(g.uniform(0, 3));
    Polynomial shift(4);
    for (const auto& m : by_length[w[target]]) {
      if (m[target] == 0 && g.coin()) shift.add_term(m, Coefficient(g.nonzero(3)));
    }
    Substitution s;
    s.append({target, shift});
    ASSERT_TRUE(check_homogeneous_substitution(s, w));

    const Rational degree = q(1, 2);
    Polynomial p(4);
    const auto& pool = by_length[degree];
    for (int t = 0; t < 4; ++t) {
      p.add_term(pool[static_cast<std::size_t>(g.uniform(0, static_cast<int>(pool.size()) - 1))],
                 Coefficient(g.nonzero(3)));
    }
    EXPECT_TRUE(is_homogeneous(substitute(p, s), w, degree));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, WeightProperties, ::testing::Values(3u, 11u, 99u));
