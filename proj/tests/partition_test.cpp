#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "printers.hpp"

using namespace symquot;

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Partition, DropsTrailingZerosAndValidates) {
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_EQ(Partition({3, 1}).length(), 2);
  EXPECT_EQ(Partition({3, 1}).size(), 4);
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_EQ(Partition({2})[5], 0);
}

TEST(Partition, TextRoundTrip) {
  EXPECT_EQ(to_string(Partition{}), "[]");
  EXPECT_EQ(to_string(Partition({3, 1})), "[3,1]");
  EXPECT_EQ(parse_partition("[3,1]"), Partition({3, 1}));
  EXPECT_EQ(parse_partition("[]"), Partition{});
  EXPECT_THROW(parse_partition("[3, 1]"), std::invalid_argument);
  EXPECT_THROW(parse_partition("3,1"), std::invalid_argument);
  EXPECT_THROW(parse_partition("[1,3]"), std::invalid_argument);
  EXPECT_EQ(to_string(IntVector{-6, 1, 0}), "(-6,1,0)");
}

TEST(EnumeratePkn, SmallBoxes) {
  const std::vector<Partition> p24 = enumerate_pkn(2, 4);
  const std::vector<Partition> expected = {{}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}};
  EXPECT_EQ(p24, expected);

  const std::vector<Partition> p25 = enumerate_pkn(2, 5);
  const std::vector<Partition> expected25 = {{}, {1}, {2}, {1, 1}, {3}, {2, 1}, {3, 1}, {2, 2}, {3, 2}, {3, 3}};
  EXPECT_EQ(p25, expected25);

  EXPECT_EQ(enumerate_pkn(0, 3), std::vector<Partition>{Partition{}});
  EXPECT_THROW(enumerate_pkn(4, 3), std::invalid_argument);
}

TEST(EnumeratePkn, CountIsBinomialAndOrderIsCanonical) {
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto ps = enumerate_pkn(k, n);
      ASSERT_EQ(static_cast<long long>(ps.size()), binomial(n, k)) << "k=" << k << " n=" << n;
      for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        ASSERT_TRUE(ps[i] < ps[i + 1]);
        ASSERT_TRUE(in_box(ps[i], k, n));
      }
    }
}

TEST(Complement, ExamplesAndInvolution) {
  EXPECT_EQ(complement(Partition{}, 3, 6), Partition({3, 3, 3}));
  EXPECT_EQ(complement(Partition({3, 3, 3}), 3, 6), Partition{});
  EXPECT_EQ(complement(Partition({3, 1}), 3, 6), Partition({3, 2}));
  EXPECT_THROW(complement(Partition({4}), 3, 6), std::domain_error);
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      for (const Partition& nu : enumerate_pkn(k, n)) {
        const Partition c = complement(nu, k, n);
        ASSERT_TRUE(in_box(c, k, n));
        ASSERT_EQ(complement(c, k, n), nu);
        ASSERT_EQ(c.size() + nu.size(), k * (n - k));
      }
}

TEST(Conjugate, ExamplesAndInvolution) {
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
  EXPECT_EQ(conjugate(Partition({5})), Partition({1, 1, 1, 1, 1}));
  for (const Partition& l : oracle::partitions_up_to(9, 9)) {
    ASSERT_EQ(conjugate(conjugate(l)), l);
    ASSERT_EQ(conjugate(l).length(), l[0]);
    ASSERT_EQ(conjugate(l).size(), l.size());
  }
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominates(Partition({2, 1}), Partition({1, 1, 1})));
  EXPECT_TRUE(dominates(Partition({3, 1}), Partition({2, 2})));
  EXPECT_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
  EXPECT_FALSE(dominates(Partition({3}), Partition({1})));
}

TEST(Dominance, IsAPartialOrderOnEachStratum) {
  for (int size = 0; size <= 8; ++size) {
    const auto ps = partitions_of(size, size);
    for (const auto& a : ps) {
      ASSERT_TRUE(dominates(a, a));
      for (const auto& b : ps) {
        if (dominates(a, b) && dominates(b, a)) {
          ASSERT_EQ(a, b);
        }
        // Conjugation reverses dominance.
        ASSERT_EQ(dominates(a, b), dominates(conjugate(b), conjugate(a)));
        for (const auto& c : ps)
          if (dominates(a, b) && dominates(b, c)) {
            ASSERT_TRUE(dominates(a, c));
          }
      }
    }
  }
}

TEST(Orders, SizeAntidominance) {
  EXPECT_EQ(cmp_size_antidominance(Partition({2, 1}), Partition({1})), std::partial_ordering::greater);
  EXPECT_EQ(cmp_size_antidominance(Partition({1, 1, 1}), Partition({2, 1})), std::partial_ordering::greater);
  EXPECT_EQ(cmp_size_antidominance(Partition({3, 1}), Partition({2, 2})), std::partial_ordering::less);
  EXPECT_EQ(cmp_size_antidominance(Partition({3, 1}), Partition({3, 1})), std::partial_ordering::equivalent);
  EXPECT_EQ(cmp_size_antidominance(Partition({4, 1, 1}), Partition({3, 3})), std::partial_ordering::unordered);
}

TEST(Orders, GradedDominance) {
  EXPECT_EQ(cmp_graded_dominance(Partition({2, 1}), Partition({1, 1, 1})), std::partial_ordering::greater);
  EXPECT_EQ(cmp_graded_dominance(Partition({2}), Partition({1})), std::partial_ordering::unordered);
  EXPECT_EQ(cmp_graded_dominance(Partition({2, 1}), Partition({2, 1})), std::partial_ordering::equivalent);
  EXPECT_EQ(cmp_graded_dominance(Partition({1, 1, 1}), Partition({2, 1})), std::partial_ordering::less);
}

TEST(Strips, Horizontal) {
  EXPECT_TRUE(is_horizontal_strip(Partition({3, 1}), Partition({1}), 3));
  EXPECT_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1}), 3));
  EXPECT_TRUE(is_horizontal_strip(Partition({2, 1}), Partition({2, 1}), 0));
  EXPECT_FALSE(is_horizontal_strip(Partition({3, 1}), Partition({1}), 2));
}

TEST(Strips, Vertical) {
  EXPECT_TRUE(is_vertical_strip(Partition({2, 1}), Partition({1}), 2));
  EXPECT_FALSE(is_vertical_strip(Partition({3, 1}), Partition({1}), 3));
  EXPECT_TRUE(is_vertical_strip(Partition({2, 1}), Partition({2, 1}), 0));
}

TEST(Strips, ConjugationSwapsHorizontalAndVertical) {
  const auto ps = oracle::partitions_up_to(7, 7);
  for (const auto& l : ps)
    for (const auto& m : ps) {
      const int j = l.size() - m.size();
      if (j < 0) continue;
      ASSERT_EQ(is_horizontal_strip(l, m, j), is_vertical_strip(conjugate(l), conjugate(m), j));
    }
}

TEST(Strips, ComplementRotatesVerticalStrips) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto ps = enumerate_pkn(k, n);
      for (const auto& mu : ps)
        for (const auto& la : ps) {
          const int i = mu.size() - la.size();
          if (i < 0) continue;
          ASSERT_EQ(is_vertical_strip(mu, la, i), is_vertical_strip(complement(la, k, n), complement(mu, k, n), i));
        }
    }
}

TEST(StraightenVector, Examples) {
  auto r = straighten_vector({0, 2, 1});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->sign, -1);
  EXPECT_EQ(r->partition, Partition({1, 1, 1}));

  EXPECT_FALSE(straighten_vector({-2, 2, 3}).has_value());

  r = straighten_vector({-2, 4, 1});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->sign, 1);
  EXPECT_EQ(r->partition, Partition({3}));

  // beta = alpha + rho has a negative entry.
  EXPECT_FALSE(straighten_vector({0, 0, -3}).has_value());
}

TEST(StraightenVector, FixesPartitions) {
  for (int k = 1; k <= 4; ++k)
    for (const auto& l : oracle::partitions_up_to(8, k)) {
      auto r = straighten_vector(l.padded(k));
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(r->sign, 1);
      EXPECT_EQ(r->partition, l);
    }
}

TEST(StraightenVector, AgreesWithAlternantRatio) {
  // s_alpha = a_{alpha+rho}/a_rho; the straightened alternant must match.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 3;
    IntVector alpha(static_cast<std::size_t>(k));
    for (int& a : alpha) a = entry(rng);
    std::vector<int> beta(alpha.size());
    bool negative = false;
    for (int i = 0; i < k; ++i) {
      beta[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i)] + k - 1 - i;
      negative = negative || beta[static_cast<std::size_t>(i)] < 0;
    }
    if (negative) {
      EXPECT_FALSE(straighten_vector(alpha).has_value());
      continue;
    }
    const oracle::IPoly alt = oracle::alternant(beta);
    auto r = straighten_vector(alpha);
    if (!r) {
      EXPECT_TRUE(alt.empty());
      continue;
    }
    std::vector<int> target = r->partition.padded(k);
    for (int i = 0; i < k; ++i) target[static_cast<std::size_t>(i)] += k - 1 - i;
    EXPECT_EQ(oracle::add(alt, oracle::alternant(target), -r->sign), oracle::IPoly{});
  }
}

TEST(VSet, Examples) {
  const std::vector<IntVector> v36 = {{-6, 0, 0}, {-6, 0, 1}, {-6, 1, 0}, {-6, 1, 1}};
  EXPECT_EQ(enumerate_v_set(3, 6), v36);
  EXPECT_EQ(enumerate_v_set(1, 4), std::vector<IntVector>{IntVector{-4}});
}

TEST(VSet, SizeAndRange) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto v = enumerate_v_set(k, n);
      ASSERT_EQ(v.size(), std::size_t{1} << (k - 1));
      ASSERT_EQ(std::set<IntVector>(v.begin(), v.end()).size(), v.size());
      for (const auto& tau : v) {
        const int neg = -std::accumulate(tau.begin(), tau.end(), 0);
        ASSERT_GE(neg, n - k + 1);
        ASSERT_LE(neg, n);
      }
    }
}

TEST(Helpers, SumAndUnion) {
  EXPECT_EQ(entrywise_sum(Partition({3, 1}), Partition({2, 2, 1})), Partition({5, 3, 1}));
  EXPECT_EQ(sorted_union(Partition({3, 1}), Partition({2, 2, 1})), Partition({3, 2, 2, 1, 1}));
}
