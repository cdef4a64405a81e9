#include <gtest/gtest.h>

#include <random>

#include "ramanujan/spectra.hpp"
#include "support/dense_oracle.hpp"

using namespace ramanujan;

namespace {

CayleySet make(int m, std::initializer_list<int> t) {
  return CayleySet::from_complement(Modulus(m), std::vector<wide_int>(t.begin(), t.end()));
}

CayleySet from_set(int m, const std::set<int>& t) {
  return CayleySet::from_complement(Modulus(m), std::vector<wide_int>(t.begin(), t.end()));
}

}  // namespace

TEST(Modulus, RejectsEvenAndSmall) {
  EXPECT_THROW(Modulus(4), InvalidInput);
  EXPECT_THROW(Modulus(1), InvalidInput);
  EXPECT_NO_THROW(Modulus(3));
}

TEST(CayleySet, Canonicalizes) {
  auto t = make(15, {0, -1, 1, 14, 16});
  EXPECT_EQ(t.covalency(), 3);
  EXPECT_EQ(t.to_string(), "{0,1,14}");
}

TEST(CayleySet, Validation) {
  EXPECT_THROW(make(15, {1, 14}), InvalidInput);        // no 0
  EXPECT_THROW(make(15, {0, 1}), InvalidInput);         // not symmetric
  // S = {3,6,9,12} does not generate Z_15.
  EXPECT_THROW(make(15, {0, 1, 14, 2, 13, 4, 11, 5, 10, 7, 8}), InvalidInput);
  std::vector<wide_int> all;
  for (int i = 0; i < 7; ++i) all.push_back(i);
  EXPECT_THROW(CayleySet::from_complement(Modulus(7), all), InvalidInput);
}

TEST(Eigenvalue, CompleteGraph) {
  auto t = make(5, {0});
  EXPECT_DOUBLE_EQ(eigenvalue<double>(t, 0), 4.0);
  EXPECT_NEAR(eigenvalue<double>(t, 1), -1.0, 1e-14);
}

TEST(Eigenvalue, CycleGraph) {
  auto t = make(7, {0, 2, 3, 4, 5});
  EXPECT_NEAR(eigenvalue<double>(t, 1), 1.24697960371746706, 1e-13);
}

TEST(Eigenvalue, ComplementSumMatchesClosedForm) {
  auto t = make(15, {0, 1, -1, 2, -2, 3, -3});
  EXPECT_NEAR(eigenvalue<double>(t, 1), -4.78338611675281307, 1e-12);
  EXPECT_NEAR(mu_sl_closed<double>(15, 7, 1), -4.78338611675281307, 1e-12);
  EXPECT_NEAR(mu_sl_closed<double>(21, 9, 1), -6.54128481265452830, 1e-12);
}

TEST(Eigenvalue, RejectsBadIndex) {
  auto t = make(5, {0});
  EXPECT_THROW(eigenvalue<double>(t, 5), InvalidInput);
  EXPECT_THROW(mu_sl_closed<double>(15, 7, 15), InvalidInput);
}

TEST(Spectrum, CompleteGraphK5) {
  auto s = spectrum<double>(make(5, {0}));
  ASSERT_EQ(s.values.size(), 5);
  EXPECT_DOUBLE_EQ(s.values(0), 4.0);
  for (int j = 1; j < 5; ++j) EXPECT_NEAR(s.values(j), -1.0, 1e-14);
  EXPECT_NEAR(s.mu_max, 1.0, 1e-14);
}

TEST(Spectrum, Order15) {
  auto s7 = spectrum<double>(sl_complement(Modulus(15), 7));
  EXPECT_NEAR(s7.mu_max, 4.78338611675281307, 1e-12);
  EXPECT_NEAR(s7.rb, 5.29150262212918118, 1e-12);
  EXPECT_EQ(s7.argmax, 1);

  auto s9 = spectrum<double>(sl_complement(Modulus(15), 9));
  EXPECT_NEAR(s9.mu_max, 4.57432919021750612, 1e-12);
  EXPECT_NEAR(s9.rb, 4.47213595499957939, 1e-12);
}

TEST(Spectrum, MatchesDenseAdjacency) {
  std::mt19937_64 rng(7);
  for (int m : {9, 15, 21, 35, 45}) {
    for (int l = 1; l <= m - 2; l += 2) {
      auto t = oracle_support::random_complement(m, l, rng);
      auto s = spectrum<double>(from_set(m, t));
      Eigen::VectorXd mine = s.values;
      std::sort(mine.data(), mine.data() + mine.size());
      Eigen::VectorXd dense = oracle_support::dense_eigenvalues(oracle_support::circulant_adjacency(m, t));
      EXPECT_LT((mine - dense).cwiseAbs().maxCoeff(), 1e-9) << "m=" << m << " l=" << l;
    }
  }
}

TEST(Spectrum, ExtendedAgreesWithDouble) {
  PrecisionScope scope(60);
  auto t = sl_complement(Modulus(35), 11);
  auto d = spectrum<double>(t);
  auto e = spectrum<Extended>(t);
  for (int j = 0; j < 35; ++j) EXPECT_NEAR(d.values(j), to_double(e.values(j)), 1e-12);
}

TEST(IsRamanujan, Examples) {
  auto k5 = is_ramanujan(make(5, {0}));
  EXPECT_TRUE(k5.holds);
  EXPECT_NEAR(k5.margin, 2.46410161513775459, 1e-12);

  auto r15 = is_ramanujan(sl_complement(Modulus(15), 7));
  EXPECT_TRUE(r15.holds);
  EXPECT_NEAR(r15.margin, 0.50811650537636811, 1e-9);

  auto n15 = is_ramanujan(sl_complement(Modulus(15), 9));
  EXPECT_FALSE(n15.holds);
  EXPECT_NEAR(n15.margin, 4.47213595499957939 - 4.57432919021750612, 1e-9);
}

TEST(IsRamanujan, EscalatesInsideBand) {
  NumericPolicy wide;
  wide.escalation_margin = 1.0;
  auto d = is_ramanujan(sl_complement(Modulus(15), 7), wide);
  EXPECT_TRUE(d.escalated);
  EXPECT_TRUE(d.holds);
  EXPECT_NEAR(d.margin, 0.50811650537636811, 1e-12);
}

TEST(IsRamanujan, CompleteAndCycleAlwaysRamanujan) {
  for (int m = 3; m <= 201; m += 2) {
    EXPECT_TRUE(is_ramanujan(make(m, {0})).holds) << m;
    if (m >= 5) {
      std::vector<wide_int> t;
      for (int i = 0; i < m; ++i) {
        if (i != 1 && i != m - 1) t.push_back(i);
      }
      EXPECT_TRUE(is_ramanujan(CayleySet::from_complement(Modulus(m), t)).holds) << m;
    }
  }
}

TEST(SlComplement, Construction) {
  EXPECT_EQ(sl_complement(Modulus(15), 1).to_string(), "{0}");
  EXPECT_EQ(sl_complement(Modulus(15), 7).to_string(), "{0,1,2,3,12,13,14}");
  EXPECT_EQ(sl_complement(Modulus(21), 9).covalency(), 9);
  EXPECT_THROW(sl_complement(Modulus(15), 6), InvalidInput);
  EXPECT_THROW(sl_complement(Modulus(15), 15), InvalidInput);
}

TEST(SpectrumProperty, TracePowerSumSymmetry) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick_m(2, 150);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 2 * pick_m(rng) + 1;
    std::uniform_int_distribution<int> pick_l(0, (m - 3) / 2);
    const int l = 2 * pick_l(rng) + 1;
    auto t = from_set(m, oracle_support::random_complement(m, l, rng));
    auto s = spectrum<double>(t);
    EXPECT_NEAR(s.values.sum(), 0.0, 1e-8 * m);
    EXPECT_NEAR(s.values.squaredNorm(), double(m) * (m - l), 1e-6 * m * m);
    for (int j = 1; j < m; ++j) {
      ASSERT_EQ(s.values(j), s.values(m - j));
      ASSERT_GT(s.values(j), -double(m - l));
      if (l < m / 2.0) ASSERT_LE(std::abs(s.values(j)), std::min(m - l, l) + 1e-9);
    }
  }
}

TEST(SpectrumProperty, ClosedFormMatchesDirectSum) {
  for (int m = 3; m <= 301; m += 2) {
    for (int l = 1; l <= m - 2; l += 2) {
      auto t = sl_complement(Modulus(m), l);
      for (int j = 1; 2 * j < m; ++j) {
        ASSERT_NEAR(mu_sl_closed<double>(m, l, j), eigenvalue<double>(t, j), 1e-9)
            << "m=" << m << " l=" << l << " j=" << j;
      }
    }
  }
}

TEST(SlClosed, HugeOrderExtended) {
  PrecisionScope scope(50);
  const wide_int m = parse_wide("42194392089017869137");
  const Extended v = mu_sl_closed<Extended>(m, 3, 1);
  EXPECT_NEAR(to_double(v), -3.0, 1e-15);
}
