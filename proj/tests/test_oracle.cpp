#include <gtest/gtest.h>

#include <random>

#include "cli/golden.hpp"
#include "ramanujan/bounds.hpp"
#include "ramanujan/classify.hpp"
#include "ramanujan/oracle.hpp"
#include "support/dense_oracle.hpp"

using namespace ramanujan;

namespace {

std::uint64_t dense_count(int m, int l) {
  std::uint64_t n = 0;
  OracleOptions wide;
  for_each_in_class(Modulus(m), l, [&](const CayleySet&) { ++n; }, wide);
  return n;
}

}  // namespace

TEST(EnumerateClass, Counts) {
  EXPECT_EQ(class_size(Modulus(15), 7), 35u);
  EXPECT_EQ(enumerate_class(Modulus(15), 7).size(), 35u);
  EXPECT_EQ(enumerate_class(Modulus(5), 3).size(), 2u);
  EXPECT_EQ(class_size(Modulus(35), 11), 6188u);
  // T = {0, +-1, +-2, +-4} leaves S = {+-3}, which does not generate Z_9.
  EXPECT_EQ(class_size(Modulus(9), 7), 4u);
  EXPECT_EQ(enumerate_class(Modulus(9), 7).size(), 3u);
}

TEST(EnumerateClass, GenerationFilterMatchesDirectCount) {
  for (int m : {9, 15, 21, 25, 27}) {
    for (int l = 1; l <= m - 2; l += 2) {
      std::uint64_t expected = 0;
      const int half = (m - 1) / 2, r = (l - 1) / 2;
      for (std::uint32_t mask = 0; mask < (1u << half); ++mask) {
        if (__builtin_popcount(mask) != r) continue;
        std::set<int> t{0};
        for (int i = 0; i < half; ++i) {
          if (mask >> i & 1) {
            t.insert(i + 1);
            t.insert(m - i - 1);
          }
        }
        expected += oracle_support::generates(m, t);
      }
      EXPECT_EQ(dense_count(m, l), expected) << m << " " << l;
    }
  }
}

TEST(EnumerateClass, LexicographicAndCanonical) {
  auto sets = enumerate_class(Modulus(11), 5);
  ASSERT_EQ(sets.size(), 10u);
  EXPECT_EQ(sets.front().to_string(), "{0,1,2,9,10}");
  EXPECT_EQ(sets.back().to_string(), "{0,4,5,6,7}");
}

TEST(EnumerateClass, Refusals) {
  OracleOptions tight;
  tight.budget = 1000;
  try {
    class_max(Modulus(99), 41, tight);
    FAIL() << "expected refusal";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.required(), binomial_saturating(49, 20));
  }
  EXPECT_THROW(enumerate_class(Modulus(15), 6), InvalidInput);
  EXPECT_THROW(enumerate_class(Modulus(15), 15), InvalidInput);
}

TEST(ClassMax, Examples) {
  auto a = class_max(Modulus(35), 11);
  EXPECT_NEAR(a.mu, 9.31034904140515489, 1e-12);
  EXPECT_EQ(a.witness.to_string(), "{0,1,2,3,4,5,30,31,32,33,34}");

  auto b = class_max(Modulus(21), 9);
  EXPECT_NEAR(b.mu, 6.74093881115240118, 1e-12);
  EXPECT_EQ(gcd(b.j, 21), 3);

  auto c = class_max(Modulus(15), 7);
  EXPECT_NEAR(c.mu, 4.78338611675281307, 1e-12);
  EXPECT_EQ(c.witness.to_string(), "{0,1,2,3,12,13,14}");
  EXPECT_EQ(c.examined, 35u);
}

TEST(ClassMax, MatchesDenseBruteForce) {
  for (int m : {7, 9, 11, 15, 17, 21, 25}) {
    for (int l = 1; l <= m - 2; l += 2) {
      EXPECT_NEAR(class_max(Modulus(m), l).mu, oracle_support::brute_class_max(m, l), 1e-9) << m << " " << l;
    }
  }
}

TEST(ClassMax, IndependentOfWorkerCount) {
  OracleOptions one, four;
  one.workers = 1;
  four.workers = 4;
  for (int m : {35, 45, 49}) {
    const int l = static_cast<int>(trivial_bound(m)) + 2;
    auto a = class_max(Modulus(m), l, one);
    auto b = class_max(Modulus(m), l, four);
    EXPECT_EQ(a.witness, b.witness) << m;
    EXPECT_EQ(a.mu, b.mu) << m;
    EXPECT_EQ(a.examined, b.examined) << m;
  }
}

TEST(ClassMax, TypeOneWitnessIsMultiplierImageOfConsecutiveSet) {
  for (int m : {37, 41, 47, 53}) {
    ASSERT_EQ(classify(m).kind.tag, KindTag::type_I_prime) << m;
    const int l = static_cast<int>(trivial_bound(m)) + 2;
    auto cm = class_max(Modulus(m), l);
    std::vector<wide_int> image;
    for (wide_int b : cm.witness.complement()) image.push_back(mod_floor(b * cm.j, m));
    std::sort(image.begin(), image.end());
    EXPECT_EQ(image, sl_complement(Modulus(m), l).complement()) << m;
  }
}

TEST(ScanClass, FindsViolatorsAndCleanClasses) {
  auto clean = scan_class(Modulus(55), 13);
  EXPECT_TRUE(clean.all_ramanujan);
  EXPECT_GT(clean.examined, 290000u);

  auto dirty = scan_class(Modulus(55), 15);
  ASSERT_FALSE(dirty.all_ramanujan);
  EXPECT_FALSE(is_ramanujan(*dirty.violator).holds);
  EXPECT_EQ(dirty.violator->covalency(), 15);
}

TEST(HatL, Examples) {
  EXPECT_EQ(hat_l_exhaustive(Modulus(15)), 7);
  EXPECT_EQ(hat_l_exhaustive(Modulus(39)), 9);
  EXPECT_EQ(hat_l_exhaustive(Modulus(55)), 13);
}

TEST(HatL, SmallOrdersAreFullyRamanujan) {
  for (int m = 3; m <= 25; m += 2) {
    EXPECT_EQ(hat_l_exhaustive(Modulus(m)) == m - 2, m <= 13) << m;
  }
}

TEST(HatL, SmallOrderTable) {
  for (const auto& row : golden::kSmallOrders) {
    EXPECT_EQ(hat_l_exhaustive(Modulus(row.m)), row.hat_l) << row.m;
  }
}

TEST(HatL, AgreesWithClassifyUpTo79) {
  int compared = 0;
  for (int m = 3; m <= 79; m += 2) {
    int oracle = 0;
    try {
      oracle = hat_l_exhaustive(Modulus(m));
    } catch (const BudgetExceeded&) {
      continue;
    }
    ++compared;
    EXPECT_EQ(oracle, classify(m).hat_l) << m;
  }
  EXPECT_GE(compared, 35);
}

TEST(HatL, PruningBoundHolds) {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 15 + 2 * static_cast<int>(rng() % 43);
    const int l0 = static_cast<int>(trivial_bound(m));
    const int l = 1 + 2 * static_cast<int>(rng() % ((l0 + 1) / 2));
    const auto t = oracle_support::random_complement(m, l, rng);
    const auto set = CayleySet::from_complement(Modulus(m), std::vector<wide_int>(t.begin(), t.end()));
    const double mu = mu_max<double>(set);
    ASSERT_LE(mu, l + 1e-9) << m << " " << l;
    ASSERT_LE(double(l), ramanujan_bound<double>(m - l) + 1e-9) << m << " " << l;
  }
}

TEST(CandidateCrossCheck, CrossCheck) {
  for (int m : {15, 21, 35, 55}) {
    auto r = lemma43_crosscheck(m);
    EXPECT_TRUE(r.passed()) << m << ": " << r.diagnostic << " witness " << r.witness;
    EXPECT_LE(r.delta, 1e-9) << m;
  }
  auto r21 = lemma43_crosscheck(21);
  EXPECT_EQ(r21.gcd_class, 3);
  auto r35 = lemma43_crosscheck(35);
  EXPECT_EQ(r35.gcd_class, 1);
  auto r55 = lemma43_crosscheck(55);
  EXPECT_NEAR(r55.class_mu, 11.84426317618406087, 1e-12);
  EXPECT_LT(r55.class_mu, 2 * std::sqrt(41.0));
  EXPECT_THROW(lemma43_crosscheck(45), InvalidInput);
}

TEST(CandidateCrossCheck, OtherSemiprimes) {
  for (int m : {65, 77}) {
    const auto f = factorize(m);
    const auto p = f.factors[0].prime, q = f.factors[1].prime;
    if (q > 4 * p - 5) continue;
    auto r = lemma43_crosscheck(m);
    EXPECT_TRUE(r.passed()) << m << ": " << r.diagnostic << " witness " << r.witness;
  }
}
