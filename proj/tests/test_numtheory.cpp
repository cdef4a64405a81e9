#include <gtest/gtest.h>

#include <random>

#include "ramanujan/numtheory.hpp"

using namespace ramanujan;

namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST(IsPrime, SmallRangeAgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 100000; ++n) ASSERT_EQ(is_prime(n), trial_prime(n)) << n;
}

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(181));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(19729));
  EXPECT_TRUE(is_prime(103507276549ULL));
  EXPECT_TRUE(is_prime(407634920449ULL));
  EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to 2,3,5,7
  EXPECT_FALSE(is_prime(3825123056546413051ULL));  // strong pseudoprime to bases up to 23
}

TEST(Factorize, Examples) {
  auto f35 = factorize(35);
  EXPECT_EQ(f35.factors, (std::vector<PrimePower>{{5, 1}, {7, 1}}));
  EXPECT_TRUE(f35.is_distinct_semiprime());
  auto f27 = factorize(27);
  EXPECT_EQ(f27.factors, (std::vector<PrimePower>{{3, 3}}));
  EXPECT_EQ(f27.big_omega(), 3);
  EXPECT_EQ(factorize(19729).factors, (std::vector<PrimePower>{{109, 1}, {181, 1}}));
  EXPECT_TRUE(factorize(1).factors.empty());
  EXPECT_THROW(factorize(0), InvalidInput);
}

TEST(Factorize, LargeSemiprimeAndReconstruction) {
  const std::uint64_t p = 4294967291ULL, q = 4294967279ULL;
  auto f = factorize(p * q);
  EXPECT_EQ(f.factors, (std::vector<PrimePower>{{q, 1}, {p, 1}}));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() >> (rng() % 40) | 1;
    auto g = factorize(n);
    wide_uint prod = 1;
    std::uint64_t last = 0;
    for (auto [pr, e] : g.factors) {
      ASSERT_TRUE(is_prime(pr));
      ASSERT_GT(pr, last);
      last = pr;
      for (int k = 0; k < e; ++k) prod *= pr;
    }
    ASSERT_EQ(prod, wide_uint(n));
  }
}

TEST(Jacobi, Examples) {
  EXPECT_EQ(jacobi(5, 97), -1);
  EXPECT_EQ(jacobi(45, 97), jacobi(5, 97));
  EXPECT_EQ(jacobi(123456, 1), 1);
  EXPECT_EQ(jacobi(21, 7), 0);
  EXPECT_EQ(jacobi(-1, 7), -1);
  EXPECT_THROW(jacobi(3, 8), InvalidInput);
}

TEST(Jacobi, MatchesEulerCriterionOnPrimes) {
  for (std::uint32_t p : odd_primes_up_to(2000)) {
    for (std::int64_t a = -30; a <= 60; ++a) {
      const std::int64_t r = ((a % p) + p) % p;
      std::uint64_t e = 1, b = r;
      for (std::uint64_t k = (p - 1) / 2; k; k >>= 1, b = b * b % p) {
        if (k & 1) e = e * b % p;
      }
      const int expected = r == 0 ? 0 : (e == 1 ? 1 : -1);
      ASSERT_EQ(jacobi(a, p), expected) << a << "/" << p;
    }
  }
}

TEST(AvoidsJ, FirstFivePrimes) {
  std::vector<std::uint64_t> found;
  for (std::uint32_t p : odd_primes_up_to(2000)) {
    if (avoids_J(p)) found.push_back(p);
    if (found.size() == 5) break;
  }
  EXPECT_EQ(found, (std::vector<std::uint64_t>{97, 577, 827, 853, 947}));
  EXPECT_FALSE(avoids_J(3));
  EXPECT_FALSE(avoids_J(7));
}

TEST(AvoidsJ, NoMultipleIsAFamilyValue) {
  // Direct check: f_c(k) mod p never vanishes.
  for (std::uint64_t p : {97u, 577u}) {
    for (int c : kFamilyConstants) {
      for (std::uint64_t k = 0; k < p; ++k) ASSERT_NE((k * k + 5 * k + p * 10 + c) % p, 0u);
    }
  }
}

TEST(Sieve, Counts) {
  EXPECT_EQ(primes_up_to(100).size(), 25u);
  EXPECT_EQ(primes_up_to(1000000).size(), 78498u);
  EXPECT_EQ(odd_primes_up_to(2).size(), 0u);
  EXPECT_EQ(primes_up_to(2).size(), 1u);
}

TEST(Polynomial, EvaluationAndFormatting) {
  const std::int64_t d[] = {1, 5, -5};
  auto f = IntPolynomial::from_descending(d);
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f(4), 31);
  EXPECT_EQ(f.to_string(), "x^2 + 5x - 5");
  EXPECT_EQ(f.eval_mod(4, 7), 3u);
  EXPECT_EQ(family_quadratic(-1)(4), 35);
}

TEST(NuF, Examples) {
  auto f5 = family_quadratic(5);
  EXPECT_EQ(nu_f(3, f5), 0);
  EXPECT_EQ(nu_f(5, f5), 1);
  // disc = 5 is a nonzero square mod 11.
  EXPECT_EQ(nu_f(11, f5), 2);
  EXPECT_THROW(nu_f(3, IntPolynomial{{4}}), InvalidInput);
}

TEST(FamilyEval, TableRows) {
  auto a = family_eval(1, 7, -5);
  EXPECT_EQ(a.p, 109);
  EXPECT_EQ(a.q, 181);
  EXPECT_EQ(a.k, 138);
  auto b = family_eval(1, 17, -5);
  EXPECT_EQ(b.p, 1879);
  EXPECT_EQ(b.q, 3301);
  EXPECT_EQ(b.k, 2488);
  auto c = family_eval(64, 39, 5);
  EXPECT_EQ(c.p, 103507276549LL);
  EXPECT_EQ(c.q, 407634920449LL);
  EXPECT_EQ(c.k, 205409786624LL);
  EXPECT_NEAR(c.limit_ratio(), std::pow(2.0 - 2.0 / 129.0, 2), 1e-15);
  EXPECT_THROW(family_eval(1, 7, -7), InvalidInput);
}

TEST(FamilyEval, ComparisonFamilyWithoutDomainCheck) {
  auto pt = family_polynomials(1, 13, -7);
  EXPECT_EQ(pt.p, 937);
  EXPECT_EQ(pt.q, 1637);
  EXPECT_EQ(pt.p * pt.q, pt.k * pt.k + 5 * pt.k - 7);
}

TEST(FamilyEval, IdentityOnRandomPoints) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> pa(1, 100), py(-10000, 10000);
  for (int i = 0; i < 10000; ++i) {
    for (int c : kFamilyConstants) {
      auto pt = family_eval(pa(rng), py(rng), c);
      ASSERT_EQ(pt.p * pt.q, pt.k * pt.k + 5 * pt.k + c);
    }
  }
}

TEST(FamilyEval, RatioConverges) {
  for (std::int64_t a : {1, 2, 5, 64}) {
    for (int c : kFamilyConstants) {
      auto pt = family_eval(a, 20000, c);
      EXPECT_LT(std::abs(pt.ratio_root() - (2.0 - 2.0 / (2.0 * a + 1))), 1e-3);
    }
  }
}

TEST(FamilyEval, CoprimeCoefficientsForAdmissibleA) {
  for (std::int64_t a = 1; a <= 60; ++a) {
    const auto r = a % 15;
    if (r != 1 && r != 4 && r != 7 && r != 13) continue;
    for (int c : kFamilyConstants) {
      auto p0 = family_eval(a, 0, c), p1 = family_eval(a, 1, c), p2 = family_eval(a, 2, c);
      // Second differences recover the coefficients.
      const wide_int pa = (p2.p - 2 * p1.p + p0.p) / 2, pb = p1.p - p0.p - pa, pc = p0.p;
      const wide_int qa = (p2.q - 2 * p1.q + p0.q) / 2, qb = p1.q - p0.q - qa, qc = p0.q;
      EXPECT_EQ(gcd(gcd(pa, pb), pc), 1) << a << "," << c;
      EXPECT_EQ(gcd(gcd(qa, qb), qc), 1) << a << "," << c;
      bool nz2 = false, nz3 = false;
      for (auto* pt : {&p0, &p1, &p2}) {
        nz2 |= mod_floor(pt->p * pt->q, 2) != 0;
        nz3 |= mod_floor(pt->p * pt->q, 3) != 0;
      }
      EXPECT_TRUE(nz2 && nz3) << a << "," << c;
    }
  }
}

TEST(HlConstant, ConvergesAtModerateLimit) {
  auto e = hl_constant(5, 1000000);
  EXPECT_NEAR(e.value, 1.77328, 0.02);
  EXPECT_GT(e.oscillation, 0.0);
  EXPECT_LT(e.oscillation, 0.01);
  EXPECT_THROW(hl_constant(5, 100), InvalidInput);
}

TEST(CountP2, Examples) {
  EXPECT_EQ(count_p2_ratio(4, 100), 13u);
  EXPECT_EQ(count_p2_ratio(2, 30), 2u);
  EXPECT_EQ(count_p2_ratio(3, 5), 0u);
  EXPECT_EQ(count_p2_ratio(3, 10000), 271u);
  EXPECT_EQ(count_p2_ratio(1.5, 100000), 648u);
  EXPECT_TRUE(in_P2(2, 7, 4));
  EXPECT_FALSE(in_P2(3, 12, 4));  // q < a p is strict
}

TEST(CountP2, NormalisedCountStaysBounded) {
  for (std::uint64_t x : {10000ULL, 100000ULL, 1000000ULL, 10000000ULL}) {
    const double lx = std::log(double(x));
    const double r = count_p2_ratio(4, x) * lx * lx / double(x);
    EXPECT_GT(r, 0.2) << x;
    EXPECT_LT(r, 5.0) << x;
  }
}

TEST(CountPoly, Examples) {
  auto f = IntPolynomial{{1, 0, 1}};
  EXPECT_EQ(count_poly(f, 10, PolyCountMode::prime).count, 5u);
  EXPECT_EQ(count_poly(f, 10, PolyCountMode::semiprime_distinct).count, 4u);
  EXPECT_EQ(count_poly(family_quadratic(5), 4, PolyCountMode::prime).count, 4u);
  EXPECT_EQ(count_poly(f, 10000, PolyCountMode::prime).count, 841u);
  EXPECT_EQ(count_poly(f, 10000, PolyCountMode::semiprime_distinct).count, 2826u);
  EXPECT_THROW(count_poly(IntPolynomial{{-100, 0, 1}}, 20, PolyCountMode::prime), InvalidInput);
}

TEST(CountPoly, SeriesIsCumulative) {
  auto f = IntPolynomial{{1, 0, 1}};
  const std::uint64_t xs[] = {10, 100, 1000};
  auto series = count_poly_series(f, xs, PolyCountMode::prime);
  ASSERT_EQ(series.size(), 3u);
  EXPECT_EQ(series[0].count, 5u);
  EXPECT_EQ(series[2].count, count_poly(f, 1000, PolyCountMode::prime).count);
  EXPECT_NEAR(series[2].landau_normalizer, 1000 * std::log(std::log(1000.0)) / std::log(1000.0), 1e-9);
}
