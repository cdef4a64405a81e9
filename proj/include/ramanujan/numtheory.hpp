#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramanujan/integer.hpp"

namespace ramanujan {

/// The six constants c with f_c(k) = k^2 + 5k + c, in table order.
inline constexpr std::array<int, 6> kFamilyConstants = {-5, -3, -1, 1, 3, 5};

/// Discriminant 25 - 4c of f_c.
constexpr int discriminant(int c) { return 25 - 4 * c; }

bool is_family_constant(int c);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes

  int omega() const { return static_cast<int>(factors.size()); }
  int big_omega() const;
  std::uint64_t smallest_prime() const;
  bool is_prime() const { return factors.size() == 1 && factors[0].exponent == 1; }
  /// n = p*q with p < q both prime.
  bool is_distinct_semiprime() const;
};

Factorization factorize(std::uint64_t n);

/// Jacobi symbol (a/n) for odd positive n.
int jacobi(std::int64_t a, std::uint64_t n);

/// True when no value of any f_c is divisible by the odd prime p, i.e.
/// (c'/p) = -1 for all six discriminants.
bool avoids_J(std::uint64_t p);

/// Odd primes only, ascending, up to and including `limit`.
std::vector<std::uint32_t> odd_primes_up_to(std::uint64_t limit);
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

/// Integer polynomial with ascending coefficients: coeffs[i] multiplies x^i.
struct IntPolynomial {
  std::vector<std::int64_t> coeffs;

  static IntPolynomial from_descending(std::span<const std::int64_t> leading_first);
  int degree() const;
  wide_int operator()(wide_int x) const;
  std::uint64_t eval_mod(std::uint64_t x, std::uint64_t p) const;
  std::string to_string() const;
};

/// f_c(k) = k^2 + 5k + c.
IntPolynomial family_quadratic(int c);

/// Number of roots of f modulo the prime p, by direct evaluation.
int nu_f(std::uint64_t p, const IntPolynomial& f);

/// The polynomial triple (p(a,y), q(a,y), k(a,y)) with p*q = k^2+5k+c.
struct FamilyPoint {
  std::int64_t a = 0;
  std::int64_t y = 0;
  int c = 0;
  wide_int p = 0;
  wide_int q = 0;
  wide_int k = 0;

  bool in_domain() const { return p > 0 && q > 0; }
  /// sqrt(q/p); NaN when out of domain.
  double ratio_root() const;
  /// lim_{y->oo} q/p = (2 - 2/(2a+1))^2.
  double limit_ratio() const;
};

/// Evaluates the triple for any integer c, without the domain check on c.
FamilyPoint family_polynomials(std::int64_t a, std::int64_t y, int c);

/// family_polynomials restricted to c in {+-1, +-3, +-5}; asserts the identity.
FamilyPoint family_eval(std::int64_t a, std::int64_t y, int c);

struct HardyLittlewoodEstimate {
  int c = 0;
  std::uint64_t prime_limit = 0;
  double value = 0.0;
  /// Spread of the partial products over primes in (limit/10, limit].
  double oscillation = 0.0;
};

/// Truncated Euler product prod_{3<=p<=limit} (1 - (c'/p)/(p-1)).
HardyLittlewoodEstimate hl_constant(int c, std::uint64_t prime_limit);

/// #{m <= x : m = p q, p < q < a p, p, q prime} (p = 2 admitted).
std::uint64_t count_p2_ratio(double a, std::uint64_t x);

/// Predicate behind P_2(a): distinct primes p < q with q < a p.
bool in_P2(std::uint64_t p, std::uint64_t q, double a);

enum class PolyCountMode { prime, semiprime_distinct };

struct PolyCount {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  /// x log log x / log x.
  double landau_normalizer = 0.0;
};

/// Counts k in [1, x] with f(k) prime or a product of two distinct primes.
PolyCount count_poly(const IntPolynomial& f, std::uint64_t x, PolyCountMode mode);

/// Cumulative series of count_poly at every checkpoint in `xs` (ascending).
std::vector<PolyCount> count_poly_series(const IntPolynomial& f, std::span<const std::uint64_t> xs,
                                         PolyCountMode mode);

}  // namespace ramanujan
