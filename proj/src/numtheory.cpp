#include "ramanujan/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace ramanujan {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(wide_uint(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of the odd composite n.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBlock = 128;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBlock, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBlock;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_family_constant(int c) {
  return std::find(kFamilyConstants.begin(), kFamilyConstants.end(), c) != kFamilyConstants.end();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

int Factorization::big_omega() const {
  int total = 0;
  for (const auto& f : factors) total += f.exponent;
  return total;
}

std::uint64_t Factorization::smallest_prime() const {
  if (factors.empty()) throw InvalidInput("1 has no prime factor");
  return factors.front().prime;
}

bool Factorization::is_distinct_semiprime() const {
  return factors.size() == 2 && factors[0].exponent == 1 && factors[1].exponent == 1;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw InvalidInput("cannot factorize 0");
  Factorization result;
  result.n = n;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  for (std::uint64_t p = 7; p < 1000 && p * p <= n; p += 2) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  for (std::uint64_t p : primes) {
    if (!result.factors.empty() && result.factors.back().prime == p) {
      ++result.factors.back().exponent;
    } else {
      result.factors.push_back({p, 1});
    }
  }
  return result;
}

int jacobi(std::int64_t a, std::uint64_t n) {
  if (n == 0 || n % 2 == 0) throw InvalidInput("jacobi symbol needs an odd positive modulus");
  std::uint64_t x = static_cast<std::uint64_t>(mod_floor(a, n));
  int result = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const std::uint64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) result = -result;
    x %= n;
  }
  return n == 1 ? result : 0;
}

bool avoids_J(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) throw InvalidInput("avoids_J needs an odd prime");
  for (int c : kFamilyConstants) {
    if (jacobi(discriminant(c), p) != -1) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  if (limit > std::numeric_limits<std::uint32_t>::max()) throw InvalidInput("sieve limit too large");
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  // Odd-only sieve: index i stands for 2i+1.
  const std::uint64_t half = (limit - 1) / 2;
  std::vector<bool> composite(half + 1, false);
  for (std::uint64_t i = 1; i <= half; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint32_t> odd_primes_up_to(std::uint64_t limit) {
  auto primes = primes_up_to(limit);
  if (!primes.empty()) primes.erase(primes.begin());
  return primes;
}

IntPolynomial IntPolynomial::from_descending(std::span<const std::int64_t> leading_first) {
  IntPolynomial f;
  f.coeffs.assign(leading_first.rbegin(), leading_first.rend());
  while (f.coeffs.size() > 1 && f.coeffs.back() == 0) f.coeffs.pop_back();
  return f;
}

int IntPolynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (coeffs[i] != 0) return i;
  }
  return -1;
}

wide_int IntPolynomial::operator()(wide_int x) const {
  wide_int v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

std::uint64_t IntPolynomial::eval_mod(std::uint64_t x, std::uint64_t p) const {
  wide_int v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    v = mod_floor(v * wide_int(x) + *it, p);
  }
  return static_cast<std::uint64_t>(v);
}

std::string IntPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const std::int64_t c = coeffs[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

IntPolynomial family_quadratic(int c) { return IntPolynomial{{c, 5, 1}}; }

int nu_f(std::uint64_t p, const IntPolynomial& f) {
  if (f.degree() < 1) throw InvalidInput("nu_f needs a polynomial of degree at least 1");
  if (p < 2 || p >= 1000000) throw InvalidInput("nu_f needs a prime below 10^6");
  int roots = 0;
  for (std::uint64_t n = 0; n < p; ++n) {
    if (f.eval_mod(n, p) == 0) ++roots;
  }
  return roots;
}

double FamilyPoint::ratio_root() const {
  if (!in_domain()) return std::numeric_limits<double>::quiet_NaN();
  return std::sqrt(static_cast<double>(q) / static_cast<double>(p));
}

double FamilyPoint::limit_ratio() const {
  const double r = 2.0 - 2.0 / (2.0 * a + 1.0);
  return r * r;
}

FamilyPoint family_polynomials(std::int64_t a, std::int64_t y, int c) {
  if (a < 1) throw InvalidInput("family parameter a must be positive");
  if (a > 100000 || y > 1000000000 || y < -1000000000) throw InvalidInput("family parameters out of range");
  const wide_int A = a, Y = y, C = c;
  FamilyPoint pt;
  pt.a = a;
  pt.y = y;
  pt.c = c;
  pt.p = A * A * (2 * A + 1) * (2 * A + 1) * Y * Y - A * (2 * A + 1) * (8 * A + 5) * Y +
         (4 * C - 9) * A * A + (4 * C - 5) * A + C;
  pt.q = 16 * A * A * A * A * Y * Y - 8 * A * A * (8 * A + 1) * Y + 4 * (4 * C - 9) * A * A + 16 * A + 1;
  pt.k = 4 * A * A * A * (2 * A + 1) * Y * Y - A * (32 * A * A + 20 * A + 1) * Y +
         2 * (4 * C - 9) * A * A + (4 * C - 1) * A;
  return pt;
}

FamilyPoint family_eval(std::int64_t a, std::int64_t y, int c) {
  if (!is_family_constant(c)) throw InvalidInput("family constant c must be one of -5,-3,-1,1,3,5");
  FamilyPoint pt = family_polynomials(a, y, c);
  if (pt.p * pt.q != pt.k * pt.k + 5 * pt.k + c) {
    throw InvariantViolation("family identity p*q = k^2+5k+c failed at a=" + std::to_string(a) +
                             " y=" + std::to_string(y));
  }
  return pt;
}

HardyLittlewoodEstimate hl_constant(int c, std::uint64_t prime_limit) {
  if (prime_limit < 1000) throw InvalidInput("prime limit must be at least 1000");
  HardyLittlewoodEstimate est;
  est.c = c;
  est.prime_limit = prime_limit;
  const int cp = discriminant(c);
  const std::uint64_t tail_start = prime_limit / 10;
  double product = 1.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::uint32_t p : odd_primes_up_to(prime_limit)) {
    product *= 1.0 - static_cast<double>(jacobi(cp, p)) / (p - 1.0);
    if (p > tail_start) {
      lo = std::min(lo, product);
      hi = std::max(hi, product);
    }
  }
  est.value = product;
  est.oscillation = hi - lo;
  return est;
}

bool in_P2(std::uint64_t p, std::uint64_t q, double a) {
  return p < q && static_cast<long double>(q) < static_cast<long double>(a) * p;
}

std::uint64_t count_p2_ratio(double a, std::uint64_t x) {
  if (!(a > 1)) throw InvalidInput("ratio a must exceed 1");
  if (x < 6) return 0;
  const auto primes = primes_up_to(x / 2);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (p * p >= x) break;
    const std::uint64_t q_max_size = x / p;
    // q < a p, strictly.
    const long double ap = static_cast<long double>(a) * p;
    std::uint64_t q_max_ratio = ap >= static_cast<long double>(q_max_size) + 1
                                    ? q_max_size
                                    : static_cast<std::uint64_t>(std::ceil(ap)) - 1;
    const std::uint64_t q_max = std::min(q_max_size, q_max_ratio);
    if (q_max <= p) continue;
    const auto end = std::upper_bound(primes.begin() + i + 1, primes.end(), q_max);
    count += static_cast<std::uint64_t>(end - (primes.begin() + i + 1));
  }
  return count;
}

namespace {

bool matches_mode(wide_int v, PolyCountMode mode) {
  if (v <= 0) throw InvalidInput("polynomial is non-positive in the counting range");
  if (v > wide_int(std::numeric_limits<std::uint64_t>::max())) {
    throw InvalidInput("polynomial value exceeds 64 bits");
  }
  const auto n = static_cast<std::uint64_t>(v);
  if (mode == PolyCountMode::prime) return is_prime(n);
  if (n < 6 || is_prime(n)) return false;
  return factorize(n).is_distinct_semiprime();
}

double landau(std::uint64_t x) {
  const double lx = std::log(static_cast<double>(x));
  if (x < 3) return 0.0;
  return static_cast<double>(x) * std::log(lx) / lx;
}

}  // namespace

std::vector<PolyCount> count_poly_series(const IntPolynomial& f, std::span<const std::uint64_t> xs,
                                         PolyCountMode mode) {
  if (f.degree() < 1) throw InvalidInput("polynomial must have degree at least 1");
  if (!std::is_sorted(xs.begin(), xs.end())) throw InvalidInput("checkpoints must be ascending");
  std::vector<PolyCount> out;
  std::uint64_t count = 0;
  std::uint64_t k = 1;
  for (std::uint64_t x : xs) {
    for (; k <= x; ++k) {
      if (matches_mode(f(wide_int(k)), mode)) ++count;
    }
    out.push_back({x, count, landau(x)});
  }
  return out;
}

PolyCount count_poly(const IntPolynomial& f, std::uint64_t x, PolyCountMode mode) {
  const std::uint64_t xs[] = {x};
  return count_poly_series(f, xs, mode).front();
}

}  // namespace ramanujan
