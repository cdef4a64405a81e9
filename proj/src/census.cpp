#include "ramanujan/census.hpp"

#include <algorithm>
#include <cmath>

namespace ramanujan {
namespace {

std::vector<PrimePower> merge_factors(std::uint64_t p, std::uint64_t q) {
  auto fp = factorize(p).factors;
  for (const auto& f : factorize(q).factors) {
    bool merged = false;
    for (auto& g : fp) {
      if (g.prime == f.prime) {
        g.exponent += f.exponent;
        merged = true;
      }
    }
    if (!merged) fp.push_back(f);
  }
  std::sort(fp.begin(), fp.end(), [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
  return fp;
}

}  // namespace

std::vector<FamilyEntry> family_scan(std::int64_t a, int c, std::int64_t y_max, bool require_prime,
                                     const NumericPolicy& policy) {
  if (!is_family_constant(c)) throw InvalidInput("c must be one of -5, -3, -1, 1, 3, 5");
  if (a < 1) throw InvalidInput("a must be positive");
  if (y_max < 0) throw InvalidInput("y_max must be non-negative");
  std::vector<FamilyEntry> out;
  for (std::int64_t y = 0; y <= y_max; ++y) {
    FamilyEntry e{family_eval(a, y, c)};
    if (!e.point.in_domain()) {
      out.push_back(std::move(e));
      continue;
    }
    if (!fits_int64(e.point.p) || !fits_int64(e.point.q)) throw InvalidInput("family value beyond 64 bits");
    const auto p = static_cast<std::uint64_t>(e.point.p), q = static_cast<std::uint64_t>(e.point.q);
    e.p_prime = is_prime(p);
    e.q_prime = is_prime(q);
    if (require_prime && !(e.p_prime && e.q_prime)) continue;
    const wide_int m = e.point.p * e.point.q;
    // p and q are odd for every family point in the domain, but p = q = 1 or
    // tiny products fall below the classified range.
    if (m % 2 == 1 && m >= 3) e.verdict = classify_factored(m, merge_factors(p, q), policy);
    out.push_back(std::move(e));
  }
  return out;
}

double ExceptionalCount::type_II_ratio() const {
  const double x = static_cast<double>(k_max);
  if (x < 3) return 0.0;
  return static_cast<double>(type_II.size()) / (x / (std::log(x) * std::log(x)));
}

std::int64_t family_k_min(int c) {
  if (!is_family_constant(c)) throw InvalidInput("c must be one of -5, -3, -1, 1, 3, 5");
  return c == -5 ? 19 : 4;
}

ExceptionalCount count_exceptionals(int c, std::int64_t k_max, const NumericPolicy& policy) {
  ExceptionalCount out;
  out.c = c;
  out.k_min = family_k_min(c);
  out.k_max = k_max;
  if (k_max > 3'037'000'496LL) throw InvalidInput("f_c(k_max) must stay below 2^63");
  const IntPolynomial f = family_quadratic(c);
  for (std::int64_t k = out.k_min; k <= k_max; ++k) {
    const Verdict v = classify(f(k), policy);
    if (v.verdict != Decision::exceptional) continue;
    switch (v.kind.tag) {
      case KindTag::type_I_prime: out.type_I.push_back(k); break;
      case KindTag::type_II_semiprime: out.type_II.push_back(k); break;
      case KindTag::type_III_square: out.type_III.push_back(k); break;
      default: throw InvariantViolation("exceptional order of unexpected kind: " + to_string(v.m));
    }
  }
  return out;
}

std::vector<std::int64_t> exceptional_orders(std::int64_t x, const NumericPolicy& policy) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = 15; m <= x; m += 2) {
    if (classify(m, policy).verdict == Decision::exceptional) out.push_back(m);
  }
  return out;
}

}  // namespace ramanujan
