#include "ramanujan/classify.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numbers>

namespace ramanujan {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEightPi2 = 8 * kPi * kPi;

int constant_index(int c) {
  for (std::size_t i = 0; i < kFamilyConstants.size(); ++i) {
    if (kFamilyConstants[i] == c) return static_cast<int>(i);
  }
  throw InvalidInput("c must be one of -5,-3,-1,1,3,5");
}

template <class F>
double root_in_unit_interval(F f) {
  const auto [lo, hi] = boost::math::tools::bisect(
      f, 1.0, 2.0, boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 2));
  return (lo + hi) / 2;
}

double gamma5_unchecked(int c) {
  const double cp = discriminant(c);
  return root_in_unit_interval([cp](double x) { return kEightPi2 * x * x * (x - 2) + cp; });
}

Verdict small_order_verdict(wide_int m) {
  Verdict v;
  v.m = m;
  v.l0 = trivial_bound(m);
  v.in_j = in_J(m);
  v.kind.tag = KindTag::small_order;
  v.verdict = Decision::all_ramanujan;
  v.hat_l = m - 2;
  return v;
}

bool witness_exceeds_bound(wide_int m, wide_int l0) {
  // l0+2 > 2 sqrt(m - l0 - 3), exactly.
  return (l0 + 2) * (l0 + 2) > 4 * (m - l0 - 3);
}

void validate_order(wide_int m) {
  if (m < 3 || m % 2 == 0) throw InvalidInput("order must be odd and at least 3, got " + to_string(m));
}

}  // namespace

std::string MKind::label() const {
  switch (tag) {
    case KindTag::small_order: return "small_order";
    case KindTag::type_I_prime: return "I";
    case KindTag::type_II_semiprime: return "II";
    case KindTag::type_III_square: return "III";
    case KindTag::outside_J: return "outside_J";
    case KindTag::composite_in_J_other: return "composite_in_J_other";
  }
  return "?";
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::ordinary: return "ordinary";
    case Decision::exceptional: return "exceptional";
    case Decision::all_ramanujan: return "all_ramanujan";
  }
  return "?";
}

void check_type_II_pair(wide_int p, wide_int q) {
  if (p >= q) throw InvalidInput("need p < q");
  if (p < 3 || p % 2 == 0 || q % 2 == 0) throw InvalidInput("p and q must be odd primes");
  if (q > 4 * p - 5) throw InvalidInput("q >= 4p-3 is ordinary by the multiples-of-p witness");
  if (fits_int64(q) && (!is_prime(static_cast<std::uint64_t>(p)) || !is_prime(static_cast<std::uint64_t>(q)))) {
    throw InvalidInput("p and q must be odd primes");
  }
}

Verdict classify(wide_int m, const NumericPolicy& policy) {
  validate_order(m);
  if (m <= 13) return small_order_verdict(m);
  if (m > wide_int(std::numeric_limits<std::uint64_t>::max())) {
    throw InvalidInput("orders beyond 64 bits need an explicit factorisation");
  }
  return classify_factored(m, factorize(static_cast<std::uint64_t>(m)).factors, policy);
}

Verdict classify_factored(wide_int m, const std::vector<PrimePower>& factors, const NumericPolicy& policy) {
  validate_order(m);
  policy.validate();
  {
    wide_int product = 1;
    std::uint64_t last = 0;
    for (const auto& [p, e] : factors) {
      if (p <= last || !is_prime(p) || e < 1) throw InvalidInput("malformed factorisation");
      last = p;
      for (int i = 0; i < e; ++i) {
        if (product > m / wide_int(p)) throw InvalidInput("factorisation does not multiply to m");
        product *= p;
      }
    }
    if (product != m) throw InvalidInput("factorisation does not multiply to m");
  }
  if (m <= 13) return small_order_verdict(m);

  Verdict v;
  v.m = m;
  v.l0 = trivial_bound(m);
  v.in_j = in_J(m);
  v.hat_l = v.l0;
  v.epsilon = 0;
  v.rb = ramanujan_bound<double>(m - v.l0 - 2);

  const bool prime = factors.size() == 1 && factors[0].exponent == 1;
  const bool semiprime = factors.size() == 2 && factors[0].exponent == 1 && factors[1].exponent == 1;
  if (!prime) {
    v.kind.p = factors.front().prime;
    v.kind.q = m / v.kind.p;
  }
  if (semiprime && v.kind.q <= 4 * v.kind.p - 5) {
    v.candidates = mu_candidates_unchecked<double>(v.kind.p, v.kind.q, v.l0);
  }

  if (!v.in_j.member) {
    v.kind.tag = KindTag::outside_J;
    v.verdict = Decision::ordinary;
    const auto d = d_sign(m, policy);
    if (d.sign <= 0) throw InvariantViolation("d(m) is not positive for m outside J: m=" + to_string(m));
    v.margin = -d.value;
    v.escalated = d.escalated;
    return v;
  }

  if (prime) {
    v.kind.tag = KindTag::type_I_prime;
    const auto d = d_sign(m, policy);
    if (d.sign >= 0) throw InvariantViolation("prime in J with d(m) >= 0: m=" + to_string(m));
    v.verdict = Decision::exceptional;
    v.epsilon = 2;
    v.hat_l = v.l0 + 2;
    v.margin = -d.value;
    v.mu_hat = v.rb + d.value;
    v.escalated = d.escalated;
    return v;
  }

  if (factors.size() == 1 && factors[0].exponent == 2) {
    if (m != 25 && m != 49) throw InvariantViolation("square of a prime other than 5, 7 found in J: m=" + to_string(m));
    v.kind.tag = KindTag::type_III_square;
    v.verdict = Decision::exceptional;
    v.epsilon = 2;
    v.hat_l = v.l0 + 2;
    return v;
  }

  if (semiprime && v.kind.q <= 4 * v.kind.p - 5) {
    v.kind.tag = KindTag::type_II_semiprime;
    const auto& c = *v.candidates;
    const double mu_hat = c.max();
    const wide_int p = v.kind.p, q = v.kind.q, l0 = v.l0;
    const auto decision = decide_nonnegative(c.rb - mu_hat, c.rb, policy, [&] {
      const auto e = mu_candidates_unchecked<Extended>(p, q, l0);
      return Extended(e.rb - e.max());
    });
    v.margin = decision.margin;
    v.mu_hat = decision.escalated ? v.rb - decision.margin : mu_hat;
    v.escalated = decision.escalated;
    if (decision.holds) {
      v.verdict = Decision::exceptional;
      v.epsilon = 2;
      v.hat_l = v.l0 + 2;
    } else {
      v.verdict = Decision::ordinary;
    }
    if (v.in_j.source == JSource::quadratic && is_family_constant(v.in_j.c)) {
      const double x = std::sqrt(static_cast<double>(q) / static_cast<double>(p));
      v.near_threshold = x > xbar1(v.in_j.c) && x < xunder2(v.in_j.c);
    }
    return v;
  }

  v.kind.tag = KindTag::composite_in_J_other;
  v.verdict = Decision::ordinary;
  if (v.kind.q < 4 * v.kind.p - 3 || !witness_exceeds_bound(m, v.l0)) {
    throw InvariantViolation("composite in J without a multiples-of-p witness: m=" + to_string(m));
  }
  v.margin = v.rb - static_cast<double>(v.l0 + 2);
  return v;
}

OrdinaryWitness ordinary_witness(wide_int m) {
  validate_order(m);
  if (m > wide_int(std::numeric_limits<std::uint64_t>::max())) {
    throw InvalidInput("orders beyond 64 bits need an explicit divisor");
  }
  const auto f = factorize(static_cast<std::uint64_t>(m));
  if (f.is_prime()) throw InvalidInput("a prime order has no multiples-of-p witness");
  return ordinary_witness(m, f.smallest_prime());
}

OrdinaryWitness ordinary_witness(wide_int m, wide_int p) {
  validate_order(m);
  if (p <= 1 || p >= m || m % p != 0) throw InvalidInput("p must be a proper divisor of m");
  const wide_int t = m / p;
  if (t < 4 * p - 3) throw InvalidInput("no qualifying decomposition: m/p < 4p-3");
  const wide_int l0 = trivial_bound(m);
  std::vector<wide_int> residues{0};
  for (wide_int i = 1; i <= (l0 + 1) / 2; ++i) {
    residues.push_back(i * p);
    residues.push_back(-i * p);
  }
  OrdinaryWitness w{CayleySet::from_complement(Modulus(m), residues), p, t, 0.0, 0.0};
  w.eigenvalue = eigenvalue<double>(w.complement, t);
  w.rb = ramanujan_bound<double>(w.complement.valency());
  if (!witness_exceeds_bound(m, l0)) throw InvariantViolation("witness does not exceed the bound: m=" + to_string(m));
  return w;
}

double xbar1(int c) {
  constant_index(c);
  return 2.0 - discriminant(c) / kEightPi2;
}

double xunder2(int c) {
  constant_index(c);
  return 2.0 - discriminant(c) / (4 * kEightPi2);
}

double gamma5(int c) {
  if (discriminant(c) >= kEightPi2 || discriminant(c) <= 0) {
    throw InvalidInput("gamma5 needs 0 < 25-4c < 8 pi^2");
  }
  return gamma5_unchecked(c);
}

const Thresholds& thresholds() {
  static const Thresholds t = [] {
    Thresholds r;
    for (std::size_t i = 0; i < kFamilyConstants.size(); ++i) {
      r.xbar1[i] = xbar1(kFamilyConstants[i]);
      r.xunder2[i] = xunder2(kFamilyConstants[i]);
      r.gamma5[i] = gamma5(kFamilyConstants[i]);
    }
    r.x1 = xbar1(-5);
    r.x2 = xunder2(5);
    r.xi1 = r.x1 * r.x1;
    r.xi2 = r.x2 * r.x2;
    r.gamma1 = root_in_unit_interval([](double x) { return 2 * x * x * x - 6 * x + 3; });
    r.gamma2 = root_in_unit_interval([](double x) { return x * x * x - 12 * x + 15; });
    r.gamma3 = root_in_unit_interval([](double x) { return std::pow(x, 6) - 2 * std::pow(x, 5) + 8 * x - 10; });
    r.gamma4 = root_in_unit_interval([](double x) { return 3 * x * x * x - 6 * x * x + 2; });
    return r;
  }();
  return t;
}

ProfilePoint figure_profile(int c, std::int64_t k, double x) {
  constant_index(c);
  if (k < 1) throw InvalidInput("k must be positive");
  if (!(x > 1 && x < 2)) throw InvalidInput("x must lie in (1,2)");
  if (x == 1.5) throw InvalidInput("x = 3/2 is the branch point of the third profile");
  const wide_int K = k;
  const wide_int a_arg = K * K + 3 * K + c - 4;
  if (a_arg <= 0) throw InvalidInput("k too small for this c");
  const wide_int b2 = K * K + 5 * K + c;
  const double A = 2 * std::sqrt(static_cast<double>(a_arg));
  const double B = std::sqrt(static_cast<double>(b2));
  const double C = static_cast<double>(2 * K + 3);
  ProfilePoint pt;
  pt.A = A;
  pt.M0 = sin_pi_frac<double>(2 * K + 3, b2) / sin_pi_frac<double>(1, b2);
  pt.M1 = B * x + (C - B * x) * std::cos(2 * kPi * x / B);
  const double bx = B / x;
  if (x < 1.5) {
    pt.M2 = bx + (C - bx) * std::cos(2 * kPi / (B * x));
  } else {
    pt.M2 = bx + 2 * bx * std::cos(2 * kPi / (B * x)) + (C - 3 * bx) * std::cos(4 * kPi / (B * x));
  }
  pt.D0 = pt.M0 - A;
  pt.D1 = pt.M1 - A;
  pt.D2 = pt.M2 - A;
  return pt;
}

std::string to_string(OrderLabel l) {
  switch (l) {
    case OrderLabel::mu0: return "mu0";
    case OrderLabel::mu1: return "mu1";
    case OrderLabel::mu2: return "mu2";
    case OrderLabel::rb: return "RB";
  }
  return "?";
}

std::array<OrderLabel, 4> regime_order(int regime) {
  using L = OrderLabel;
  switch (regime) {
    case 1: return {L::mu1, L::mu2, L::mu0, L::rb};
    case 2: return {L::mu1, L::mu0, L::mu2, L::rb};
    case 3: return {L::mu1, L::mu2, L::mu0, L::rb};
    case 4: return {L::mu2, L::mu1, L::mu0, L::rb};
    case 5: return {L::mu2, L::mu0, L::mu1, L::rb};
    case 6: return {L::mu2, L::mu0, L::rb, L::mu1};
  }
  throw InvalidInput("regime must be 1..6");
}

std::string order_string(const std::array<OrderLabel, 4>& order) {
  std::string s;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) s += '<';
    s += to_string(order[i]);
  }
  return s;
}

SpectralOrdering spectral_ordering(wide_int p, wide_int q, const NumericPolicy& policy) {
  if (p < 3 || q <= p || q >= 4 * p) throw InvalidInput("need 3 <= p < q < 4p");
  policy.validate();
  const wide_int m = p * q;
  const wide_int l0 = trivial_bound(m);
  const wide_int k = (l0 - 1) / 2;
  SpectralOrdering out;
  out.c = static_cast<int>(m - k * k - 5 * k);
  out.x = std::sqrt(static_cast<double>(q) / static_cast<double>(p));
  const auto& t = thresholds();
  const double g5 = gamma5(out.c);
  if (out.x > g5) out.regime = 6;
  else if (out.x > t.gamma4) out.regime = 5;
  else if (out.x > t.gamma3) out.regime = 4;
  else if (out.x > t.gamma2) out.regime = 3;
  else if (out.x > t.gamma1) out.regime = 2;
  else out.regime = 1;
  out.predicted = regime_order(out.regime);

  PrecisionScope scope(policy.extended_digits);
  const auto e = mu_candidates_unchecked<Extended>(p, q, l0);
  std::array<std::pair<Extended, OrderLabel>, 4> values{{{e.mu0, OrderLabel::mu0},
                                                         {e.mu1, OrderLabel::mu1},
                                                         {e.mu2, OrderLabel::mu2},
                                                         {e.rb, OrderLabel::rb}}};
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < 4; ++i) out.computed[i] = values[i].second;
  out.matches = out.computed == out.predicted;
  out.margins.mu0 = to_double(Extended(e.mu0 - e.rb));
  out.margins.mu1 = to_double(Extended(e.mu1 - e.rb));
  out.margins.mu2 = to_double(Extended(e.mu2 - e.rb));
  out.margins.rb = 0.0;
  return out;
}

}  // namespace ramanujan
