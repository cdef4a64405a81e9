#include "ramanujan/bounds.hpp"

#include "ramanujan/numtheory.hpp"

namespace ramanujan {

wide_int interval_index(wide_int m) {
  if (m < 3) throw InvalidInput("order must be at least 3");
  return (wide_int(isqrt(wide_uint(4 * m))) - 3) / 2;
}

wide_int trivial_bound(wide_int m) { return 2 * interval_index(m) + 1; }

OddRange interval_orders(wide_int k) {
  if (k < 0) throw InvalidInput("interval index must be non-negative");
  OddRange r{k * k + 3 * k + 3, k * k + 5 * k + 6};
  if (r.lo % 2 == 0) ++r.lo;
  if (r.hi % 2 == 0) --r.hi;
  return r;
}

SignDecision d_sign(wide_int m, const NumericPolicy& policy) {
  policy.validate();
  const double d = d_value<double>(m);
  const double scale = 2 * std::sqrt(static_cast<double>(m));
  SignDecision out;
  out.value = d;
  if (std::isfinite(d) && std::abs(d) >= policy.escalation_band(scale)) {
    out.sign = d > 0 ? 1 : -1;
    return out;
  }
  PrecisionScope scope(policy.extended_digits);
  const Extended e = d_value<Extended>(m);
  out.escalated = true;
  out.value = to_double(e);
  out.sign = e > 0 ? 1 : (e < 0 ? -1 : 0);
  return out;
}

OddRange keylemma_window(wide_int k) {
  if (k < 4) throw InvalidInput("the window is stated for k >= 4");
  const wide_int c = k <= 18 ? 3 : 5;
  return OddRange{k * k + 5 * k - c, k * k + 5 * k + 5};
}

JWitness in_J(wide_int m) {
  JWitness w;
  if (m % 2 != 0 && m >= 15 && m <= 29) {
    w.member = true;
    w.source = JSource::small_window;
    return w;
  }
  for (int c : kFamilyConstants) {
    const int cp = discriminant(c);
    wide_uint s = 0;
    if (4 * m + cp <= 0 || !is_perfect_square(wide_uint(4 * m + cp), &s)) continue;
    if (s % 2 == 0 || s < 5) continue;
    const wide_int k = (wide_int(s) - 5) / 2;
    if (k < (c == -5 ? 19 : 4)) continue;
    w.all.push_back({c, k, cp});
  }
  if (!w.all.empty()) {
    w.member = true;
    w.source = JSource::quadratic;
    w.c = w.all.front().c;
    w.k = w.all.front().k;
    w.cprime = w.all.front().cprime;
  }
  return w;
}

wide_int witness_h_max(wide_int m) {
  // (sqrt(m)-2)^2 >= 4h  <=>  m-4-4h >= 0 and (m-4-4h)^2 >= 64h.
  auto ok = [m](wide_int h) {
    const wide_int t = m - 4 - 4 * h;
    return t >= 0 && wide_uint(t) * wide_uint(t) >= wide_uint(64) * wide_uint(h);
  };
  wide_int lo = 0, hi = m / 4 + 1;
  while (lo < hi) {
    const wide_int mid = (lo + hi + 1) / 2;
    if (ok(mid)) lo = mid; else hi = mid - 1;
  }
  return lo;
}

bool witness_check(wide_int m, wide_int h, const NumericPolicy& policy) {
  if (m < 39 || m % 2 == 0) throw InvalidInput("witness check needs an odd order m >= 39");
  if (h < 2 || h > witness_h_max(m)) throw InvalidInput("h outside the witness range");
  const wide_int l = trivial_bound(m) + 2 * h;
  if (2 * l >= m) throw InvariantViolation("covalency l0+2h reaches m/2 for m=" + to_string(m));
  const auto margin = [&]<class S>(S*) {
    using std::abs;
    return S(abs(mu_sl_closed<S>(m, l, 1)) - ramanujan_bound<S>(m - l));
  };
  const double d = margin(static_cast<double*>(nullptr));
  const auto decision = decide_nonnegative(d, static_cast<double>(l), policy,
                                           [&] { return margin(static_cast<Extended*>(nullptr)); });
  // Strict inequality: an exact tie does not witness a violation.
  return decision.holds && decision.margin != 0.0;
}

}  // namespace ramanujan
