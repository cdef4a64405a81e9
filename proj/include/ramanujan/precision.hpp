#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <type_traits>

#include "ramanujan/integer.hpp"

namespace ramanujan {

/// Variable-precision float used whenever double cannot settle a comparison.
/// Its working precision is process-global; set it with PrecisionScope from
/// the calling thread only.
using Extended = boost::multiprecision::mpfr_float;

/// Tolerance knobs for every real comparison in the library.
struct NumericPolicy {
  double escalation_margin = 1e-9;
  int extended_digits = 50;

  void validate() const;

  /// Width of the band around zero in which a double margin is not trusted.
  /// `scale` is the magnitude of the quantities being compared; double
  /// rounding grows with it, so the band never drops below ~1024 ulp of it.
  double escalation_band(double scale) const {
    return std::max(escalation_margin,
                    1024.0 * std::numeric_limits<double>::epsilon() * std::abs(scale));
  }
};

/// Sets the Extended working precision for its lifetime, restoring the old one.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

template <class Scalar>
Scalar pi() {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return std::numbers::pi_v<Scalar>;
  } else {
    return boost::math::constants::pi<Scalar>();
  }
}

template <class Scalar>
Scalar to_scalar(wide_int v) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return static_cast<Scalar>(v);
  } else {
    if (fits_int64(v)) return Scalar(static_cast<long long>(v));
    const bool negative = v < 0;
    const wide_uint u = negative ? wide_uint(0) - wide_uint(v) : wide_uint(v);
    Scalar hi(static_cast<unsigned long long>(u >> 64));
    Scalar lo(static_cast<unsigned long long>(u & ~std::uint64_t{0}));
    Scalar r = ldexp(hi, 64) + lo;
    return negative ? Scalar(-r) : r;
  }
}

/// cos(2*pi*r/m) with r reduced exactly into [0, m/2] before any rounding.
template <class Scalar>
Scalar cos_2pi_frac(wide_int r, wide_int m) {
  using std::cos;
  r = mod_floor(r, m);
  if (2 * r > m) r = m - r;
  if (r == 0) return Scalar(1);
  return Scalar(cos(Scalar(2 * pi<Scalar>() * to_scalar<Scalar>(r) / to_scalar<Scalar>(m))));
}

/// sin(pi*r/m) with r reduced exactly mod 2m.
template <class Scalar>
Scalar sin_pi_frac(wide_int r, wide_int m) {
  using std::sin;
  r = mod_floor(r, 2 * m);
  bool negative = false;
  if (r >= m) {
    r -= m;
    negative = true;
  }
  if (2 * r > m) r = m - r;
  Scalar v = r == 0 ? Scalar(0) : Scalar(sin(Scalar(pi<Scalar>() * to_scalar<Scalar>(r) / to_scalar<Scalar>(m))));
  return negative ? Scalar(-v) : v;
}

template <class Scalar>
double to_double(const Scalar& v) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return static_cast<double>(v);
  } else {
    return v.template convert_to<double>();
  }
}

/// Outcome of a `lhs <= rhs` style test decided by the sign of a margin.
struct MarginDecision {
  bool holds = false;  // margin >= 0
  double margin = 0.0;
  bool escalated = false;
};

/// Decides `margin >= 0` from a double estimate, recomputing in Extended when
/// the estimate falls inside the escalation band. `extended_margin` must
/// return the same quantity computed in Extended.
template <class ExtendedMarginFn>
MarginDecision decide_nonnegative(double margin, double scale, const NumericPolicy& policy,
                                  ExtendedMarginFn&& extended_margin) {
  MarginDecision d;
  d.margin = margin;
  if (std::isfinite(margin) && std::abs(margin) >= policy.escalation_band(scale)) {
    d.holds = margin >= 0;
    return d;
  }
  PrecisionScope scope(policy.extended_digits);
  const Extended exact = extended_margin();
  d.escalated = true;
  d.margin = to_double(exact);
  d.holds = exact >= 0;
  return d;
}

}  // namespace ramanujan
