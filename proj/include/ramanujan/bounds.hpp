#pragma once

#include <vector>

#include "ramanujan/integer.hpp"
#include "ramanujan/precision.hpp"
#include "ramanujan/spectra.hpp"

namespace ramanujan {

/// k = floor(sqrt(m) - 3/2), computed exactly; m lies in the interval I_k.
wide_int interval_index(wide_int m);

/// l0 = 2 floor(sqrt(m) - 3/2) + 1.
wide_int trivial_bound(wide_int m);

/// Odd orders of I_k = [(k+3/2)^2, (k+5/2)^2), as a closed range.
struct OddRange {
  wide_int lo = 0;
  wide_int hi = 0;
  bool contains(wide_int m) const { return m >= lo && m <= hi; }
};
OddRange interval_orders(wide_int k);

/// d(m) = sin(pi (2k+3)/m) / sin(pi/m) - 2 sqrt(m - 2k - 4), k = interval_index(m).
template <class Scalar>
Scalar d_value(wide_int m) {
  using std::sqrt;
  if (m < 7 || m % 2 == 0) throw InvalidInput("d(m) needs an odd order m >= 7");
  const wide_int k = interval_index(m);
  const Scalar ratio = sin_pi_frac<Scalar>(2 * k + 3, m) / sin_pi_frac<Scalar>(1, m);
  return Scalar(ratio - 2 * sqrt(to_scalar<Scalar>(m - 2 * k - 4)));
}

struct SignDecision {
  int sign = 0;
  double value = 0.0;
  bool escalated = false;
};

/// Sign of d(m), recomputed in Extended when the double value is not trustworthy.
SignDecision d_sign(wide_int m, const NumericPolicy& policy = {});

/// The window [k^2+5k-c, k^2+5k+5] on which d < 0, for k >= 4.
OddRange keylemma_window(wide_int k);

enum class JSource { none, small_window, quadratic };

struct QuadraticWitness {
  int c = 0;
  wide_int k = 0;
  int cprime = 0;
};

struct JWitness {
  bool member = false;
  JSource source = JSource::none;
  /// First quadratic decomposition; meaningful when source == quadratic.
  int c = 0;
  wide_int k = 0;
  int cprime = 0;
  /// Every decomposition found. More than one would be unexpected.
  std::vector<QuadraticWitness> all;
};

JWitness in_J(wide_int m);

/// Largest h with (sqrt(m) - 2)^2 >= 4h, exactly.
wide_int witness_h_max(wide_int m);

/// |mu_1(S^(l0+2h))| > 2 sqrt(m - l0 - 2h - 1) for 2 <= h <= witness_h_max(m).
bool witness_check(wide_int m, wide_int h, const NumericPolicy& policy = {});

}  // namespace ramanujan
