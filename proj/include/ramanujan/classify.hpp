#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ramanujan/bounds.hpp"
#include "ramanujan/numtheory.hpp"
#include "ramanujan/precision.hpp"
#include "ramanujan/spectra.hpp"

namespace ramanujan {

enum class KindTag {
  small_order,           // m <= 13, every class Ramanujan
  type_I_prime,          // m prime in J
  type_II_semiprime,     // m = pq in J, p < q <= 4p-5
  type_III_square,       // m in {25, 49}
  outside_J,             // m not in J
  composite_in_J_other,  // any other composite in J
};

struct MKind {
  KindTag tag = KindTag::outside_J;
  wide_int p = 0;  // smallest prime factor (type II and other composites)
  wide_int q = 0;  // cofactor m/p

  /// "I", "II", "III", "outside_J", "composite_in_J_other", "small_order".
  std::string label() const;
};

enum class Decision { ordinary, exceptional, all_ramanujan };
std::string to_string(Decision d);

template <class Scalar>
struct MuCandidates {
  Scalar mu0{0};
  Scalar mu1{0};
  Scalar mu2{0};
  Scalar rb{0};

  Scalar max() const {
    using std::max;
    return max(mu0, max(mu1, mu2));
  }
};

/// The three candidate class maxima over covalency l0+2 for m = pq, together
/// with the bound 2 sqrt(pq - l0 - 3). Requires odd primes p < q <= 4p-5.
template <class Scalar>
MuCandidates<Scalar> mu_candidates(wide_int p, wide_int q, wide_int l0);

/// Same formulas without the primality and range checks; used for the
/// comparison family and the profile functions.
template <class Scalar>
MuCandidates<Scalar> mu_candidates_unchecked(wide_int p, wide_int q, wide_int l0);

struct Verdict {
  wide_int m = 0;
  wide_int l0 = 0;
  JWitness in_j;
  MKind kind;
  Decision verdict = Decision::ordinary;
  std::optional<int> epsilon;  // absent for m <= 13
  wide_int hat_l = 0;
  /// Class maximum over covalency l0+2 when known in closed form.
  std::optional<double> mu_hat;
  std::optional<MuCandidates<double>> candidates;
  double rb = 0.0;  // 2 sqrt(m - l0 - 3)
  /// rb - (largest eigenvalue considered); negative means a violation.
  std::optional<double> margin;
  bool escalated = false;
  /// x = sqrt(q/p) falls between the two asymptotic thresholds for c.
  bool near_threshold = false;
};

/// Full decision for odd m >= 3 below 2^64.
Verdict classify(wide_int m, const NumericPolicy& policy = {});

/// Decision for an m whose factorisation is supplied; every prime factor must
/// be below 2^64. Needed for orders beyond 64 bits.
Verdict classify_factored(wide_int m, const std::vector<PrimePower>& factors,
                          const NumericPolicy& policy = {});

/// Complement of size l0+2 inside the multiples of the smallest prime p,
/// whose eigenvalue at j = m/p is -(l0+2), exceeding the bound.
struct OrdinaryWitness {
  CayleySet complement;
  wide_int p = 0;
  wide_int j = 0;
  double eigenvalue = 0.0;
  double rb = 0.0;
};
OrdinaryWitness ordinary_witness(wide_int m);
OrdinaryWitness ordinary_witness(wide_int m, wide_int p);

struct Thresholds {
  /// Indexed like kFamilyConstants.
  std::array<double, 6> xbar1{};
  std::array<double, 6> xunder2{};
  std::array<double, 6> gamma5{};
  double x1 = 0, x2 = 0, xi1 = 0, xi2 = 0;
  double gamma1 = 0, gamma2 = 0, gamma3 = 0, gamma4 = 0;
};

const Thresholds& thresholds();

double xbar1(int c);
double xunder2(int c);
/// Root in (1,2) of 8 pi^2 x^3 - 16 pi^2 x^2 + (25-4c); needs 25-4c < 8 pi^2.
double gamma5(int c);

struct ProfilePoint {
  double M0 = 0, M1 = 0, M2 = 0, A = 0;
  double D0 = 0, D1 = 0, D2 = 0;
};

/// Exact profile functions at m = f_c(k), x = sqrt(q/p).
ProfilePoint figure_profile(int c, std::int64_t k, double x);

enum class OrderLabel { mu0, mu1, mu2, rb };
std::string to_string(OrderLabel l);

struct SpectralOrdering {
  int regime = 0;
  double x = 0.0;
  int c = 0;
  std::array<OrderLabel, 4> predicted{};
  std::array<OrderLabel, 4> computed{};
  bool matches = false;
  MuCandidates<double> margins;  // each candidate minus rb; rb slot unused
};

std::array<OrderLabel, 4> regime_order(int regime);
std::string order_string(const std::array<OrderLabel, 4>& order);

/// Regime of x = sqrt(q/p) among the six gamma-delimited ranges, and the
/// ascending order of mu0, mu1, mu2 and rb actually computed.
SpectralOrdering spectral_ordering(wide_int p, wide_int q, const NumericPolicy& policy = {});

// ---- template definitions ----

template <class Scalar>
MuCandidates<Scalar> mu_candidates_unchecked(wide_int p, wide_int q, wide_int l0) {
  using std::sqrt;
  const wide_int m = p * q;
  const wide_int c2 = l0 + 2;
  MuCandidates<Scalar> r;
  r.mu0 = sin_pi_frac<Scalar>(c2, m) / sin_pi_frac<Scalar>(1, m);
  r.mu1 = to_scalar<Scalar>(q) + to_scalar<Scalar>(c2 - q) * cos_2pi_frac<Scalar>(1, p);
  if (c2 <= 3 * p) {
    r.mu2 = to_scalar<Scalar>(p) + to_scalar<Scalar>(c2 - p) * cos_2pi_frac<Scalar>(1, q);
  } else {
    r.mu2 = to_scalar<Scalar>(p) + to_scalar<Scalar>(2 * p) * cos_2pi_frac<Scalar>(1, q) +
            to_scalar<Scalar>(c2 - 3 * p) * cos_2pi_frac<Scalar>(2, q);
  }
  r.rb = ramanujan_bound<Scalar>(m - c2);
  return r;
}

void check_type_II_pair(wide_int p, wide_int q);

template <class Scalar>
MuCandidates<Scalar> mu_candidates(wide_int p, wide_int q, wide_int l0) {
  check_type_II_pair(p, q);
  return mu_candidates_unchecked<Scalar>(p, q, l0);
}

}  // namespace ramanujan
