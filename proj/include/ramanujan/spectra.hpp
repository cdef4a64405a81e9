#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <string>
#include <vector>

#include "ramanujan/integer.hpp"
#include "ramanujan/precision.hpp"

namespace ramanujan {

/// Odd order m >= 3 of a cyclic group.
class Modulus {
 public:
  explicit Modulus(wide_int m);
  wide_int value() const { return m_; }
  operator wide_int() const { return m_; }

 private:
  wide_int m_;
};

/// Symmetric generating set S of Z_m, stored through its complement T = Z_m \ S.
class CayleySet {
 public:
  /// Residues are reduced mod m and deduplicated. Throws InvalidInput unless
  /// 0 is in T, T = -T, |T| <= m-2 and S generates Z_m.
  static CayleySet from_complement(Modulus m, const std::vector<wide_int>& residues);

  wide_int m() const { return m_; }
  /// Sorted canonical residues in [0, m).
  const std::vector<wide_int>& complement() const { return complement_; }
  int covalency() const { return static_cast<int>(complement_.size()); }
  wide_int valency() const { return m_ - covalency(); }
  bool contains(wide_int r) const;
  std::string to_string() const;

  bool operator==(const CayleySet&) const = default;

 private:
  CayleySet(wide_int m, std::vector<wide_int> complement) : m_(m), complement_(std::move(complement)) {}
  wide_int m_;
  std::vector<wide_int> complement_;
};

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
Scalar ramanujan_bound(wide_int valency) {
  using std::sqrt;
  return Scalar(2 * sqrt(to_scalar<Scalar>(valency - 1)));
}

/// mu_j = -sum_{b in T} cos(2 pi b j / m) for j >= 1, and m - |T| for j = 0.
template <class Scalar>
Scalar eigenvalue(const CayleySet& T, wide_int j) {
  const wide_int m = T.m();
  if (j < 0 || j >= m) throw InvalidInput("eigenvalue index out of range");
  if (j == 0) return to_scalar<Scalar>(T.valency());
  Scalar sum(0);
  for (wide_int b : T.complement()) sum += cos_2pi_frac<Scalar>(mul_mod(b, j, m), m);
  return Scalar(-sum);
}

template <class Scalar>
struct Spectrum {
  wide_int m = 0;
  wide_int valency = 0;
  Vector<Scalar> values;
  Scalar mu_max{0};
  std::int64_t argmax = 0;  // smallest j >= 1 attaining mu_max
  Scalar rb{0};
};

/// Largest order for which a full spectrum is materialised.
inline constexpr wide_int kMaxSpectrumOrder = 50'000'000;

template <class Scalar>
Spectrum<Scalar> spectrum(const CayleySet& T) {
  using std::abs;
  const wide_int m = T.m();
  if (m > kMaxSpectrumOrder) throw InvalidInput("order too large for a full spectrum");
  const auto n = static_cast<Eigen::Index>(m);
  Spectrum<Scalar> s;
  s.m = m;
  s.valency = T.valency();
  s.values.resize(n);
  s.values(0) = to_scalar<Scalar>(s.valency);
  for (Eigen::Index j = 1; 2 * j <= n; ++j) {
    s.values(j) = eigenvalue<Scalar>(T, j);
    s.values(n - j) = s.values(j);
  }
  s.mu_max = Scalar(0);
  s.argmax = 1;
  for (Eigen::Index j = 1; 2 * j <= n; ++j) {
    const Scalar a = abs(s.values(j));
    if (a > s.mu_max) {
      s.mu_max = a;
      s.argmax = j;
    }
  }
  s.rb = ramanujan_bound<Scalar>(s.valency);
  return s;
}

/// Largest |mu_j| over j >= 1 without storing the spectrum; any order.
template <class Scalar>
Scalar mu_max(const CayleySet& T, std::int64_t* argmax = nullptr) {
  using std::abs;
  Scalar best(0);
  std::int64_t arg = 1;
  const wide_int half = (T.m() - 1) / 2;
  if (half > kMaxSpectrumOrder) throw InvalidInput("order too large for a spectrum scan");
  for (std::int64_t j = 1; j <= half; ++j) {
    const Scalar a = abs(eigenvalue<Scalar>(T, j));
    if (a > best) {
      best = a;
      arg = j;
    }
  }
  if (argmax) *argmax = arg;
  return best;
}

using RamanujanDecision = MarginDecision;

/// mu_max <= 2 sqrt(valency - 1); margin = rb - mu_max, escalated near zero.
RamanujanDecision is_ramanujan(const CayleySet& T, const NumericPolicy& policy = {});

/// Complement {0, +-1, ..., +-(l-1)/2} of the canonical set S^(l).
CayleySet sl_complement(Modulus m, int l);

/// Closed form mu_j(S^(l)) = -sin(pi j l / m) / sin(pi j / m).
template <class Scalar>
Scalar mu_sl_closed(wide_int m, wide_int l, wide_int j) {
  if (mod_floor(j, m) == 0) throw InvalidInput("closed form undefined at j = 0 mod m");
  if (l < 1 || l % 2 == 0) throw InvalidInput("covalency must be odd and positive");
  const wide_int two_m = 2 * m;
  const Scalar num = sin_pi_frac<Scalar>(mul_mod(j, l, two_m), m);
  const Scalar den = sin_pi_frac<Scalar>(mod_floor(j, two_m), m);
  return Scalar(-num / den);
}

}  // namespace ramanujan
