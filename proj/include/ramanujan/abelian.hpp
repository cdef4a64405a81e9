#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramanujan/oracle.hpp"
#include "ramanujan/precision.hpp"
#include "ramanujan/spectra.hpp"

namespace ramanujan {

/// Z_{m_1} + ... + Z_{m_r} with odd m_i >= 3 and m_1 | m_2 | ... | m_r.
class AbelianGroup {
 public:
  using Element = std::vector<std::int64_t>;

  explicit AbelianGroup(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::int64_t order() const { return order_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  bool is_cyclic() const { return orders_.size() == 1; }
  /// Exponent m_r.
  std::int64_t exponent() const { return orders_.back(); }

  /// Mixed-radix index in [0, order), first component most significant.
  std::int64_t index(const Element& g) const;
  Element element(std::int64_t index) const;
  Element reduce(const Element& g) const;
  Element negate(const Element& g) const;
  Element add(const Element& a, const Element& b) const;
  /// Phase of chi(g) in units of 2 pi / m_r, reduced into [0, m_r).
  std::int64_t pairing(const Element& chi, const Element& g) const;

  /// "Z5+Z5".
  std::string to_string() const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  std::vector<std::int64_t> orders_;
  std::int64_t order_ = 1;
};

/// Largest group order for which element sets are materialised.
inline constexpr std::int64_t kMaxAbelianSetOrder = 20'000;

class AbelianCayleySet {
 public:
  /// Throws InvalidInput unless the identity is in T, T = -T, |T| <= |G|-2
  /// and S = G \ T generates G.
  static AbelianCayleySet from_complement(const AbelianGroup& g, const std::vector<AbelianGroup::Element>& t);

  const AbelianGroup& group() const { return group_; }
  /// Sorted by mixed-radix index.
  const std::vector<AbelianGroup::Element>& complement() const { return complement_; }
  int covalency() const { return static_cast<int>(complement_.size()); }
  std::int64_t valency() const { return group_.order() - covalency(); }
  std::string to_string() const;

 private:
  AbelianCayleySet(AbelianGroup g, std::vector<AbelianGroup::Element> t) : group_(std::move(g)), complement_(std::move(t)) {}
  AbelianGroup group_;
  std::vector<AbelianGroup::Element> complement_;
};

/// lambda_chi = -sum_{b in T} chi(b) for nontrivial chi, |S| for trivial chi.
template <class Scalar>
Scalar abelian_eigenvalue(const AbelianCayleySet& t, const AbelianGroup::Element& chi) {
  const AbelianGroup& g = t.group();
  if (chi.size() != g.orders().size()) throw InvalidInput("character index has the wrong rank");
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (chi[i] < 0 || chi[i] >= g.orders()[i]) throw InvalidInput("character index out of range");
  }
  if (g.index(chi) == 0) return to_scalar<Scalar>(t.valency());
  Scalar sum(0);
  for (const auto& b : t.complement()) sum += cos_2pi_frac<Scalar>(g.pairing(chi, b), g.exponent());
  return Scalar(-sum);
}

template <class Scalar>
struct AbelianSpectrum {
  Vector<Scalar> values;  // indexed by the mixed-radix index of the character
  Scalar mu_max{0};
  std::int64_t argmax = 0;
  Scalar rb{0};
};

template <class Scalar>
AbelianSpectrum<Scalar> abelian_spectrum(const AbelianCayleySet& t) {
  using std::abs;
  const AbelianGroup& g = t.group();
  AbelianSpectrum<Scalar> s;
  s.values.resize(static_cast<Eigen::Index>(g.order()));
  for (std::int64_t i = 0; i < g.order(); ++i) {
    s.values(static_cast<Eigen::Index>(i)) = abelian_eigenvalue<Scalar>(t, g.element(i));
    if (i > 0 && abs(s.values(static_cast<Eigen::Index>(i))) > s.mu_max) {
      s.mu_max = abs(s.values(static_cast<Eigen::Index>(i)));
      s.argmax = i;
    }
  }
  s.rb = ramanujan_bound<Scalar>(t.valency());
  return s;
}

/// d(p,h) = p + (p-3+2h) cos(2 pi/p) - 2 sqrt(p^2-2p+2-2h); positive means
/// class l0+2h of Z_p + Z_p contains a non-Ramanujan graph.
template <class Scalar>
Scalar d_ph(std::int64_t p, std::int64_t h) {
  using std::sqrt;
  if (p < 5 || p % 2 == 0) throw InvalidInput("p must be an odd prime >= 5");
  if (h < 1 || p < 2 * h - 3) throw InvalidInput("h must satisfy 1 <= h and 2h - 3 <= p");
  const std::int64_t radicand = p * p - 2 * p + 2 - 2 * h;
  if (radicand <= 0) throw InvalidInput("square root argument is not positive");
  return Scalar(to_scalar<Scalar>(p) + to_scalar<Scalar>(p - 3 + 2 * h) * cos_2pi_frac<Scalar>(1, p) -
                2 * sqrt(to_scalar<Scalar>(radicand)));
}

struct AbelianHatL {
  std::int64_t l0 = 0;
  std::int64_t hat_l = 0;
  /// Every Cayley graph of the group is Ramanujan (hat_l = |G| - 2).
  bool all_ramanujan = false;
  std::string reason;
};

AbelianHatL abelian_hat_l(const AbelianGroup& g, const NumericPolicy& policy = {});

/// hat_l by enumeration of classes l0+2, l0+4, ... (every class when |G| <= 13).
/// Requires |G| <= 49.
std::int64_t abelian_oracle(const AbelianGroup& g, const OracleOptions& options = {});

}  // namespace ramanujan
