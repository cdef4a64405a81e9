#include "ramanujan/spectra.hpp"

#include <algorithm>
#include <sstream>

namespace ramanujan {

Modulus::Modulus(wide_int m) : m_(m) {
  if (m < 3) throw InvalidInput("order must be at least 3, got " + ramanujan::to_string(m));
  if (m % 2 == 0) throw InvalidInput("order must be odd, got " + ramanujan::to_string(m));
}

CayleySet CayleySet::from_complement(Modulus modulus, const std::vector<wide_int>& residues) {
  const wide_int m = modulus.value();
  std::vector<wide_int> t;
  t.reserve(residues.size());
  for (wide_int r : residues) t.push_back(mod_floor(r, m));
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());

  if (t.empty() || t.front() != 0) throw InvalidInput("complement must contain 0");
  for (wide_int r : t) {
    if (!std::binary_search(t.begin(), t.end(), mod_floor(-r, m))) {
      throw InvalidInput("complement is not closed under negation: missing -" + ramanujan::to_string(r));
    }
  }
  if (wide_int(t.size()) > m - 2) throw InvalidInput("complement leaves fewer than two generators");

  // gcd(m, S) = 1; consecutive elements of S appear early since T is small.
  wide_int g = m;
  for (wide_int s = 1; s < m && g != 1; ++s) {
    if (!std::binary_search(t.begin(), t.end(), s)) g = gcd(g, s);
  }
  if (g != 1) throw InvalidInput("S does not generate Z_m (all elements divisible by " + ramanujan::to_string(g) + ")");
  return CayleySet(m, std::move(t));
}

bool CayleySet::contains(wide_int r) const {
  return std::binary_search(complement_.begin(), complement_.end(), mod_floor(r, m_));
}

std::string CayleySet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < complement_.size(); ++i) {
    if (i) out << ',';
    out << ramanujan::to_string(complement_[i]);
  }
  out << '}';
  return out.str();
}

RamanujanDecision is_ramanujan(const CayleySet& T, const NumericPolicy& policy) {
  policy.validate();
  const double rb = ramanujan_bound<double>(T.valency());
  const double margin = rb - mu_max<double>(T);
  return decide_nonnegative(margin, rb, policy, [&] {
    return Extended(ramanujan_bound<Extended>(T.valency()) - mu_max<Extended>(T));
  });
}

CayleySet sl_complement(Modulus m, int l) {
  if (l < 1 || l % 2 == 0) throw InvalidInput("covalency must be odd and positive");
  if (wide_int(l) > m.value() - 2) throw InvalidInput("covalency must be at most m-2");
  std::vector<wide_int> t{0};
  for (int i = 1; i <= (l - 1) / 2; ++i) {
    t.push_back(i);
    t.push_back(-i);
  }
  return CayleySet::from_complement(m, t);
}

}  // namespace ramanujan
