#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramanujan/precision.hpp"
#include "ramanujan/spectra.hpp"

namespace ramanujan {

struct OracleOptions {
  std::uint64_t budget = 100'000'000;  // subsets per class
  int workers = 0;                     // 0: hardware concurrency
  NumericPolicy policy{};
};

/// C((m-1)/2, (l-1)/2), the number of symmetric complements of size l before
/// the generation filter. Throws InvalidInput unless 1 <= l <= m-2 is odd.
std::uint64_t class_size(Modulus m, int l);

/// Streams every generating set of covalency l in lexicographic pair order.
/// Throws BudgetExceeded when class_size exceeds the budget.
std::uint64_t for_each_in_class(Modulus m, int l, const std::function<void(const CayleySet&)>& visit,
                                const OracleOptions& options = {});

std::vector<CayleySet> enumerate_class(Modulus m, int l, const OracleOptions& options = {});

struct ClassMax {
  double mu = 0.0;
  CayleySet witness;
  std::int64_t j = 0;  // smallest j >= 1 with |mu_j(witness)| = mu
  std::uint64_t examined = 0;
};

ClassMax class_max(Modulus m, int l, const OracleOptions& options = {});

struct ClassScan {
  bool all_ramanujan = true;
  std::optional<CayleySet> violator;
  std::uint64_t examined = 0;
  int escalations = 0;
};

/// Decides whether every generating set of covalency l is Ramanujan. Cheap
/// candidates (S^(l), subgroup complements, the ordinary witness) are tried
/// before the exhaustive pass, which stops at the first certain violation.
ClassScan scan_class(Modulus m, int l, const OracleOptions& options = {});

/// l-hat by enumeration. Classes l <= l0 are skipped for m >= 15, where
/// mu(S) <= l <= RB holds trivially.
int hat_l_exhaustive(Modulus m, const OracleOptions& options = {});

struct Lemma43Report {
  wide_int m = 0, p = 0, q = 0;
  int l0 = 0;
  double class_mu = 0.0;
  double candidate_mu = 0.0;
  double delta = 0.0;
  wide_int gcd_class = 0;  // gcd(j, m) for the maximising character
  bool value_ok = false;
  bool structure_ok = false;
  std::string witness;
  std::string diagnostic;

  bool passed() const { return value_ok && structure_ok; }
};

/// Compares the exhaustive maximum of class l0+2 with max(mu0, mu1, mu2) and
/// checks that the witness has the extremal shape for its character class.
/// Requires m = p q with 3 <= p < q <= 4p-5.
Lemma43Report lemma43_crosscheck(wide_int m, const OracleOptions& options = {});

}  // namespace ramanujan
