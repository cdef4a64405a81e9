#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramanujan/classify.hpp"
#include "ramanujan/numtheory.hpp"

namespace ramanujan {

struct FamilyEntry {
  FamilyPoint point;
  bool p_prime = false;
  bool q_prime = false;
  /// Decision for p*q; absent out of domain.
  std::optional<Verdict> verdict;
};

/// Family points for 0 <= y <= y_max. Points with p <= 0 or q <= 0 are kept
/// and flagged; with require_prime, in-domain points where p or q is
/// composite are dropped. c must be one of +-1, +-3, +-5.
std::vector<FamilyEntry> family_scan(std::int64_t a, int c, std::int64_t y_max, bool require_prime,
                                     const NumericPolicy& policy = {});

struct ExceptionalCount {
  int c = 0;
  std::int64_t k_min = 0;
  std::int64_t k_max = 0;
  std::vector<std::int64_t> type_I;
  std::vector<std::int64_t> type_II;
  std::vector<std::int64_t> type_III;

  /// |type_II| / (x / log(x)^2) with x = k_max.
  double type_II_ratio() const;
};

/// First k for which f_c(k) counts towards J: 19 for c = -5, 4 otherwise.
std::int64_t family_k_min(int c);

/// Classifies f_c(k) for k_min(c) <= k <= k_max and buckets the exceptional
/// ones by type. Requires f_c(k_max) < 2^63.
ExceptionalCount count_exceptionals(int c, std::int64_t k_max, const NumericPolicy& policy = {});

/// Exceptional odd orders 15 <= m <= x, ascending.
std::vector<std::int64_t> exceptional_orders(std::int64_t x, const NumericPolicy& policy = {});

}  // namespace ramanujan
