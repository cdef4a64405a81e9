#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ramanujan::detail {

// Exhaustive search over complements T = {0} u (r chosen negation pairs).
// `weights` has one column per pair and one row per character (up to
// conjugation); entry (c, i) is chi_c(g_i) + chi_c(-g_i). The eigenvalue of
// character c is -(1 + sum of chosen columns)(c).

using GenerationTest = std::function<bool(std::span<const int>)>;

enum class SearchMode { maximum, find_violation };

struct SearchRequest {
  const Eigen::MatrixXd* weights = nullptr;
  int choose = 0;
  GenerationTest generates;  // empty: every subset generates
  SearchMode mode = SearchMode::maximum;
  double rb = 0.0;    // find_violation: Ramanujan bound of the class
  double band = 0.0;  // find_violation: |mu - rb| <= band is borderline
  int workers = 1;
};

struct SearchResult {
  std::uint64_t examined = 0;  // generating subsets evaluated
  std::uint64_t skipped = 0;   // non-generating subsets
  double best = -1.0;
  std::vector<int> best_set;
  Eigen::Index best_character = -1;
  bool violation = false;
  std::vector<int> violation_set;
  std::vector<std::vector<int>> borderline;
};

/// max_c |1 + sum_{i in set} weights(c, i)|, and the first character attaining it.
double set_mu(const Eigen::MatrixXd& weights, std::span<const int> set, Eigen::Index* character = nullptr);

SearchResult pair_search(const SearchRequest& request);

}  // namespace ramanujan::detail
