#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cli/golden.hpp"
#include "ramanujan/integer.hpp"
#include "ramanujan/oracle.hpp"

// Reproductions of the printed tables, each row checked against golden.hpp.

namespace ramanujan::tables {

struct SmallOrderCheck {
  int m = 0;
  int l0 = 0;  // 0 below 15
  int hat_l = 0;
  int expected_l0 = 0;
  int expected_hat_l = 0;
  bool pass = false;
};

/// l0 and l-hat for odd 3 <= m <= 55, by classification or by enumeration.
std::vector<SmallOrderCheck> table1(bool use_oracle, const OracleOptions& options = {});

struct MarkerCheck {
  int c = 0;
  int k = 0;
  wide_int m = 0;
  char marker = '.';  // '1', '2', '3', '.', or '-' when m is not in J for this c
  char expected = '.';
  bool pass = false;
};

/// Markers for 4 <= k <= k_max and every c; rows beyond the printed range
/// carry expected = '?' and always pass.
std::vector<MarkerCheck> table3(int k_max, const NumericPolicy& policy = {});

struct MarginCheck {
  std::int64_t y = 0;
  wide_int p = 0;
  wide_int q = 0;
  bool pq_match = false;
  std::array<double, 3> margins{};  // mu0 - RB, mu1 - RB, mu2 - RB
  std::array<bool, 3> match{};
  bool pass = false;
};

/// Rows of a printed margin table recomputed at `digits` significant digits.
std::vector<MarginCheck> margin_table(const golden::MarginTable& table, int digits);

struct ConstantCheck {
  std::string name;
  double value = 0.0;
  double printed = 0.0;
  bool pass = false;  // value truncated to 4 decimals equals the printed one
};

/// gamma_1..gamma_4 and xbar1, gamma5, xunder2 for each c, plus the ordering
/// xbar1 < gamma5 < xunder2 as rows named "order(c)".
std::vector<ConstantCheck> table2();

}  // namespace ramanujan::tables
