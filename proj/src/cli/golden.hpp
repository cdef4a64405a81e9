#pragma once

#include <array>
#include <cstdint>
#include <string_view>

// Reference values printed in the source tables. Margins are kept as the
// printed mantissa and exponent so that comparisons respect the display
// precision.

namespace ramanujan::golden {

struct SmallOrderRow {
  int m;
  int l0;  // 0 where the table leaves the cell blank
  int hat_l;
};

inline constexpr std::array<SmallOrderRow, 27> kSmallOrders = {{
    {3, 0, 1},    {5, 0, 3},    {7, 0, 5},    {9, 0, 7},    {11, 0, 9},   {13, 0, 11},  {15, 5, 7},
    {17, 5, 7},   {19, 5, 7},   {21, 7, 7},   {23, 7, 9},   {25, 7, 9},   {27, 7, 7},   {29, 7, 9},
    {31, 9, 9},   {33, 9, 9},   {35, 9, 11},  {37, 9, 11},  {39, 9, 9},   {41, 9, 11},  {43, 11, 11},
    {45, 11, 11}, {47, 11, 13}, {49, 11, 13}, {51, 11, 11}, {53, 11, 13}, {55, 11, 13},
}};

struct ConstantRow {
  int c;
  double xbar1;
  double gamma5;
  double xunder2;
};

inline constexpr double kGamma1 = 1.3843;
inline constexpr double kGamma2 = 1.5765;
inline constexpr double kGamma3 = 1.7579;
inline constexpr double kGamma4 = 1.7925;

inline constexpr std::array<ConstantRow, 6> kConstants = {{
    {-5, 1.4300, 1.8297, 1.8575},
    {-3, 1.5313, 1.8653, 1.8828},
    {-1, 1.6327, 1.8980, 1.9081},
    {1, 1.7340, 1.9284, 1.9335},
    {3, 1.8353, 1.9570, 1.9588},
    {5, 1.9366, 1.9839, 1.9841},
}};

inline constexpr double kXi1 = 2.0451;
inline constexpr double kXi2 = 3.9365;

/// Markers for k = 4..50, one character per k:
/// '1' type I, '2' type II, '3' the square 49, '.' ordinary, '-' not in J_c.
struct MarkerColumn {
  int c;
  std::string_view markers;
};

inline constexpr int kMarkerFirstK = 4;
inline constexpr int kMarkerLastK = 50;

inline constexpr std::array<MarkerColumn, 6> kExceptionalMarkers = {{
    {-5, "---------------..12.1..11....11.11.2...2..1.1.."},
    {-3, ".1..1..1..1........1.....1..1...........1..1..2"},
    {-1, "23211.1..1.2.1..1.11...1..1....1.12...11....1.1"},
    {1, "1.1..11.....1..1.1..21....11..1.....1....11..1."},
    {3, ".1..1..1..1..2..1..1..1..2..1..2..1..1.....1..1"},
    {5, "121111.1211.2111.21.1.1.11.221..11.1.2111.121.."},
}};

struct Printed {
  double mantissa;
  int exponent;
};

struct MarginRow {
  std::int64_t y;
  std::int64_t p;
  std::int64_t q;
  std::array<Printed, 3> margins;  // mu0 - RB, mu1 - RB, mu2 - RB
};

struct MarginTable {
  std::int64_t a;
  int c;
  std::array<MarginRow, 8> rows;
};

inline constexpr MarginTable kTable4 = {1, -5, {{
    {7, 109, 181, {{{-1.11, -2}, {-8.21, -2}, {-2.17, -2}}}},
    {17, 1879, 3301, {{{-7.58, -4}, {-4.86, -3}, {-1.09, -3}}}},
    {25, 4591, 8101, {{{-3.11, -4}, {-1.98, -3}, {-4.42, -4}}}},
    {35, 9601, 16981, {{{-1.49, -4}, {-9.50, -4}, {-2.09, -4}}}},
    {40, 12781, 22621, {{{-1.12, -4}, {-7.13, -4}, {-1.57, -4}}}},
    {62, 32119, 56941, {{{-4.46, -5}, {-2.83, -4}, {-6.20, -5}}}},
    {82, 57259, 101581, {{{-2.50, -5}, {-1.59, -4}, {-3.47, -5}}}},
    {104, 93229, 165469, {{{-1.53, -5}, {-9.77, -5}, {-2.12, -5}}}},
}}};

inline constexpr MarginTable kTable5 = {1, -7, {{
    {13, 937, 1637, {{{1.07, -4}, {-8.13, -3}, {-6.21, -4}}}},
    {43, 14887, 26357, {{{4.70, -6}, {-5.11, -4}, {-3.36, -5}}}},
    {60, 29983, 53149, {{{2.30, -6}, {-2.54, -4}, {-1.64, -5}}}},
    {81, 55813, 99013, {{{1.22, -6}, {-1.36, -4}, {-8.73, -6}}}},
    {158, 218437, 387917, {{{3.11, -7}, {-3.48, -5}, {-2.19, -6}}}},
    {211, 392383, 697013, {{{1.73, -7}, {-1.93, -5}, {-1.21, -6}}}},
    {225, 446773, 793669, {{{1.52, -7}, {-1.70, -5}, {-1.06, -6}}}},
    {249, 548221, 973957, {{{1.23, -7}, {-1.38, -5}, {-8.69, -7}}}},
}}};

inline constexpr MarginTable kTable6 = {64, 5, {{
    {39, 103507276549, 407634920449, {{{-5.79, -11}, {2.17, -13}, {-6.61, -11}}}},
    {134, 1223336627269, 4817774691329, {{{-4.90, -12}, {1.84, -14}, {-5.59, -12}}}},
    {165, 1854993585541, 7305381823489, {{{-3.23, -12}, {1.21, -14}, {-3.69, -12}}}},
    {178, 2158870385989, 8502116992001, {{{-2.77, -12}, {1.04, -14}, {-3.17, -12}}}},
    {279, 5304571299589, 20890594526209, {{{-1.13, -12}, {4.25, -15}, {-1.29, -12}}}},
    {433, 12777690072709, 50321416668161, {{{-4.69, -13}, {1.76, -15}, {-5.35, -13}}}},
    {468, 14927014718149, 58785940423681, {{{-4.02, -13}, {1.51, -15}, {-4.58, -13}}}},
    {499, 16970160763909, 66832308978689, {{{-3.53, -13}, {1.32, -15}, {-4.03, -13}}}},
}}};

struct HlRow {
  int c;
  double value;
};

inline constexpr std::array<HlRow, 6> kHardyLittlewood = {{
    {-5, 1.18219}, {-3, 1.18219}, {-1, 1.12674}, {1, 0.927881}, {3, 0.807233}, {5, 1.77328},
}};
inline constexpr double kHardyLittlewoodTolerance = 0.02;

inline constexpr std::array<std::uint64_t, 5> kFirstAvoidingPrimes = {97, 577, 827, 853, 947};

/// Reference l-hat for Z_p + Z_p, as the offset above l0 = 2p - 3.
inline constexpr int kSquareGroupOffset5 = 4;
inline constexpr std::array<int, 4> kSquareGroupOffsetTwo = {7, 11, 13, 17};

/// |printed - computed| <= one unit in the last printed digit.
bool matches_printed(const Printed& printed, double computed);

}  // namespace ramanujan::golden
