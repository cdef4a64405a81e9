#include "ramanujan/integer.hpp"

#include <algorithm>
#include <cmath>

namespace ramanujan {

std::string to_string(wide_int v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  wide_uint u = negative ? wide_uint(0) - wide_uint(v) : wide_uint(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

wide_int parse_wide(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty integer");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw InvalidInput("malformed integer: " + std::string(text));
  constexpr wide_int limit = wide_int((wide_uint(1) << 126) - 1);
  wide_int value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9') throw InvalidInput("malformed integer: " + std::string(text));
    if (value > (limit - (ch - '0')) / 10) throw InvalidInput("integer out of range: " + std::string(text));
    value = value * 10 + (ch - '0');
  }
  return negative ? -value : value;
}

wide_uint isqrt(wide_uint n) {
  if (n < 2) return n;
  // Seed from long double, then correct; Newton from above converges monotonically.
  wide_uint x = wide_uint(std::sqrt(static_cast<long double>(n))) + 2;
  while (true) {
    const wide_uint y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;
  while (x < UINT64_MAX && (x + 1) * (x + 1) <= n) ++x;
  return x;
}

wide_int mul_mod(wide_int a, wide_int b, wide_int m) {
  a = mod_floor(a, m);
  b = mod_floor(b, m);
  constexpr wide_int kHalf = wide_int(1) << 62;
  if (a < kHalf && b < kHalf) return a * b % m;
  wide_int result = 0;
  while (b > 0) {
    if (b & 1) {
      result += a;
      if (result >= m) result -= m;
    }
    a += a;
    if (a >= m) a -= m;
    b >>= 1;
  }
  return result;
}

std::int64_t narrow_int64(wide_int v, const char* what) {
  if (!fits_int64(v)) throw InvalidInput(std::string(what) + " exceeds the 64-bit range");
  return static_cast<std::int64_t>(v);
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  wide_uint result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace ramanujan
