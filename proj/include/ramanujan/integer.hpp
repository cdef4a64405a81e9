#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ramanujan {

// Orders in the family tables reach ~10^27, past 64 bits.
using wide_int = __int128;
using wide_uint = unsigned __int128;

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical claim the library relies on turned out false for some input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BudgetExceeded : public InvalidInput {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required)
      : InvalidInput(what), required_(required) {}
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

std::string to_string(wide_int v);
wide_int parse_wide(std::string_view text);

/// Floor of the square root, exact for every 128-bit unsigned input.
wide_uint isqrt(wide_uint n);

inline bool is_perfect_square(wide_uint n, wide_uint* root = nullptr) {
  const wide_uint r = isqrt(n);
  if (root) *root = r;
  return r * r == n;
}

constexpr wide_int mod_floor(wide_int a, wide_int m) {
  const wide_int r = a % m;
  return r < 0 ? r + m : r;
}

constexpr wide_int gcd(wide_int a, wide_int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const wide_int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// a*b mod m in [0, m) without overflow for any m > 0.
wide_int mul_mod(wide_int a, wide_int b, wide_int m);

inline bool fits_int64(wide_int v) {
  return v >= INT64_MIN && v <= INT64_MAX;
}

/// Checked conversion; throws InvalidInput when the value needs more than 63 bits.
std::int64_t narrow_int64(wide_int v, const char* what);

/// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

}  // namespace ramanujan
