#include "golden.hpp"

#include <cmath>

namespace ramanujan::golden {

bool matches_printed(const Printed& printed, double computed) {
  const double value = printed.mantissa * std::pow(10.0, printed.exponent);
  const double unit = std::pow(10.0, printed.exponent - 2);
  return std::abs(computed - value) <= unit * (1 + 1e-9);
}

}  // namespace ramanujan::golden
