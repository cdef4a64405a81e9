#include "ramanujan/precision.hpp"

namespace ramanujan {

void NumericPolicy::validate() const {
  if (!(escalation_margin > 0)) throw InvalidInput("escalation margin must be positive");
  if (extended_digits < 30) throw InvalidInput("extended precision needs at least 30 digits");
}

PrecisionScope::PrecisionScope(int digits) : previous_(Extended::default_precision()) {
  if (digits < 30) throw InvalidInput("extended precision needs at least 30 digits");
  Extended::default_precision(static_cast<unsigned>(digits));
}

PrecisionScope::~PrecisionScope() { Extended::default_precision(previous_); }

}  // namespace ramanujan
