#pragma once

#include <string>

#include "sadf/errors.hpp"

namespace sadf {

/// Three-valued truth value. `U` carries less information than either
/// decided value; `T` and `F` are incomparable.
enum class Truth : unsigned char { T, F, U };

inline bool decided(Truth v) { return v != Truth::U; }

/// Information ordering: a <= b iff a is U or a equals b.
inline bool leq_info(Truth a, Truth b) { return a == Truth::U || a == b; }

/// Information meet: agreement is kept, disagreement collapses to U.
inline Truth meet(Truth a, Truth b) { return a == b ? a : Truth::U; }

inline char to_char(Truth v) {
  switch (v) {
    case Truth::T: return 't';
    case Truth::F: return 'f';
    default: return 'u';
  }
}

inline Truth truth_from_char(char c) {
  switch (c) {
    case 't': return Truth::T;
    case 'f': return Truth::F;
    case 'u': return Truth::U;
    default:
      throw DomainError(std::string("invalid truth value '") + c +
                        "', expected t, f or u");
  }
}

}  // namespace sadf
