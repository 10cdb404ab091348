#pragma once

#include <gmpxx.h>
#include <string>

namespace lkb {

// Exact integer coefficients. Matrix entries of braid-word images grow
// multiplicatively with word length, so fixed-width integers are not safe.
using Int = mpz_class;

inline std::string to_decimal(const Int& x) { return x.get_str(); }

inline Int parse_decimal(const std::string& s) {
  return Int(s);  // throws std::invalid_argument on malformed input
}

}  // namespace lkb
