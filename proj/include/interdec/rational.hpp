#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace interdec {

/// Exact rational number. GMP keeps it canonical (gcd 1, positive denominator)
/// as long as every value is built through `make_rat` / `parse_rat`.
using Rat = mpq_class;

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& value);

/// Parses "p", "-p" or "p/q". Rejects zero denominators and junk.
Rat parse_rat(std::string_view text);

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace interdec
