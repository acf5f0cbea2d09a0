#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace falsetheta {

// Exact scalars.  mpq_class already maintains the canonical form we rely on
// everywhere (lowest terms, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "a" or "a/b" in base 10.
inline Rational rational_from_string(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("unparseable rational: " + text);
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator: " + text);
  }
  r.canonicalize();
  return r;
}

// Always "num/den" (den > 0), so serialized coefficient lists have one shape.
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace falsetheta
