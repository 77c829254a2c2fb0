#ifndef SHAPELEMMA_RATIONAL_HPP
#define SHAPELEMMA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shapelemma {

// Exact rational scalar. GMP keeps mpq_class canonical (lowest terms,
// positive denominator) after every arithmetic operation; values built
// from raw numerator/denominator pairs go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1)
{
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "a/b", or "a" when the denominator is one.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace shapelemma

#endif
