#ifndef SYMPOW_RATIONAL_HPP
#define SYMPOW_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sympow {

// Exact arithmetic only; no floating point appears anywhere in the library.
// cpp_rational keeps lowest terms and a positive denominator by construction.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long num, long den = 1) { return Rat(num, den); }

// Canonical external form "p/q", always with the denominator ("1/1", "-3/2").
inline std::string rat_str(const Rat& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Int floor_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int t = n / d;
  if (n < 0 && n % d != 0) --t;
  return t;
}

inline Int ceil_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int t = n / d;
  if (n > 0 && n % d != 0) ++t;
  return t;
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

} // namespace sympow

#endif
