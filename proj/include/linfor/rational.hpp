#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace linfor {

// Exact fractions on arbitrary-precision integers. cpp_rational keeps the
// canonical form (denominator > 0, gcd(|num|, den) = 1) on every operation,
// so values compare and print deterministically.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

// Exact floor/ceil; cpp_int division truncates toward zero, so negative
// numerators need the usual correction.
inline BigInt floor_rat(const Rational& r) {
  BigInt num = numerator(r), den = denominator(r);  // den > 0
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

inline BigInt ceil_rat(const Rational& r) {
  BigInt num = numerator(r), den = denominator(r);
  BigInt q = num / den;
  if (num > 0 && q * den != num) ++q;
  return q;
}

inline long long ceil_rat_ll(const Rational& r) {
  return ceil_rat(r).convert_to<long long>();
}

inline std::string rat_str(const Rational& r) {
  BigInt num = numerator(r), den = denominator(r);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

}  // namespace linfor
