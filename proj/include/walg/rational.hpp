#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace walg {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Renders "p" for integers and "p/q" otherwise; all file formats use this.
inline std::string rat_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace walg
