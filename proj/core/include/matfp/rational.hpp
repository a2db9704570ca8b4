#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace matfp {

using Rational = boost::multiprecision::cpp_rational;

inline std::string render_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace matfp
