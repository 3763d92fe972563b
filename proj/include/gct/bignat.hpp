#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace gct {

// Arbitrary-precision natural number: group orders, class counts, p(n),
// both sides of every bound. All verdicts compare BigNat to BigNat.
using BigNat = boost::multiprecision::cpp_int;

// High-precision reals, used only for reporting (log margins, HR ratios),
// never inside an integer verdict.
using Real50 = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;

inline BigNat bignat_pow(const BigNat& base, unsigned exp) {
  BigNat r = 1, b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

}  // namespace gct
