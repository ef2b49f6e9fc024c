#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace chordlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// (2n-1)!! = 1*3*...*(2n-1); equals 1 for n = 0.
BigInt double_factorial_odd(int n);
BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt catalan(int n);

inline std::string to_string(const BigInt& v) { return v.str(); }
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace chordlab
