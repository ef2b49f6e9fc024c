#include "chordlab/bigint.hpp"

#include "chordlab/errors.hpp"

namespace chordlab {

BigInt double_factorial_odd(int n) {
  if (n < 0) throw ValidationError("double factorial of negative count");
  BigInt r = 1;
  for (int i = 1; i <= n; ++i) r *= 2 * i - 1;
  return r;
}

BigInt factorial(int n) {
  if (n < 0) throw ValidationError("factorial of negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) here
  }
  return r;
}

BigInt catalan(int n) {
  if (n < 0) throw ValidationError("catalan of negative number");
  return binomial(2 * n, n) / (n + 1);
}

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace chordlab
