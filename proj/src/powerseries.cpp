#include "chordlab/powerseries.hpp"

#include "chordlab/errors.hpp"

#include <algorithm>

namespace chordlab {

RationalSeries::RationalSeries(int order) {
  if (order < 0) throw ValidationError("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order + 1), Rational(0));
}

RationalSeries::RationalSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw ValidationError("series needs at least a constant term");
}

RationalSeries RationalSeries::constant(const Rational& c, int order) {
  RationalSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

RationalSeries RationalSeries::variable(int order) {
  RationalSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

RationalSeries RationalSeries::truncated(int order) const {
  if (order < 0) throw ValidationError("series order must be nonnegative");
  RationalSeries s(order);
  for (int i = 0; i <= std::min(order, this->order()); ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

RationalSeries RationalSeries::derivative() const {
  RationalSeries d(std::max(order() - 1, 0));
  for (int i = 1; i <= order(); ++i) d.coeffs_[i - 1] = coeffs_[i] * i;
  return d;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries s(std::min(a.order(), b.order()));
  for (int i = 0; i <= s.order(); ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return s;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) { return a + (-b); }

RationalSeries RationalSeries::operator-() const {
  RationalSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  const int order = std::min(a.order(), b.order());
  RationalSeries s(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return s;
}

RationalSeries operator*(const Rational& r, const RationalSeries& a) {
  RationalSeries s = a;
  for (auto& c : s.coeffs_) c *= r;
  return s;
}

RationalSeries power(const RationalSeries& a, int k) {
  if (k < 0) throw ValidationError("negative series power");
  RationalSeries result = RationalSeries::constant(1, a.order());
  for (int i = 0; i < k; ++i) result = result * a;
  return result;
}

RationalSeries inverse(const RationalSeries& a) {
  if (a[0] == 0) throw ValidationError("series with zero constant term has no inverse");
  std::vector<Rational> c(static_cast<std::size_t>(a.order() + 1));
  c[0] = 1 / a[0];
  for (int n = 1; n <= a.order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += a[k] * c[n - k];
    c[n] = -acc / a[0];
  }
  return RationalSeries(std::move(c));
}

RationalSeries sqrt_one_minus_2t(int order) {
  if (order < 0) throw ValidationError("series order must be nonnegative");
  std::vector<Rational> c(static_cast<std::size_t>(order + 1));
  // c_k = C(1/2, k) (-2)^k; successive ratio (1/2 - (k-1)) / k * (-2).
  c[0] = 1;
  for (int k = 1; k <= order; ++k) c[k] = c[k - 1] * (Rational(1, 2) - (k - 1)) / k * -2;
  return RationalSeries(std::move(c));
}

RationalSeries exp_series(const RationalSeries& a, int order) {
  if (a[0] != 0) throw ValidationError("exp_series needs a zero constant term");
  const RationalSeries base = a.truncated(order);
  RationalSeries sum = RationalSeries::constant(1, order);
  RationalSeries term = RationalSeries::constant(1, order);
  // a^k starts at t^k, so terms past k = order vanish.
  for (int k = 1; k <= order; ++k) {
    term = Rational(1, k) * (term * base);
    sum = sum + term;
  }
  return sum;
}

namespace {

// g = e^{-1+sqrt(1-2t)} / sqrt(1-2t) and f = 1 - sqrt(1-2t).
struct RiordanPair {
  RationalSeries g;
  RationalSeries f;
};

RiordanPair short_chord_pair(int order) {
  const RationalSeries root = sqrt_one_minus_2t(order);
  const RationalSeries one = RationalSeries::constant(1, order);
  const RationalSeries exponent = root - one;
  return {exp_series(exponent, order) * inverse(root), one - root};
}

}  // namespace

RationalSeries egf_L_column(int s, int order) {
  if (s < 0) throw ValidationError("column index must be nonnegative");
  const auto [g, f] = short_chord_pair(order);
  return Rational(1, factorial(s)) * (g * power(f, s));
}

RationalSeries riordan_short_chord_total(int order) {
  const auto [g, f] = short_chord_pair(order);
  return g * f * exp_series(f, order);
}

RationalSeries short_chord_total_closed_form(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order + 1));
  c[0] = 0;
  for (int n = 1; n <= order; ++n) c[n] = Rational(binomial(2 * n, n), BigInt(1) << n);
  return RationalSeries(std::move(c));
}

std::vector<Rational> egf_counts(const RationalSeries& a) {
  std::vector<Rational> out;
  BigInt fact = 1;
  for (int n = 0; n <= a.order(); ++n) {
    if (n > 0) fact *= n;
    out.push_back(a[n] * fact);
  }
  return out;
}

std::string to_string(const RationalSeries& a) {
  std::string out;
  for (int n = 0; n <= a.order(); ++n) {
    const Rational& c = a[n];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool show_coefficient = n == 0 || magnitude != 1;
    if (show_coefficient) out += to_string(magnitude);
    if (n >= 1) {
      if (show_coefficient) out += ' ';
      out += n == 1 ? "t" : "t^" + std::to_string(n);
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_json(const RationalSeries& a) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::string out = "[";
  for (int n = 0; n <= a.order(); ++n) {
    if (n) out += ',';
    out += "[" + numerator(a[n]).str() + "," + denominator(a[n]).str() + "]";
  }
  return out + "]";
}

}  // namespace chordlab
