#pragma once

#include "chordlab/bigint.hpp"

#include <string>
#include <vector>

namespace chordlab {

/// Formal power series c_0 + c_1 t + ... + c_N t^N over exact rationals,
/// truncated at order N. Binary operations truncate to the smaller order.
class RationalSeries {
 public:
  // The zero series of the given order.
  explicit RationalSeries(int order);
  explicit RationalSeries(std::vector<Rational> coefficients);

  static RationalSeries constant(const Rational& c, int order);
  // t at the given order (order >= 1 keeps the t term).
  static RationalSeries variable(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  RationalSeries truncated(int order) const;
  RationalSeries derivative() const;

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const Rational& r, const RationalSeries& a);
  RationalSeries operator-() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

inline RationalSeries add(const RationalSeries& a, const RationalSeries& b) { return a + b; }
inline RationalSeries mul(const RationalSeries& a, const RationalSeries& b) { return a * b; }
inline RationalSeries scale(const RationalSeries& a, const Rational& r) { return r * a; }

/// a^k by repeated multiplication.
RationalSeries power(const RationalSeries& a, int k);
/// Multiplicative inverse; the constant term must be nonzero.
RationalSeries inverse(const RationalSeries& a);

/// (1 - 2t)^{1/2} by the binomial series.
RationalSeries sqrt_one_minus_2t(int order);

/// sum_{k>=0} a^k / k!, truncated to `order`. The constant term of `a` must
/// be zero (ValidationError otherwise).
RationalSeries exp_series(const RationalSeries& a, int order);

/// Column-s EGF of the short-chord triangle:
///   e^{-1 + sqrt(1-2t)} / sqrt(1-2t) * (1 - sqrt(1-2t))^s / s!
RationalSeries egf_L_column(int s, int order);

/// Exponential Riordan product of (g, f) with t e^t, where
/// g = e^{-1+sqrt(1-2t)} / sqrt(1-2t) and f = 1 - sqrt(1-2t):  g * f * e^f.
RationalSeries riordan_short_chord_total(int order);

/// 1/sqrt(1-2t) - 1 from the coefficient formula C(2n,n)/2^n (n >= 1).
RationalSeries short_chord_total_closed_form(int order);

/// n! * c_n for n = 0..order.
std::vector<Rational> egf_counts(const RationalSeries& a);

/// "1 - t - 1/2 t^2 - 1/2 t^3"; zero terms are skipped, the zero series
/// prints as "0".
std::string to_string(const RationalSeries& a);
/// [[p0,q0],[p1,q1],...] with bare integer literals.
std::string to_json(const RationalSeries& a);

}  // namespace chordlab
