#pragma once

#include <gmpxx.h>

#include <vector>

namespace hipstergf {

using Integer = mpz_class;
using Coefficient = mpq_class;

/// Default truncation order used by the CLI and the verification suite.
inline constexpr int kDefaultOrder = 512;

// mpq_class does not reduce num/den pairs on construction; these do.
Coefficient make_rational(const Integer& num, const Integer& den);
Coefficient make_rational(long num, long den = 1);

/// Truncated formal power series with exact rational coefficients.
///
/// A series of order N stores the coefficients of x^0 .. x^N inclusive.
/// All arithmetic is exact; operations mixing different orders throw rather
/// than truncating silently.
class PowerSeries {
 public:
  PowerSeries(std::vector<Coefficient> coeffs, int order);

  static PowerSeries zero(int order);
  static PowerSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coefficient>& coeffs() const { return coeffs_; }
  const Coefficient& at(int n) const;

  /// True when every coefficient has denominator 1 (a counting series).
  bool integral() const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Coefficient> coeffs_;
};

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& a, const Coefficient& factor);

/// Multiplication by x: shifts coefficients up one slot, truncating at the
/// series order.
PowerSeries shift_up(const PowerSeries& a);

/// a(x^2) truncated to a's order: coefficient 2k is a_k, odd slots are zero.
PowerSeries substitute_square(const PowerSeries& a);

/// Square root with constant term 1; requires a_0 = 1.
PowerSeries sqrt_series(const PowerSeries& a);

const Coefficient& coefficient(const PowerSeries& a, int n);

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return add(a, b); }
inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return sub(a, b); }
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return mul(a, b); }

}  // namespace hipstergf
