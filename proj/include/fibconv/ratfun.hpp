#pragma once

// Canonical rational functions num/den over Q.
//
// Canonical form: gcd(num, den) = 1, num and den have jointly integer
// coefficients with unit content, and the lowest-order nonzero coefficient
// of den is positive. Structural equality is therefore mathematical equality.

#include "fibconv/poly.hpp"
#include "fibconv/rational.hpp"

#include <string>
#include <vector>

namespace fibconv {

class RatFun {
 public:
  RatFun() : den_(Poly::constant(1)) {}
  RatFun(const Poly& num);  // NOLINT(google-explicit-constructor)
  RatFun(Poly num, Poly den);
  static RatFun constant(const Rational& c) { return RatFun(Poly::constant(c)); }
  // x^k for any integer k.
  static RatFun x_power(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // den(0) != 0
  bool is_power_series() const { return den_[0] != 0; }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  friend bool operator==(const RatFun&, const RatFun&) = default;

 private:
  void canonicalize();
  Poly num_, den_;
};

inline bool equals(const RatFun& a, const RatFun& b) { return a == b; }

RatFun pow(const RatFun& f, int k);
// f(-x)
RatFun substitute_neg(const RatFun& f);
// f(c x)
RatFun substitute_scale(const RatFun& f, const Rational& c);
RatFun derivative(const RatFun& f);
// x * f'(x), the coefficient-wise multiplication by n.
RatFun theta(const RatFun& f);

// First `count` Taylor coefficients. Throws NotAPowerSeries if den(0) = 0.
std::vector<Rational> series_coeffs(const RatFun& f, int count);

// "num/(den)" in ascending degree, e.g. "x/(1 - x - x^2)".
std::string to_string(const RatFun& f);

}  // namespace fibconv
