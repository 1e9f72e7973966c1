#pragma once

// Dense univariate polynomials over the rationals. coeffs[i] multiplies x^i;
// the highest stored coefficient is nonzero, and the zero polynomial is empty.

#include "fibconv/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace fibconv {

class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  static Poly x() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Coefficient of x^i; zero outside the stored range.
  Rational operator[](int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  // Index of the lowest nonzero coefficient; -1 for zero.
  int low_degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

// Euclidean division. Throws DivisionByZero when `b` is zero.
DivRem divrem(const Poly& a, const Poly& b);

// Integer coefficients with unit content and positive lowest-order
// coefficient; zero stays zero.
Poly primitive_part(const Poly& p);

// gcd over Q in the normalization of primitive_part; gcd(0, 0) = 0 and a
// constant gcd is reported as 1.
Poly gcd(const Poly& a, const Poly& b);

struct Bezout {
  Poly u, v, g;  // u*a + v*b = g = gcd(a, b)
};

// Extended Euclid; `g` uses the same normalization as gcd().
Bezout bezout(const Poly& a, const Poly& b);

// Inverse of `a` modulo `m`, assuming gcd(a, m) = 1. Throws InvalidParameter
// otherwise.
Poly inverse_mod(const Poly& a, const Poly& m);

Rational evaluate(const Poly& p, const Rational& x);
Poly derivative(const Poly& p);
// p(c x)
Poly substitute_scale(const Poly& p, const Rational& c);
// p mod x^n
Poly truncate(const Poly& p, int n);
// p / x^k for k <= low_degree(p)
Poly divide_by_x_power(const Poly& p, int k);

// Ascending-degree text, e.g. "1 - x - x^2" or "x - 1/2*x^3".
std::string to_string(const Poly& p);

}  // namespace fibconv
