#include "fibconv/ratfun.hpp"

#include "fibconv/error.hpp"

namespace fibconv {

RatFun::RatFun(const Poly& num) : num_(num), den_(Poly::constant(1)) { canonicalize(); }

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalize();
}

RatFun RatFun::x_power(int k) {
  if (k >= 0) return RatFun(Poly::monomial(Rational(1), k));
  return RatFun(Poly::constant(1), Poly::monomial(Rational(1), -k));
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divrem(num_, g).quotient;
    den_ = divrem(den_, g).quotient;
  }
  // Joint primitive scaling: integer coefficients, unit content, and den's
  // lowest-order coefficient positive.
  BigInt lcm_den(1), content(0);
  for (const Poly* p : {&num_, &den_})
    for (const auto& c : p->coeffs())
      if (c != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  for (const Poly* p : {&num_, &den_})
    for (const auto& c : p->coeffs()) {
      if (c == 0) continue;
      BigInt n = c.get_num() * (lcm_den / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
  Rational s(lcm_den, content);
  s.canonicalize();
  if (den_[den_.low_degree()] < 0) s = -s;
  num_ *= s;
  den_ *= s;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a) {
  RatFun r = a;
  r.num_ = -r.num_;
  return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun pow(const RatFun& f, int k) {
  if (k < 0) return pow(RatFun::constant(1) / f, -k);
  RatFun r = RatFun::constant(1), base = f;
  for (; k > 0; k >>= 1) {
    if (k & 1) r *= base;
    base *= base;
  }
  return r;
}

RatFun substitute_scale(const RatFun& f, const Rational& c) {
  return RatFun(substitute_scale(f.num(), c), substitute_scale(f.den(), c));
}

RatFun substitute_neg(const RatFun& f) { return substitute_scale(f, Rational(-1)); }

RatFun derivative(const RatFun& f) {
  const Poly& n = f.num();
  const Poly& d = f.den();
  return RatFun(derivative(n) * d - n * derivative(d), d * d);
}

RatFun theta(const RatFun& f) { return RatFun(Poly::x()) * derivative(f); }

std::vector<Rational> series_coeffs(const RatFun& f, int count) {
  if (!f.is_power_series())
    throw NotAPowerSeries("series_coeffs: denominator " + to_string(f.den()) + " vanishes at 0");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  const Poly& num = f.num();
  const Poly& den = f.den();
  const Rational inv0 = 1 / den[0];
  for (int n = 0; n < count; ++n) {
    Rational c = num[n];
    for (int i = 1; i <= den.degree() && i <= n; ++i) c -= den.coeffs()[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(n - i)];
    out.push_back(c * inv0);
  }
  return out;
}

std::string to_string(const RatFun& f) {
  auto wrap = [](const Poly& p) {
    std::string s = to_string(p);
    const bool single = p.degree() == p.low_degree() && (p.coeffs().back() == 1 || p.degree() == 0);
    return single ? s : "(" + s + ")";
  };
  if (f.is_polynomial()) {
    const Rational d = f.den()[0];
    if (d == 1) return to_string(f.num());
    return wrap(f.num()) + "/" + to_string(d);
  }
  return wrap(f.num()) + "/" + wrap(f.den());
}

}  // namespace fibconv
