#include "fibconv/poly.hpp"

#include "fibconv/error.hpp"

#include <algorithm>
#include <sstream>

namespace fibconv {

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidParameter("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::operator[](int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

int Poly::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational& lead = b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= q * b.coeffs()[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

namespace {

// Scale factor that turns `p` into primitive_part(p).
Rational primitive_scale(const Poly& p) {
  BigInt lcm_den(1), gcd_num(0);
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    BigInt n = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
  }
  Rational s(lcm_den, gcd_num);
  s.canonicalize();
  if (p[p.low_degree()] < 0) s = -s;
  return s;
}

}  // namespace

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  return p * primitive_scale(p);
}

Poly gcd(const Poly& a, const Poly& b) { return bezout(a, b).g; }

Bezout bezout(const Poly& a, const Poly& b) {
  // Invariant: r0 = u0*a + v0*b, r1 = u1*a + v1*b.
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(1), v0{};
  Poly u1{}, v1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
    // Keep remainders monic so coefficients stay small.
    if (!r1.is_zero()) {
      const Rational s = 1 / r1.leading();
      r1 *= s;
      u1 *= s;
      v1 *= s;
    }
  }
  if (r0.is_zero()) return {Poly{}, Poly{}, Poly{}};
  Rational s = r0.degree() == 0 ? 1 / r0[0] : primitive_scale(r0);
  return {u0 * s, v0 * s, r0 * s};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  Bezout bz = bezout(a, m);
  if (bz.g.degree() != 0) throw InvalidParameter("inverse_mod: operands are not coprime");
  return divrem(bz.u, m).remainder;
}

Rational evaluate(const Poly& p, const Rational& x) {
  Rational acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeffs()[static_cast<std::size_t>(i)];
  return acc;
}

Poly derivative(const Poly& p) {
  std::vector<Rational> out;
  for (int i = 1; i <= p.degree(); ++i) out.push_back(p.coeffs()[static_cast<std::size_t>(i)] * i);
  return Poly(std::move(out));
}

Poly substitute_scale(const Poly& p, const Rational& c) {
  std::vector<Rational> out = p.coeffs();
  Rational f(1);
  for (auto& x : out) {
    x *= f;
    f *= c;
  }
  return Poly(std::move(out));
}

Poly truncate(const Poly& p, int n) {
  if (n <= 0) return {};
  std::vector<Rational> out = p.coeffs();
  if (static_cast<int>(out.size()) > n) out.resize(static_cast<std::size_t>(n));
  return Poly(std::move(out));
}

Poly divide_by_x_power(const Poly& p, int k) {
  if (k <= 0 || p.is_zero()) return p;
  if (p.low_degree() < k) throw InvalidParameter("divide_by_x_power: not divisible");
  return Poly(std::vector<Rational>(p.coeffs().begin() + k, p.coeffs().end()));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    Rational c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    if (i == 0) {
      os << to_string(a);
      continue;
    }
    if (a != 1) os << to_string(a) << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace fibconv
