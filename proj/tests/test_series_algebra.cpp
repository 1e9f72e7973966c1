#include "fibconv/error.hpp"
#include "fibconv/generating_function.hpp"
#include "fibconv/poly.hpp"
#include "fibconv/ratfun.hpp"
#include "fibconv/sequences.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace fibconv;

namespace {

const Poly X = Poly::x();

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coeff(-5, 5);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& r : c) r = coeff(rng);
  return Poly(c);
}

RatFun gf(const std::string& name) { return gf_of(lookup_sequence(name)); }

}  // namespace

TEST_CASE("polynomial basics") {
  const Poly f{1, -1, -1}, t{1, -1, -1, -1};
  CHECK(gcd(f, t) == Poly{1});
  CHECK(derivative(Poly{1, -2, 0, 1}) == Poly{-2, 0, 3});
  const DivRem qr = divrem(Poly{0, 0, 1}, f);
  CHECK(qr.quotient == Poly{-1});
  CHECK(qr.remainder == Poly{1, -1});
  CHECK(qr.quotient * f + qr.remainder == Poly{0, 0, 1});
  CHECK_THROWS_AS(divrem(f, Poly{}), DivisionByZero);
  CHECK(to_string(Poly{1, -1, -1}) == "1 - x - x^2");
  CHECK(to_string(Poly{0, 1, 0, Rational(-1, 2)}) == "x - 1/2*x^3");
  CHECK(Poly{}.degree() == -1);
  CHECK(Poly{0, 0, 3}.low_degree() == 2);
  CHECK(evaluate(f, Rational(2)) == -5);
  CHECK(truncate(Poly{1, 2, 3}, 2) == Poly{1, 2});
  CHECK(divide_by_x_power(Poly{0, 0, 3}, 2) == Poly{3});
  CHECK(primitive_part(Poly{Rational(-1, 2), 1}) == Poly{1, -2});
}

TEST_CASE("bezout examples") {
  const Poly f{1, -1, -1}, t{1, -1, -1, -1};
  Bezout b = bezout(f, t);
  CHECK(b.g == Poly{1});
  CHECK(b.u * f + b.v * t == Poly{1});
  const Poly p{1, 2, 3};
  b = bezout(p, p);
  CHECK(b.u * p + b.v * p == b.g);
  CHECK(b.g == primitive_part(p));
  const Poly a{1, -2};
  b = bezout(a, a * Poly{1, 1});
  CHECK(b.g == a);
  const Poly inv = inverse_mod(Poly{1, 1}, f);
  CHECK(divrem(inv * Poly{1, 1}, f).remainder == Poly{1});
  CHECK_THROWS_AS(inverse_mod(a, a * Poly{1, 1}), InvalidParameter);
}

TEST_CASE("bezout certificates on random pairs") {
  std::mt19937 rng(20261014);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(rng, 8), b = random_poly(rng, 8);
    if (a.is_zero() && b.is_zero()) continue;
    const Bezout z = bezout(a, b);
    REQUIRE(z.u * a + z.v * b == z.g);
    REQUIRE(z.g == gcd(a, b));
    if (!a.is_zero() && !b.is_zero() && z.g.degree() < std::min(a.degree(), b.degree())) {
      CHECK(z.u.degree() < b.degree() - z.g.degree());
      CHECK(z.v.degree() < a.degree() - z.g.degree());
    }
    if (!z.g.is_zero()) {
      REQUIRE(divrem(a, z.g).remainder.is_zero());
      REQUIRE(divrem(b, z.g).remainder.is_zero());
    }
  }
}

TEST_CASE("rational function canonical form") {
  const RatFun fx = gf("F");
  CHECK(to_string(fx) == "x/(1 - x - x^2)");
  CHECK(to_string(substitute_neg(fx)) == "(-x)/(1 + x - x^2)");
  CHECK(equals(gf("T") - fx, RatFun::x_power(2) * fx * gf("T")));
  CHECK(equals(fx, fx));
  CHECK(RatFun(Poly{2, 4}, Poly{4, 8}) == RatFun::constant(Rational(1, 2)));
  CHECK(RatFun(Poly{1}, Poly{-1, 1}).den()[0] > 0);
  CHECK(RatFun::x_power(-2) * RatFun::x_power(2) == RatFun::constant(1));
  CHECK_THROWS_AS(fx / RatFun(), DivisionByZero);
  CHECK(to_string(gf_of(make_mstep(4))) == "x/(1 - x - x^2 - x^3 - x^4)");
  CHECK(to_string(gf("pell")) == "x/(1 - 2*x - x^2)");
  CHECK(to_string(gf("pow2")) == "1/(1 - 2*x)");
}

TEST_CASE("series coefficients") {
  auto ints = [](const std::vector<Rational>& v) {
    std::vector<long> out;
    for (const auto& r : v) out.push_back(r.get_num().get_si());
    return out;
  };
  CHECK(ints(series_coeffs(gf("F"), 7)) == std::vector<long>{0, 1, 1, 2, 3, 5, 8});
  CHECK(ints(series_coeffs(RatFun(Poly{1}, Poly{1, -2}), 4)) == std::vector<long>{1, 2, 4, 8});
  CHECK(ints(series_coeffs(RatFun(X, Poly{1, -1, -2}), 6)) == std::vector<long>{0, 1, 1, 3, 5, 11});
  CHECK_THROWS_AS(series_coeffs(RatFun::x_power(-1), 3), NotAPowerSeries);
  const auto ref = oracle::series({0, 1}, {1, -1, -1}, 30);
  CHECK(series_coeffs(gf("F"), 30) == ref);
}

TEST_CASE("canonical-form soundness on random products") {
  std::mt19937 rng(7);
  std::vector<RatFun> base;
  for (const auto& [name, spec] : registry()) base.push_back(gf_of(spec));
  std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
  for (int i = 0; i < 100; ++i) {
    const RatFun f = base[pick(rng)] + base[pick(rng)] * RatFun::x_power(i % 4);
    const RatFun g = base[pick(rng)] - RatFun::constant(Rational(i % 3 + 1));
    REQUIRE(equals(f * g / g, f));
    REQUIRE(equals((f + g) - g, f));
  }
}

TEST_CASE("series commute with products") {
  const int N = 64;
  for (const auto& [a, sa] : registry())
    for (const auto& [b, sb] : registry()) {
      CAPTURE(a);
      CAPTURE(b);
      const auto ca = series_coeffs(gf_of(sa), N), cb = series_coeffs(gf_of(sb), N);
      const auto cab = series_coeffs(gf_of(sa) * gf_of(sb), N);
      for (int k = 0; k < N; ++k) {
        Rational s = 0;
        for (int j = 0; j <= k; ++j) s += ca[j] * cb[k - j];
        REQUIRE(cab[k] == s);
      }
    }
}

TEST_CASE("derivative rule") {
  const int N = 40;
  for (const auto& [name, spec] : registry()) {
    const RatFun f = gf_of(spec);
    const auto d = series_coeffs(derivative(f), N), c = series_coeffs(f, N + 1);
    for (int k = 0; k < N; ++k) REQUIRE(d[k] == Rational(k + 1) * c[k + 1]);
    const auto th = series_coeffs(theta(f), N);
    for (int k = 0; k < N; ++k) REQUIRE(th[k] == Rational(k) * c[k]);
  }
}

TEST_CASE("shifted generating functions") {
  const RatFun q = gf("Q");
  SequenceHandle h(lookup_sequence("Q"));
  for (int s : {-3, -1, 0, 1, 2, 5}) {
    const auto c = series_coeffs(shifted_gf(q, s), 30);
    for (long n = 0; n < 30; ++n) REQUIRE(c[n] == Rational(h.term(n + s)));
  }
  const auto sc = series_coeffs(substitute_scale(gf("F"), Rational(2)), 10);
  SequenceHandle f(lookup_sequence("F"));
  for (long n = 0; n < 10; ++n) CHECK(sc[n] == Rational(f.term(n) << n));
}
