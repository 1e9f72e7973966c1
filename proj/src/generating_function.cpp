#include "fibconv/generating_function.hpp"

namespace fibconv {

Poly recurrence_denominator(const RecurrenceSpec& spec) {
  std::vector<Rational> d(static_cast<std::size_t>(spec.order() + 1));
  d[0] = 1;
  for (int j = 1; j <= spec.order(); ++j) d[static_cast<std::size_t>(j)] = -Rational(spec.coeffs[static_cast<std::size_t>(j - 1)]);
  return Poly(std::move(d));
}

RatFun gf_of(const RecurrenceSpec& spec) {
  spec.validate();
  const Poly den = recurrence_denominator(spec);
  std::vector<Rational> s;
  for (const auto& v : spec.seeds) s.emplace_back(v);
  // For n >= L the recurrence makes [x^n](den * A) vanish; below L, A agrees
  // with the seed polynomial.
  const Poly num = truncate(den * Poly(std::move(s)), spec.seed_count());
  return RatFun(num, den);
}

RatFun shifted_gf(const RatFun& gf, int shift) {
  if (shift <= 0) return RatFun::x_power(-shift) * gf;
  const auto prefix = series_coeffs(gf, shift);
  return (gf - RatFun(Poly(prefix))) * RatFun::x_power(-shift);
}

}  // namespace fibconv
