#include "fibconv/gf_compile.hpp"

#include "fibconv/generating_function.hpp"

namespace fibconv {

namespace {

using Maybe = std::optional<RatFun>;

RatFun geometric(const Rational& ratio) {
  return RatFun(Poly::constant(1), Poly{Rational(1), -ratio});
}

RatFun apply_npoly(const std::vector<Rational>& coeffs, const RatFun& f) {
  RatFun acc;
  RatFun power = f;  // theta^i f
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) acc += RatFun::constant(coeffs[i]) * power;
    if (i + 1 < coeffs.size()) power = theta(power);
  }
  return acc;
}

Maybe compile(const SeqExpr& e);

Maybe compile_product(const expr::Product& p) {
  std::vector<const SeqExpr*> general;
  std::vector<const SeqExpr*> special;
  for (const auto& f : p.factors) {
    const auto& v = f.node().v;
    if (std::holds_alternative<expr::NPoly>(v) || std::holds_alternative<expr::Alt>(v) ||
        std::holds_alternative<expr::Geo2>(v) || std::holds_alternative<expr::Const>(v) ||
        std::holds_alternative<expr::Delta>(v))
      special.push_back(&f);
    else
      general.push_back(&f);
  }
  if (general.size() > 1) return std::nullopt;
  Maybe base = general.empty() ? Maybe(geometric(Rational(1))) : compile(*general.front());
  if (!base) return std::nullopt;
  RatFun f = *base;
  // Substitutions and x d/dx commute, so the order of special factors is free;
  // Delta is applied last because it extracts a coefficient.
  std::optional<long> delta_at;
  for (const SeqExpr* s : special) {
    const auto& v = s->node().v;
    if (const auto* np = std::get_if<expr::NPoly>(&v)) {
      f = apply_npoly(np->coeffs, f);
    } else if (const auto* a = std::get_if<expr::Alt>(&v)) {
      f = RatFun::constant(Rational(alt_sign(a->offset))) * substitute_neg(f);
    } else if (const auto* g = std::get_if<expr::Geo2>(&v)) {
      f = RatFun::constant(pow2(g->offset)) * substitute_scale(f, Rational(2));
    } else if (const auto* c = std::get_if<expr::Const>(&v)) {
      f = RatFun::constant(c->value) * f;
    } else if (const auto* d = std::get_if<expr::Delta>(&v)) {
      if (delta_at && *delta_at != d->at) return RatFun();
      delta_at = d->at;
    }
  }
  if (delta_at) {
    if (*delta_at < 0) return RatFun();
    if (!f.is_power_series()) return std::nullopt;
    const auto k = static_cast<int>(*delta_at);
    return RatFun(Poly::monomial(series_coeffs(f, k + 1).back(), k));
  }
  return f;
}

Maybe compile(const SeqExpr& e) {
  return std::visit(
      [&](const auto& x) -> Maybe {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, expr::Term>) {
          return shifted_gf(gf_of(lookup_sequence(x.seq)), static_cast<int>(x.shift));
        } else if constexpr (std::is_same_v<T, expr::NPoly>) {
          return apply_npoly(x.coeffs, geometric(Rational(1)));
        } else if constexpr (std::is_same_v<T, expr::Alt>) {
          return RatFun::constant(Rational(alt_sign(x.offset))) * geometric(Rational(-1));
        } else if constexpr (std::is_same_v<T, expr::Geo2>) {
          return RatFun::constant(pow2(x.offset)) * geometric(Rational(2));
        } else if constexpr (std::is_same_v<T, expr::Const>) {
          return RatFun::constant(x.value) * geometric(Rational(1));
        } else if constexpr (std::is_same_v<T, expr::Delta>) {
          if (x.at < 0) return RatFun();
          return RatFun::x_power(static_cast<int>(x.at));
        } else if constexpr (std::is_same_v<T, expr::Sum>) {
          RatFun acc;
          for (const auto& t : x.terms) {
            Maybe m = compile(t);
            if (!m) return std::nullopt;
            acc += *m;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, expr::Product>) {
          return compile_product(x);
        } else if constexpr (std::is_same_v<T, expr::Scale>) {
          Maybe m = compile(x.body);
          if (!m) return std::nullopt;
          return RatFun::constant(x.factor) * *m;
        } else if constexpr (std::is_same_v<T, expr::Conv>) {
          RatFun acc = RatFun::constant(Rational(1));
          if (x.kernels.empty()) return RatFun();
          for (const auto& k : x.kernels) {
            Maybe m = compile(k);
            if (!m || !m->is_power_series()) return std::nullopt;
            acc *= *m;
          }
          return shifted_gf(acc, static_cast<int>(x.offset));
        }
      },
      e.node().v);
}

}  // namespace

std::optional<RatFun> gf_of_expr(const SeqExpr& e) { return compile(e); }

}  // namespace fibconv
