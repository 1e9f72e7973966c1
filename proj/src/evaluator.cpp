#include "fibconv/evaluator.hpp"

namespace fibconv {

SequenceHandle& Evaluator::handle(const std::string& seq) {
  auto it = handles_.find(seq);
  if (it == handles_.end()) it = handles_.emplace(seq, SequenceHandle(lookup_sequence(seq))).first;
  return it->second;
}

const std::vector<Rational>& Evaluator::conv_values(const SeqExpr& e, const expr::Conv& c, long upto) {
  const auto& cached = conv_cache_[e.id()].values;
  if (static_cast<long>(cached.size()) > upto) return cached;
  const long count = std::max(upto + 1, 2 * static_cast<long>(cached.size()));
  std::vector<Rational> acc;
  for (std::size_t k = 0; k < c.kernels.size(); ++k) {
    std::vector<Rational> values(static_cast<std::size_t>(count));
    for (long j = 0; j < count; ++j) values[static_cast<std::size_t>(j)] = evaluate(c.kernels[k], j);
    if (k == 0) {
      acc = std::move(values);
      continue;
    }
    std::vector<Rational> out(static_cast<std::size_t>(count));
    for (long n = 0; n < count; ++n) {
      Rational s(0);
      for (long j = 0; j <= n; ++j) {
        const Rational& a = acc[static_cast<std::size_t>(j)];
        if (a == 0) continue;
        s += a * values[static_cast<std::size_t>(n - j)];
      }
      out[static_cast<std::size_t>(n)] = std::move(s);
    }
    acc = std::move(out);
  }
  if (c.kernels.empty()) acc.assign(static_cast<std::size_t>(count), Rational(0));
  // rehash may have moved the slot
  auto& slot = conv_cache_[e.id()];
  slot.owner = e.shared();
  slot.values = std::move(acc);
  return slot.values;
}

Rational Evaluator::evaluate(const SeqExpr& e, long n) {
  return std::visit(
      [&](const auto& x) -> Rational {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, expr::Term>) {
          return Rational(handle(x.seq).term(n + x.shift));
        } else if constexpr (std::is_same_v<T, expr::NPoly>) {
          Rational acc(0);
          const Rational nn(n);
          for (auto it = x.coeffs.rbegin(); it != x.coeffs.rend(); ++it) acc = acc * nn + *it;
          return acc;
        } else if constexpr (std::is_same_v<T, expr::Alt>) {
          return Rational(alt_sign(n + x.offset));
        } else if constexpr (std::is_same_v<T, expr::Geo2>) {
          return pow2(n + x.offset);
        } else if constexpr (std::is_same_v<T, expr::Const>) {
          return x.value;
        } else if constexpr (std::is_same_v<T, expr::Delta>) {
          return Rational(n == x.at ? 1 : 0);
        } else if constexpr (std::is_same_v<T, expr::Sum>) {
          Rational acc(0);
          for (const auto& t : x.terms) acc += evaluate(t, n);
          return acc;
        } else if constexpr (std::is_same_v<T, expr::Product>) {
          Rational acc(1);
          for (const auto& f : x.factors) {
            acc *= evaluate(f, n);
            if (acc == 0) break;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, expr::Scale>) {
          return x.factor * evaluate(x.body, n);
        } else if constexpr (std::is_same_v<T, expr::Conv>) {
          const long top = n + x.offset;
          if (top < 0) return Rational(0);
          return conv_values(e, x, top)[static_cast<std::size_t>(top)];
        }
      },
      e.node().v);
}

Rational evaluate(const SeqExpr& e, long n) {
  Evaluator ev;
  return ev.evaluate(e, n);
}

}  // namespace fibconv
