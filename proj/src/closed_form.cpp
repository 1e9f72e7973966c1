#include "fibconv/closed_form.hpp"

#include "fibconv/convolution.hpp"
#include "fibconv/generating_function.hpp"

#include <algorithm>
#include <sstream>

namespace fibconv {

using nlohmann::json;

namespace {

Poly mod(const Poly& a, const Poly& m) { return divrem(a, m).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto qr = divrem(a, b);
  if (!qr.remainder.is_zero()) throw Error("Internal", "inexact polynomial division");
  return qr.quotient;
}

void add_correction(Corrections& c, long n, const Rational& v) {
  if (v == 0) return;
  Rational& slot = c[n];
  slot += v;
  if (slot == 0) c.erase(n);
}

}  // namespace

ClosedForm solve_conv_multi(const std::vector<RecurrenceSpec>& specs) {
  if (specs.empty()) throw InvalidParameter("solve_conv_multi needs at least one factor");
  const std::size_t k = specs.size();
  std::vector<RatFun> gfs;
  for (const auto& s : specs) {
    s.validate();
    gfs.push_back(gf_of(s));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (gfs[i].den() == gfs[j].den()) throw RepeatedFactor(specs[i].name);
      Poly g = gcd(gfs[i].den(), gfs[j].den());
      if (g.degree() > 0) throw NonCoprime(specs[i].name, specs[j].name, g);
    }

  ClosedForm cf;
  for (const auto& s : specs) cf.factors.push_back(s.name);

  Poly num = Poly::constant(1), den = Poly::constant(1);
  for (const auto& g : gfs) {
    num = num * g.num();
    den = den * g.den();
  }

  Poly poly_part = num;
  for (std::size_t i = 0; i < k; ++i) {
    const Poly& d = gfs[i].den();
    Poly others = Poly::constant(1);
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) others = others * gfs[j].den();
    // A / d is the part of num / den with denominator d.
    Poly a = d.degree() > 0 ? mod(num * inverse_mod(mod(others, d), d), d) : Poly();
    poly_part = poly_part - a * others;

    // num_i = x^e u; A / d = x^{-e} c(x) gf_i + polynomial, c = A u^{-1} mod d.
    const Poly& ni = gfs[i].num();
    int e = ni.low_degree();
    Poly u = divide_by_x_power(ni, e);
    Poly c = d.degree() > 0 ? mod(a * inverse_mod(u, d), d) : Poly();
    Poly rest = exact_div(a - c * u, d);

    ClosedFormPart part{specs[i].name, {}};
    for (int t = 0; t <= c.degree(); ++t)
      if (c[t] != 0) part.terms[e - t] = c[t];
    cf.parts.push_back(std::move(part));

    for (int t = 0; t <= rest.degree(); ++t)
      if (rest[t] != 0) add_correction(cf.corrections, t, rest[t]);
  }
  Poly t = exact_div(poly_part, den);
  for (int i = 0; i <= t.degree(); ++i) add_correction(cf.corrections, i, t[i]);

  return cf;
}

ClosedForm solve_conv2(const RecurrenceSpec& a, const RecurrenceSpec& b) { return solve_conv_multi({a, b}); }

RatFun product_gf(const std::vector<std::string>& factors) {
  RatFun g = RatFun::constant(1);
  for (const auto& f : factors) g *= gf_of(lookup_sequence(f));
  return g;
}

RatFun reconstruct_gf(const ClosedForm& cf) {
  RatFun g;
  for (const auto& part : cf.parts) {
    RatFun base = gf_of(lookup_sequence(part.seq));
    for (const auto& [shift, c] : part.terms)
      g += RatFun::constant(c) * shifted_gf(base, static_cast<int>(shift));
  }
  std::vector<Rational> coeffs;
  for (const auto& [n, v] : cf.corrections) {
    if (n < 0) continue;
    if (coeffs.size() <= static_cast<std::size_t>(n)) coeffs.resize(n + 1);
    coeffs[n] = v;
  }
  return g + RatFun(Poly(coeffs));
}

Rational evaluate(const ClosedForm& cf, long n, Evaluator& ev) {
  Rational v(0);
  for (const auto& part : cf.parts) {
    auto& h = ev.handle(part.seq);
    for (const auto& [shift, c] : part.terms) v += c * Rational(h.term(n + shift));
  }
  if (auto it = cf.corrections.find(n); it != cf.corrections.end()) v += it->second;
  return v;
}

SeqExpr to_seq_expr(const ClosedForm& cf) {
  std::vector<SeqExpr> terms;
  for (const auto& part : cf.parts)
    for (auto it = part.terms.rbegin(); it != part.terms.rend(); ++it)
      terms.push_back(it->second == 1 ? term(part.seq, it->first) : scale(it->second, term(part.seq, it->first)));
  for (const auto& [n, v] : cf.corrections) terms.push_back(v == 1 ? delta(n) : scale(v, delta(n)));
  return sum(std::move(terms));
}

namespace {

struct Linear {
  std::map<std::string, ShiftCombo> combos;
  Corrections corrections;
};

void accumulate(const SeqExpr& e, const Rational& w, Linear& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::Term>) {
          out.combos[node.seq][node.shift] += w;
        } else if constexpr (std::is_same_v<T, expr::Delta>) {
          out.corrections[node.at] += w;
        } else if constexpr (std::is_same_v<T, expr::Const>) {
          if (node.value != 0) throw InvalidParameter("equivalent: constant terms are not supported");
        } else if constexpr (std::is_same_v<T, expr::Sum>) {
          for (const auto& t : node.terms) accumulate(t, w, out);
        } else if constexpr (std::is_same_v<T, expr::Scale>) {
          accumulate(node.body, w * node.factor, out);
        } else {
          throw InvalidParameter("equivalent: expression is not a combination of shifted terms");
        }
      },
      e.node().v);
}

}  // namespace

bool equivalent(const ClosedForm& cf, const SeqExpr& expr, long n0) {
  Linear lin;
  accumulate(expr, Rational(-1), lin);
  for (const auto& part : cf.parts)
    for (const auto& [s, c] : part.terms) lin.combos[part.seq][s] += c;
  for (const auto& [n, v] : cf.corrections) lin.corrections[n] += v;

  std::map<std::string, RecurrenceSpec> specs;
  for (auto& [name, combo] : lin.combos) {
    std::erase_if(combo, [](const auto& kv) { return kv.second == 0; });
    specs.emplace(name, lookup_sequence(name));
  }
  std::erase_if(lin.corrections, [](const auto& kv) { return kv.second == 0; });

  // Past every threshold each sequence's combination must vanish on its own.
  long start = std::max(n0, 0L);
  for (const auto& [name, combo] : lin.combos) start = std::max(start, recurrence_threshold(specs.at(name), combo));
  if (!lin.corrections.empty()) start = std::max(start, lin.corrections.rbegin()->first + 1);

  Evaluator ev;
  for (long n = std::max(n0, 0L); n < start; ++n) {
    Rational v(0);
    for (const auto& [name, combo] : lin.combos) {
      auto& h = ev.handle(name);
      for (const auto& [s, c] : combo) v += c * Rational(h.term(n + s));
    }
    if (auto it = lin.corrections.find(n); it != lin.corrections.end()) v += it->second;
    if (v != 0) return false;
  }
  for (const auto& [name, combo] : lin.combos)
    if (!kernel_check(specs.at(name), combo, {}, start)) return false;
  return true;
}

ClosedFormCheck check(const ClosedForm& cf, long oracle_max_n) {
  ClosedFormCheck r;
  r.gf_equal = reconstruct_gf(cf) == product_gf(cf.factors);
  r.oracle_max_n = oracle_max_n;
  std::vector<SequenceHandle> hs;
  for (const auto& f : cf.factors) hs.emplace_back(lookup_sequence(f));
  auto oracle = conv_multi_prefix(hs, oracle_max_n + 1);
  Evaluator ev;
  r.oracle_agrees = true;
  for (long n = 0; n <= oracle_max_n; ++n)
    if (evaluate(cf, n, ev) != Rational(oracle[n])) {
      r.oracle_agrees = false;
      break;
    }
  return r;
}

json to_json(const ClosedForm& cf, const std::optional<ClosedFormCheck>& verified) {
  json j;
  j["factors"] = cf.factors;
  j["parts"] = json::array();
  for (const auto& part : cf.parts) {
    json terms = json::array();
    for (auto it = part.terms.rbegin(); it != part.terms.rend(); ++it)
      terms.push_back({{"shift", it->first}, {"coeff", to_string(it->second)}});
    j["parts"].push_back({{"seq", part.seq}, {"terms", terms}});
  }
  j["corrections"] = json::array();
  for (const auto& [n, v] : cf.corrections) j["corrections"].push_back({{"n", n}, {"coeff", to_string(v)}});
  j["validity"] = cf.validity;
  if (verified)
    j["verified"] = {{"gf_equal", verified->gf_equal},
                     {"oracle_max_n", verified->oracle_max_n},
                     {"oracle_agrees", verified->oracle_agrees}};
  return j;
}

namespace {

std::string text_symbol(const std::string& seq) {
  static const std::map<std::string, std::string> names{
      {"hexanacci", "s"}, {"heptanacci", "S"}, {"octanacci", "O"}, {"jacobsthal", "J"}, {"pell", "Pell"}};
  auto it = names.find(seq);
  return it == names.end() ? seq : it->second;
}

std::string latex_symbol(const std::string& seq) {
  static const std::map<std::string, std::string> names{
      {"F1", "F^{(1)}"}, {"hexanacci", "s"}, {"heptanacci", "S"}, {"octanacci", "\\mathcal{O}"},
      {"jacobsthal", "J"}, {"pell", "\\mathcal{P}"}};
  if (auto it = names.find(seq); it != names.end()) return it->second;
  if (seq.rfind("F(", 0) == 0) return "F^{(" + seq.substr(2, seq.size() - 3) + ")}";
  return seq;
}

std::string index_text(long shift) {
  if (shift == 0) return "n";
  return shift > 0 ? "n+" + std::to_string(shift) : "n-" + std::to_string(-shift);
}

BigInt lcm_den(const ClosedForm& cf) {
  BigInt l = 1;
  auto fold = [&](const Rational& r) { mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t()); };
  for (const auto& part : cf.parts)
    for (const auto& [s, c] : part.terms) fold(c);
  for (const auto& [n, v] : cf.corrections) fold(v);
  return l;
}

template <class Atom>
std::string render(const ClosedForm& cf, Atom atom, bool latex) {
  BigInt l = lcm_den(cf);
  std::ostringstream body;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& a) {
    Rational v = c * Rational(l);
    bool neg = v < 0;
    Rational mag = neg ? Rational(-v) : v;
    if (first) body << (neg ? "-" : "");
    else body << (neg ? " - " : " + ");
    first = false;
    if (mag != 1) body << to_string(mag) << (latex ? "" : " ");
    body << a;
  };
  for (const auto& part : cf.parts)
    for (auto it = part.terms.rbegin(); it != part.terms.rend(); ++it) emit(it->second, atom(part.seq, it->first));
  for (const auto& [n, v] : cf.corrections)
    emit(v, "[n=" + std::to_string(n) + "]");
  if (first) body << "0";
  if (l == 1) return body.str();
  if (latex) return "\\frac{1}{" + to_string(l) + "}\\left(" + body.str() + "\\right)";
  return "(1/" + to_string(l) + ")( " + body.str() + " )";
}

}  // namespace

std::string to_text(const ClosedForm& cf) {
  return render(cf, [](const std::string& s, long k) { return text_symbol(s) + "[" + index_text(k) + "]"; }, false);
}

std::string to_latex(const ClosedForm& cf) {
  return render(cf, [](const std::string& s, long k) { return latex_symbol(s) + "_{" + index_text(k) + "}"; }, true);
}

SeqExpr shift_index(const SeqExpr& e, long k) {
  return std::visit(
      [&](const auto& node) -> SeqExpr {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::Term>) {
          return term(node.seq, node.shift + k);
        } else if constexpr (std::is_same_v<T, expr::NPoly>) {
          // p(n + k) by Horner over the shifted variable.
          Poly p(node.coeffs);
          Poly out;
          Poly var{Rational(k), Rational(1)};
          for (int i = p.degree(); i >= 0; --i) out = out * var + Poly::constant(p[i]);
          return npoly(out.coeffs());
        } else if constexpr (std::is_same_v<T, expr::Alt>) {
          return alt(node.offset + k);
        } else if constexpr (std::is_same_v<T, expr::Geo2>) {
          return geo2(node.offset + k);
        } else if constexpr (std::is_same_v<T, expr::Const>) {
          return constant(node.value);
        } else if constexpr (std::is_same_v<T, expr::Delta>) {
          return delta(node.at - k);
        } else if constexpr (std::is_same_v<T, expr::Sum>) {
          std::vector<SeqExpr> ts;
          for (const auto& t : node.terms) ts.push_back(shift_index(t, k));
          return sum(std::move(ts));
        } else if constexpr (std::is_same_v<T, expr::Product>) {
          std::vector<SeqExpr> fs;
          for (const auto& f : node.factors) fs.push_back(shift_index(f, k));
          return product(std::move(fs));
        } else if constexpr (std::is_same_v<T, expr::Scale>) {
          return scale(node.factor, shift_index(node.body, k));
        } else {
          return conv(node.kernels, node.offset + k);
        }
      },
      e.node().v);
}

}  // namespace fibconv
