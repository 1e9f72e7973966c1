#include "fibconv/closed_form.hpp"

#include "fibconv/generating_function.hpp"

namespace fibconv {

std::optional<int> applicable_case(int m, int p) {
  if (m < 1 || p < 1) return std::nullopt;
  if (m % p == 0) return 1;
  if ((m + 1) % p == 0) return 2;
  if (p == 2 * m + 2) return 3;
  return std::nullopt;
}

namespace {

std::string case_label(int k) {
  switch (k) {
    case 1: return "p|m";
    case 2: return "p|m+1";
    default: return "p=2m+2";
  }
}

}  // namespace

DerivedCase derive_case(int m, int p) {
  auto k = applicable_case(m, p);
  if (!k) throw CaseNotApplicable(m, p);
  const int ell = *k == 1 ? m / p : *k == 2 ? (m + 1) / p : 1;
  const long c = *k == 1 ? 1 : *k == 2 ? 2 : 4;
  const long s = *k - 2;  // window sum equals c * a_{n+s} plus R
  const std::string a = mstep_name(m), b = mstep_name(m + p);
  const RecurrenceSpec sa = make_mstep(m);

  // Stack the p-gap relation over M = sum_{j<ell} x^{jp}; the windows merge into W.
  Poly wp, mult;
  for (int j = 0; j < p; ++j) wp += Poly::monomial(Rational(1), j);
  for (int j = 0; j < ell; ++j) mult += Poly::monomial(Rational(1), j * p);
  const Poly w = mult * wp;

  RatFun r = (RatFun(w) - RatFun::constant(c) * RatFun::x_power(static_cast<int>(s))) * gf_of(sa);
  if (!r.is_polynomial()) throw Error("Internal", "window sum is not a multiple of a shifted term");
  const Poly rp = r.num() * (Rational(1) / r.den()[0]);

  const long aoff = m + s;
  const long trunc = m + w.degree();  // first n whose windows stay in range

  DerivedCase out;
  out.case_number = *k;
  out.label = case_label(*k);
  ParamEnv env{{"m", m}, {"p", p}};
  const std::string suffix = "[m=" + std::to_string(m) + ",p=" + std::to_string(p) + "]";

  // Stacked form: sum_j (B - A)_{n-jp} = c * sum_{k<=n-trunc} B_k A_{n-aoff-k} + o.t.
  SequenceHandle ha(sa);
  std::vector<SeqExpr> lhs;
  for (int j = 0; j < ell; ++j) lhs.push_back(term(b, -static_cast<long>(j) * p) - term(a, -static_cast<long>(j) * p));
  SeqExpr kernel = term(a);
  for (long i = 0; i < trunc - aoff; ++i)
    if (ha.term(i) != 0) kernel = kernel - Rational(ha.term(i)) * delta(i);
  SeqExpr truncated = conv({term(b), kernel}, -aoff);
  std::vector<SeqExpr> rhs{c == 1 ? truncated : Rational(c) * truncated};
  std::map<long, Rational> other;  // shift of B -> coefficient
  for (int i = 0; i <= rp.degree(); ++i) other[-m - i] += rp[i];
  for (long i = 1; i < trunc - aoff; ++i) other[-aoff - i] += Rational(c * ha.term(i));
  for (auto it = other.rbegin(); it != other.rend(); ++it)
    if (it->second != 0) rhs.push_back(it->second == 1 ? term(b, it->first) : it->second * term(b, it->first));
  out.stacked = Identity{"derived-stacked" + suffix, "derived-stacked", sum(lhs), sum(rhs), 0L, env, "", false};

  // Closed form of conv_n(A, B).
  ClosedForm cf;
  cf.factors = {a, b};
  ClosedFormPart pa{a, {}}, pb{b, {}};
  const Rational inv_c(1, c);
  for (int j = 0; j <= mult.degree(); ++j) {
    if (mult[j] == 0) continue;
    pa.terms[aoff - j] -= mult[j] * inv_c;
    pb.terms[aoff - j] += mult[j] * inv_c;
  }
  for (int i = 0; i <= rp.degree(); ++i)
    if (rp[i] != 0) pb.terms[s - i] -= rp[i] * inv_c;
  std::erase_if(pb.terms, [](const auto& kv) { return kv.second == 0; });
  cf.parts = {pa, pb};
  out.closed_form = cf;
  out.closed = Identity{"derived-closed" + suffix, "derived-closed", conv({term(a), term(b)}), to_seq_expr(cf), 0L,
                        env, "", false};
  return out;
}

std::string reference_label(int m, int p) {
  static const std::map<std::pair<int, int>, std::string> explicit_cells{
      {{2, 2}, "fq"},          {{2, 3}, "fp"},          {{2, 4}, "hexanacci-f"}, {{2, 5}, "weird-f"},
      {{2, 6}, "octanacci-f"}, {{3, 2}, "pt"},          {{3, 5}, "weird-t"},     {{4, 2}, "hexanacci-q"},
      {{4, 3}, "weird-q"}};
  if (m < 2 || p < 1 || m > 9 || p > 9) return "";
  if (p == 1) return "mixed";
  if (auto it = explicit_cells.find({m, p}); it != explicit_cells.end()) return it->second;
  if (auto k = applicable_case(m, p)) return case_label(*k);
  return "?";
}

std::vector<TableCell> table(const TableOptions& opts) {
  std::vector<TableCell> cells;
  for (int m = 2; m <= opts.max_m && m + 1 <= opts.max_sum; ++m)
    for (int p = 1; p <= opts.max_p && m + p <= opts.max_sum; ++p) {
      TableCell cell;
      cell.m = m;
      cell.p = p;
      cell.reference = reference_label(m, p);
      cell.closed_form = solve_conv2(make_mstep(m), make_mstep(m + p));
      cell.verified = check(cell.closed_form, opts.oracle_max_n);
      if (auto k = applicable_case(m, p)) {
        cell.method = "case" + std::to_string(*k);
        cell.derived_equivalent = equivalent(cell.closed_form, derive_case(m, p).closed.rhs, 0);
      } else {
        cell.method = "general-solver";
      }
      cells.push_back(std::move(cell));
    }
  return cells;
}

nlohmann::json to_json(const TableCell& cell) {
  nlohmann::json j{{"m", cell.m},
                   {"p", cell.p},
                   {"reference", cell.reference},
                   {"method", cell.method},
                   {"closed_form", to_json(cell.closed_form, cell.verified)},
                   {"text", to_text(cell.closed_form)},
                   {"status", cell.ok() ? "verified" : "failed"}};
  if (cell.derived_equivalent) j["derived_equivalent"] = *cell.derived_equivalent;
  return j;
}

}  // namespace fibconv
