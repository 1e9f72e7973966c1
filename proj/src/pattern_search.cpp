#include "fibconv/pattern_search.hpp"

#include "fibconv/error.hpp"

namespace fibconv {

ShiftCombo window_combination(const std::vector<int>& K, int p) {
  ShiftCombo c;
  for (int k : K)
    for (int j = 0; j < p; ++j) c[k + j] += 1;
  return c;
}

namespace {

// Subsets of {1..span} of size < card, each prefixed with 0, in lexicographic order.
void subsets(int next, int span, int card, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == card) return;
  for (int v = next; v <= span; ++v) {
    cur.push_back(v);
    subsets(v + 1, span, card, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PatternSolution> search(const SearchOptions& opts) {
  if (opts.m < 2 || opts.p_max < 1 || opts.k_card_max < 1 || opts.k_span_max < 0)
    throw InvalidParameter("search bounds must be positive and m >= 2");
  const RecurrenceSpec spec = make_mstep(opts.m);
  SequenceHandle h(spec);

  std::vector<std::vector<int>> ks;
  std::vector<int> cur{0};
  subsets(1, opts.k_span_max, opts.k_card_max, cur, ks);

  std::vector<PatternSolution> out;
  const long probe = spec.seed_count();
  for (int p = 1; p <= opts.p_max; ++p)
    for (const auto& K : ks) {
      const ShiftCombo combo = window_combination(K, p);
      Rational lhs(0);
      for (const auto& [s, c] : combo) lhs += c * Rational(h.term(probe + s));
      const long l_max = opts.l_max.value_or(K.back() + p + opts.m);
      for (long l = 0; l <= l_max; ++l) {
        const Rational N = lhs / Rational(h.term(probe + l));
        if (N == 0) continue;
        ShiftCombo diff = combo;
        diff[l] -= N;
        if (kernel_check(spec, diff, {}, 0)) out.push_back({opts.m, K, p, N, l});
      }
    }
  return out;
}

nlohmann::ordered_json to_json(const PatternSolution& s) {
  nlohmann::ordered_json j;
  j["m"] = s.m;
  j["K"] = s.K;
  j["p"] = s.p;
  j["N"] = to_string(s.N);
  j["l"] = s.l;
  j["integerN"] = s.integer_n();
  return j;
}

}  // namespace fibconv
