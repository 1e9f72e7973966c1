#include "fibconv/catalog.hpp"
#include "fibconv/error.hpp"
#include "fibconv/expr_json.hpp"
#include "fibconv/generating_function.hpp"
#include "fibconv/gf_compile.hpp"
#include "fibconv/kernel_check.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace fibconv;
using nlohmann::json;

namespace {

const Catalog& catalog() {
  static const Catalog c = load_manifest(default_manifest_path());
  return c;
}

const Identity& entry(const std::string& id) {
  const Identity* i = catalog().find_identity(id);
  REQUIRE(i != nullptr);
  return *i;
}

}  // namespace

TEST_CASE("evaluator examples") {
  Evaluator ev;
  CHECK(ev(entry("fq").rhs, 4) == 5);
  const SeqExpr alt_t = conv({product({alt(0), term("T")}), constant(1)});
  CHECK(ev(alt_t, 4) == 2);
  CHECK(ev(constant(0), 17) == 0);
  CHECK(ev(term("Q", -5), 2) == 0);
  CHECK(ev(npoly({1, 0, 2}), 3) == 19);
  CHECK(ev(geo2(-2), 1) == Rational(1, 2));
  CHECK(ev(delta(3), 3) == 1);
  CHECK(ev(delta(3), 4) == 0);
  CHECK(ev(conv({term("F")}, -5), 3) == 0);
  CHECK(to_string(term("Q", 1) + term("Q", -1) - term("F", 1)) == "Q[n+1] + Q[n-1] - F[n+1]");
}

TEST_CASE("evaluator cache survives expression turnover") {
  Evaluator ev;
  for (int k = 1; k <= 30; ++k) {
    const SeqExpr e = conv({term("F"), constant(k)});
    REQUIRE(ev(e, 6) == Rational(20 * k));
  }
}

TEST_CASE("parameter expressions") {
  const ParamEnv env{{"m", 4}, {"p", 3}};
  CHECK(eval_param("1/(m-1)", env) == Rational(1, 3));
  CHECK(eval_param_int("-2*m+1", env) == -7);
  CHECK(eval_param_int("l*(m+l-1)", {{"l", 2}, {"m", 3}}) == 8);
  CHECK(eval_condition("m+p<=9", env));
  CHECK_FALSE(eval_condition("m+p>7", env));
  CHECK_THROWS_AS(eval_param("q+1", env), ManifestError);
  CHECK_THROWS_AS(eval_param("(m", env), ManifestError);
  CHECK_THROWS_AS(eval_param_int("m/3", env), ManifestError);
}

TEST_CASE("expression JSON") {
  const SeqExpr e = seq_expr_from_json(json::parse(R"J(["sub", ["term", "F(m+1)", 2], ["scale", "1/2", "F(m)"]])J"), {{"m", 3}});
  CHECK(to_string(e) == "Q[n+2] - 1/2*T[n]");
  CHECK(seq_expr_from_json(to_json(e)).node().v.index() == e.node().v.index());
  Evaluator ev;
  const SeqExpr back = seq_expr_from_json(to_json(e));
  for (long n = 0; n < 20; ++n) CHECK(ev(back, n) == ev(e, n));
  CHECK_THROWS_AS(seq_expr_from_json(json::parse(R"J(["bogus", 1])J")), ManifestError);
  CHECK_THROWS_AS(seq_expr_from_json(json::parse(R"J(["term", "Zeta"])J")), UnknownSequence);
  CHECK(gf_expr_from_json(json::parse(R"J(["div", ["x"], "F"])J")) == RatFun(Poly{1, -1, -1}));
}

TEST_CASE("manifest parsing") {
  const json doc = json::parse(R"J({"identities": [
    {"id": "a", "params": {"m": [2, 4]}, "where": ["m!=3"], "lhs": "F(m)", "rhs": "F(m)"},
    {"id": "b", "n0": "auto", "lhs": ["term", "F", -1], "rhs": ["sub", "F", ["term", "F", -2]]},
    {"id": "c", "kind": "gf", "params": {"r": {"values": [1, 3]}}, "lhs": ["pow", "F", "r"], "rhs": ["pow", "F", "r"], "expect": "fail"}
  ]})J");
  const Catalog c = parse_manifest(doc);
  REQUIRE(c.identities.size() == 3);
  CHECK(c.identities[0].id == "a[m=2]");
  CHECK(c.identities[1].id == "a[m=4]");
  CHECK_FALSE(c.identities[2].n0.has_value());
  REQUIRE(c.functional_equations.size() == 2);
  CHECK(c.functional_equations[1].id == "c[r=3]");
  CHECK(c.functional_equations[1].expect_failure);
  CHECK_THROWS_AS(parse_manifest(json::parse(R"J([{"id": "x"}])J")), ManifestError);
  CHECK_THROWS_AS(parse_manifest(json::parse(R"J([{"id": "x", "kind": "?", "lhs": "F", "rhs": "F"}])J")), ManifestError);
  CHECK_THROWS_AS(load_manifest("/nonexistent/manifest.json"), ManifestError);

  Evaluator ev;
  CHECK(discover_n0(c.identities[2], 50, ev) == 2);
  const VerifyReport r = verify_numeric(c.identities[2], 50);
  CHECK(r.pass);
  CHECK(r.n0 == 2);
}

TEST_CASE("verifier reports") {
  CHECK(verify_numeric(entry("tf"), 200).pass);
  const VerifyReport printed = verify_numeric(entry("partial-sum-printed[m=4]"), 10);
  CHECK_FALSE(printed.pass);
  REQUIRE(printed.first_failure);
  Evaluator ev;
  CHECK(ev(entry("partial-sum-printed[m=4]").lhs, 3) == 4);
  CHECK(ev(entry("partial-sum-printed[m=4]").rhs, 3) == Rational(8, 3));
  CHECK(verify_numeric(entry("partial-sum[m=4]"), 200).pass);
  CHECK(ev(entry("partial-sum[m=4]").rhs, 3) == 4);
  const json j = to_json(printed);
  CHECK(j["mode"] == "numeric");
  CHECK(j["pass"] == false);
  CHECK(j.contains("first_failure"));
  CHECK(j["first_failure"]["lhs"].is_string());
}

TEST_CASE("generating-function compiler") {
  const auto fsum = gf_of_expr(conv({term("F"), constant(1)}));
  const auto frhs = gf_of_expr(term("F", 2) - constant(1));
  REQUIRE(fsum);
  REQUIRE(frhs);
  CHECK(equals(*fsum, *frhs));
  const RatFun fx = gf_of(lookup_sequence("F")), tx = gf_of(lookup_sequence("T"));
  CHECK(gf_of_expr(conv({term("F"), term("T")})) == fx * tx);
  const auto nf = gf_of_expr(product({npoly({0, 1}), term("F")}));
  REQUIRE(nf);
  CHECK(*nf == theta(fx));
  const auto c = series_coeffs(*nf, 10);
  SequenceHandle f(lookup_sequence("F"));
  for (long n = 0; n < 10; ++n) CHECK(c[n] == Rational(n) * Rational(f.term(n)));
  CHECK_FALSE(gf_of_expr(product({term("F"), term("T")})).has_value());
}

TEST_CASE("kernel check examples") {
  const RecurrenceSpec f = lookup_sequence("F");
  CHECK(kernel_check(f, {{2, 1}, {1, -1}, {0, -1}}, {}, 1));
  // 5F_{n+4} against F_n + F_{n+1} + 2F_{n+2} + 2F_{n+3} + F_{n+4} + F_{n+5}
  CHECK(kernel_check(f, {{0, -1}, {1, -1}, {2, -2}, {3, -2}, {4, 4}, {5, -1}}));
  CHECK_FALSE(kernel_check(f, {{0, 1}}));
  // F_{n-1} + F_{n-2} - F_n vanishes except at n = 1.
  CHECK_FALSE(kernel_check(f, {{-1, 1}, {-2, 1}, {0, -1}}));
  CHECK(kernel_check(f, {{-1, 1}, {-2, 1}, {0, -1}}, {{1, 1}}));
  CHECK(kernel_check(f, {{-1, 1}, {-2, 1}, {0, -1}}, {}, 2));
}

TEST_CASE("kernel check agrees with direct evaluation") {
  std::mt19937 rng(99);
  const std::vector<std::string> names = {"F", "T", "Q", "pell", "jacobsthal", "F1"};
  std::uniform_int_distribution<int> shift(-3, 4), coeff(-3, 3), pick(0, static_cast<int>(names.size()) - 1), n0d(0, 6);
  int hits = 0;
  for (int i = 0; i < 100; ++i) {
    const RecurrenceSpec spec = lookup_sequence(names[pick(rng)]);
    SequenceHandle h(spec);
    ShiftCombo combo;
    // Half the combos are built from the recurrence so that some vanish.
    if (i % 2 == 0) {
      const int s = shift(rng);
      const Rational c = coeff(rng);
      combo[s] += c;
      for (int j = 1; j <= spec.order(); ++j) combo[s - j] -= c * Rational(spec.coeffs[j - 1]);
    } else {
      for (int k = 0; k < 3; ++k) combo[shift(rng)] += coeff(rng);
    }
    const long n0 = n0d(rng);
    bool direct = true;
    for (long n = n0; n <= n0 + 50; ++n) {
      Rational v = 0;
      for (const auto& [s, c] : combo) v += c * Rational(h.term(n + s));
      direct = direct && v == 0;
    }
    hits += direct;
    REQUIRE(kernel_check(spec, combo, {}, n0) == direct);
  }
  CHECK(hits > 10);
}

TEST_CASE("catalog size and shape") {
  const Catalog& c = catalog();
  CHECK(c.size() >= 45);
  std::set<std::string> ids;
  for (const auto& i : c.identities) ids.insert(i.id);
  for (const auto& e : c.functional_equations) ids.insert(e.id);
  CHECK(ids.size() == c.size());
  for (const char* id : {"jf", "fq", "fp", "pt", "ftq", "tqp", "fqp", "ftp", "ftqp", "switch[m=5]",
                         "jacobsthal[m=3]", "pell-mstep[m=2]", "quad-switch[m=2]", "window-4f[m=6]"})
    CHECK(c.find_identity(id) != nullptr);
  for (const char* id : {"gf-triple[m=1,p=2,q=3]", "gf-quad-consecutive[m=2]", "gf-qp", "gf-pell-t-reciprocal"})
    CHECK(c.find_functional_equation(id) != nullptr);
}

TEST_CASE("full catalog, numeric and symbolic") {
  const auto numeric = verify_all(catalog(), 200, false);
  const auto symbolic = verify_all(catalog(), 200, true);
  REQUIRE(numeric.size() == symbolic.size());
  std::size_t proved = 0;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    CAPTURE(numeric[i].id);
    CHECK(numeric[i].as_expected());
    CHECK(symbolic[i].as_expected());
    if (symbolic[i].mode == "symbolic" && symbolic[i].pass) {
      ++proved;
      CHECK(numeric[i].pass);
    }
  }
  CHECK(proved > 300);
}
