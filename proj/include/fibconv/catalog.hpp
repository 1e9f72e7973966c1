#pragma once

// The identity catalog: manifest loading, parametric instantiation, and
// numeric / symbolic verification.

#include "fibconv/evaluator.hpp"
#include "fibconv/param_expr.hpp"
#include "fibconv/ratfun.hpp"
#include "fibconv/seq_expr.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fibconv {

// lhs(n) = rhs(n) for all n >= n0.
struct Identity {
  std::string id;      // instantiated id, e.g. "pgap[m=2,p=3]"
  std::string family;  // manifest entry id
  SeqExpr lhs, rhs;
  std::optional<long> n0;  // nullopt: discovered by the verifier
  ParamEnv params;
  std::string quote;
  bool expect_failure = false;  // negative control: a known misprint
};

// Functional equation between generating functions, checked by equality of
// canonical forms.
struct GfIdentity {
  std::string id;
  std::string family;
  RatFun lhs, rhs;
  ParamEnv params;
  std::string quote;
  bool expect_failure = false;
};

struct Catalog {
  std::vector<Identity> identities;
  std::vector<GfIdentity> functional_equations;

  const Identity* find_identity(const std::string& id) const;
  const GfIdentity* find_functional_equation(const std::string& id) const;
  std::size_t size() const { return identities.size() + functional_equations.size(); }
};

Catalog parse_manifest(const nlohmann::json& doc);
Catalog load_manifest(const std::string& path);
std::string default_manifest_path();

struct Failure {
  long n;
  Rational lhs, rhs;
};

struct VerifyReport {
  std::string id;
  std::string mode;  // "numeric" | "symbolic"
  bool pass = false;
  bool expect_failure = false;
  long n0 = 0;
  std::optional<Failure> first_failure;

  // Outcome matches the entry's expectation.
  bool as_expected() const { return pass != expect_failure; }
};

// Largest validity threshold the verifier will discover on its own.
inline constexpr long kMaxDiscoveredN0 = 20;

// Exact check for n0 <= n <= n_max. Passing an Evaluator reuses its caches.
VerifyReport verify_numeric(const Identity& id, long n_max, Evaluator* ev = nullptr);

// Numeric check, then (when both sides compile) generating-function proof:
// gf(lhs) - gf(rhs) must be a polynomial of degree < n0. Falls back to the
// numeric report when a side does not compile.
VerifyReport verify_symbolic(const Identity& id, long n_max, Evaluator* ev = nullptr);

VerifyReport verify(const GfIdentity& eq);

std::vector<VerifyReport> verify_all(const Catalog& catalog, long n_max, bool symbolic);

nlohmann::json to_json(const VerifyReport& r);

// Minimal n0 for which lhs = rhs on n0..n_max, or nullopt if none <= limit.
std::optional<long> discover_n0(const Identity& id, long n_max, Evaluator& ev,
                                long limit = kMaxDiscoveredN0);

}  // namespace fibconv
