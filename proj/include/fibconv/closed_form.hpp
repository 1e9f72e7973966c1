#pragma once

// Closed forms for convolutions of recurrence sequences with pairwise coprime
// denominators, by partial fractions of the product generating function.

#include "fibconv/catalog.hpp"
#include "fibconv/error.hpp"
#include "fibconv/kernel_check.hpp"
#include "fibconv/poly.hpp"
#include "fibconv/sequences.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fibconv {

struct ClosedFormPart {
  std::string seq;
  std::map<long, Rational> terms;  // shift -> coefficient of seq_{n+shift}
};

// conv(n) = sum over parts of coeff * seq_{n+shift} + corrections[n], n >= 0.
struct ClosedForm {
  std::vector<std::string> factors;
  std::vector<ClosedFormPart> parts;
  Corrections corrections;
  long validity = 0;
};

struct NonCoprime : Error {
  NonCoprime(const std::string& a, const std::string& b, Poly common)
      : Error("NonCoprime", "denominators of " + a + " and " + b + " share the factor " + to_string(common)),
        factor(std::move(common)) {}
  Poly factor;
};

struct RepeatedFactor : Error {
  explicit RepeatedFactor(const std::string& seq)
      : Error("RepeatedFactor", "repeated factor " + seq + " needs derivative partial fractions") {}
};

struct CaseNotApplicable : Error {
  CaseNotApplicable(int m, int p)
      : Error("CaseNotApplicable", "no stacking case applies to m=" + std::to_string(m) +
                                       ", p=" + std::to_string(p)) {}
};

// Throws NonCoprime / RepeatedFactor.
ClosedForm solve_conv2(const RecurrenceSpec& a, const RecurrenceSpec& b);
ClosedForm solve_conv_multi(const std::vector<RecurrenceSpec>& specs);

RatFun product_gf(const std::vector<std::string>& factors);
// The generating function the closed form denotes.
RatFun reconstruct_gf(const ClosedForm& cf);

Rational evaluate(const ClosedForm& cf, long n, Evaluator& ev);
SeqExpr to_seq_expr(const ClosedForm& cf);

// True iff cf(n) = expr(n) for every n >= n0. `expr` must be a finite
// combination of shifted terms (and Delta corrections); otherwise throws
// InvalidParameter.
bool equivalent(const ClosedForm& cf, const SeqExpr& expr, long n0);

struct ClosedFormCheck {
  bool gf_equal = false;
  long oracle_max_n = -1;
  bool oracle_agrees = false;
  bool ok() const { return gf_equal && oracle_agrees; }
};

// GF equality plus brute-force agreement with the convolution oracle on 0..oracle_max_n.
ClosedFormCheck check(const ClosedForm& cf, long oracle_max_n = 100);

nlohmann::json to_json(const ClosedForm& cf, const std::optional<ClosedFormCheck>& verified = std::nullopt);
// "(1/5)( s[n+3] + s[n+1] - ... )"
std::string to_text(const ClosedForm& cf);
std::string to_latex(const ClosedForm& cf);

// Replaces n by n + k throughout.
SeqExpr shift_index(const SeqExpr& e, long k);

// -- stacking derivation for F^(m) * F^(m+p) ------------------------------

struct DerivedCase {
  int case_number = 0;  // 1: p | m, 2: p | m+1, 3: p = 2m+2
  std::string label;
  Identity stacked;        // stacked relation with explicit other terms
  Identity closed;         // conv(n) = combination of shifted terms
  ClosedForm closed_form;  // same content as `closed`
};

// Case numbers that apply to (m, p), in precedence order; possibly empty.
std::optional<int> applicable_case(int m, int p);

// Throws CaseNotApplicable.
DerivedCase derive_case(int m, int p);

// -- the (m, p) grid -------------------------------------------------------

struct TableCell {
  int m = 0, p = 0;
  std::string reference;  // how the cell was covered before ("?" if open)
  std::string method;     // "case1" | "case2" | "case3" | "general-solver"
  ClosedForm closed_form;
  ClosedFormCheck verified;
  std::optional<bool> derived_equivalent;  // derive_case vs solver, when a case applies
  bool ok() const { return verified.ok() && derived_equivalent.value_or(true); }
};

struct TableOptions {
  int max_sum = 9;   // m + p <= max_sum
  int max_m = 1 << 20;
  int max_p = 1 << 20;
  long oracle_max_n = 100;
};

// Cells with 2 <= m, 1 <= p in row-major order.
std::vector<TableCell> table(const TableOptions& opts);

// Prior coverage label for a cell: catalog id for the explicit cases, the
// stacking case, "mixed" for p = 1, "?" for open cells, "" off the grid.
std::string reference_label(int m, int p);

nlohmann::json to_json(const TableCell& cell);

}  // namespace fibconv
