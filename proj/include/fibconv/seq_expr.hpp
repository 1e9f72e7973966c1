#pragma once

// Expression trees over an index variable n, evaluable to exact rationals.
// Kernels of a convolution atom are themselves SeqExprs, read in their own
// summation index.

#include "fibconv/rational.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace fibconv {

struct ExprNode;

class SeqExpr {
 public:
  SeqExpr();  // Const(0)
  explicit SeqExpr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

  const ExprNode& node() const { return *node_; }
  const ExprNode* id() const { return node_.get(); }
  const std::shared_ptr<const ExprNode>& shared() const { return node_; }

 private:
  std::shared_ptr<const ExprNode> node_;
};

namespace expr {

struct Term {  // seq_{n+shift}
  std::string seq;
  long shift = 0;
};
struct NPoly {  // sum_i coeffs[i] * n^i
  std::vector<Rational> coeffs;
};
struct Alt {  // (-1)^{n+offset}
  long offset = 0;
};
struct Geo2 {  // 2^{n+offset}
  long offset = 0;
};
struct Const {
  Rational value;
};
struct Delta {  // 1 if n == at, else 0
  long at = 0;
};
struct Sum {
  std::vector<SeqExpr> terms;
};
struct Product {
  std::vector<SeqExpr> factors;
};
struct Scale {
  Rational factor;
  SeqExpr body;
};
// Sum over (k_1..k_r) >= 0 with k_1 + ... + k_r = n + offset of
// prod_i kernels[i](k_i); zero when n + offset < 0.
struct Conv {
  std::vector<SeqExpr> kernels;
  long offset = 0;
};

}  // namespace expr

struct ExprNode {
  std::variant<expr::Term, expr::NPoly, expr::Alt, expr::Geo2, expr::Const, expr::Delta,
               expr::Sum, expr::Product, expr::Scale, expr::Conv>
      v;
};

// Builders. `term` canonicalizes the sequence name (throws UnknownSequence).
SeqExpr term(const std::string& seq, long shift = 0);
SeqExpr npoly(std::vector<Rational> coeffs);
SeqExpr alt(long offset = 0);
SeqExpr geo2(long offset = 0);
SeqExpr constant(const Rational& c);
SeqExpr delta(long at);
SeqExpr sum(std::vector<SeqExpr> terms);
SeqExpr product(std::vector<SeqExpr> factors);
SeqExpr scale(const Rational& c, SeqExpr body);
SeqExpr conv(std::vector<SeqExpr> kernels, long offset = 0);

SeqExpr operator+(const SeqExpr& a, const SeqExpr& b);
SeqExpr operator-(const SeqExpr& a, const SeqExpr& b);
SeqExpr operator-(const SeqExpr& a);
SeqExpr operator*(const SeqExpr& a, const SeqExpr& b);
SeqExpr operator*(const Rational& c, const SeqExpr& a);

// Compact single-line rendering, e.g. "Q[n+1] + Q[n-1] - F[n+1]".
std::string to_string(const SeqExpr& e);

}  // namespace fibconv
