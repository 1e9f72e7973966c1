#pragma once

#include "fibconv/seq_expr.hpp"
#include "fibconv/sequences.hpp"

#include <map>
#include <unordered_map>
#include <vector>

namespace fibconv {

// Exact evaluation of SeqExprs. Owns one SequenceHandle per sequence name and
// caches convolution atoms by node, so sweeping n = 0..N costs one prefix
// convolution per atom. Not thread-safe.
class Evaluator {
 public:
  Rational operator()(const SeqExpr& e, long n) { return evaluate(e, n); }
  Rational evaluate(const SeqExpr& e, long n);

  SequenceHandle& handle(const std::string& seq);

 private:
  const std::vector<Rational>& conv_values(const SeqExpr& e, const expr::Conv& c, long upto);

  std::map<std::string, SequenceHandle> handles_;
  struct ConvCache {
    std::shared_ptr<const ExprNode> owner;  // keeps the key address from being reused
    std::vector<Rational> values;
  };
  std::unordered_map<const ExprNode*, ConvCache> conv_cache_;
};

Rational evaluate(const SeqExpr& e, long n);

}  // namespace fibconv
