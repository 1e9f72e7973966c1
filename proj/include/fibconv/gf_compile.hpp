#pragma once

#include "fibconv/ratfun.hpp"
#include "fibconv/seq_expr.hpp"

#include <optional>

namespace fibconv {

// Generating function sum_{n>=0} expr(n) x^n, or nullopt when the expression
// uses a shape with no rational generating function at hand (for instance a
// product of two sequence terms).
//
// Terms shift via (gf - prefix)/x^k; (-1)^n and 2^n factors substitute x -> -x
// and x -> 2x; polynomial-in-n factors apply x d/dx; a convolution atom is the
// product of its kernels' generating functions, then shifted like a term.
std::optional<RatFun> gf_of_expr(const SeqExpr& e);

}  // namespace fibconv
