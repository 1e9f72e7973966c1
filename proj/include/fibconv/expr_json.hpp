#pragma once

// JSON encodings of SeqExpr and generating-function expressions, as nested
// arrays: ["term","Q",-1], ["scale","1/2",e], ["conv",[kernels],c] ...
// Numeric slots accept integers or parameter expressions ("m+1").
// A bare string is a sequence term (SeqExpr) or a sequence's generating
// function (GF trees). "F(<expr>)" names the m-step sequence of that order.

#include "fibconv/param_expr.hpp"
#include "fibconv/ratfun.hpp"
#include "fibconv/seq_expr.hpp"

#include <json.hpp>

namespace fibconv {

SeqExpr seq_expr_from_json(const nlohmann::json& j, const ParamEnv& env = {});
nlohmann::json to_json(const SeqExpr& e);

// Evaluates a generating-function expression to a canonical RatFun.
RatFun gf_expr_from_json(const nlohmann::json& j, const ParamEnv& env = {});

// Resolves "F(m+1)" style names to canonical sequence names.
std::string resolve_sequence_name(const std::string& name, const ParamEnv& env);

Rational json_rational(const nlohmann::json& j, const ParamEnv& env);
long json_int(const nlohmann::json& j, const ParamEnv& env);

}  // namespace fibconv
