#pragma once

// Arithmetic over named integer parameters, used by the manifest for shifts,
// bounds and coefficients of parametric identities ("m+1", "1/(m-1)",
// "m+p<=9").

#include "fibconv/rational.hpp"

#include <map>
#include <string>
#include <string_view>

namespace fibconv {

using ParamEnv = std::map<std::string, long>;

// + - * / and parentheses over rationals; identifiers resolve in `env`.
// Throws ManifestError on syntax errors or unbound names.
Rational eval_param(std::string_view text, const ParamEnv& env);

// Like eval_param but requires an integer result.
long eval_param_int(std::string_view text, const ParamEnv& env);

// A comparison "a <= b" (also <, >=, >, ==, !=).
bool eval_condition(std::string_view text, const ParamEnv& env);

}  // namespace fibconv
