#include "fibconv/expr_json.hpp"

#include "fibconv/error.hpp"
#include "fibconv/generating_function.hpp"
#include "fibconv/sequences.hpp"

namespace fibconv {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const json& j, const std::string& why) {
  throw ManifestError(why + ": " + j.dump());
}

const std::string& head_of(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string()) bad(j, "expected [\"op\", ...]");
  return j[0].get_ref<const std::string&>();
}

void need_args(const json& j, std::size_t lo, std::size_t hi) {
  const std::size_t n = j.size() - 1;
  if (n < lo || n > hi) bad(j, "wrong number of arguments");
}

// Calls body(env') for var = lo..hi.
template <class F>
void for_range(const json& j, const ParamEnv& env, F&& body) {
  need_args(j, 4, 4);
  if (!j[1].is_string()) bad(j, "range variable must be a name");
  const std::string var = j[1].get<std::string>();
  const long lo = json_int(j[2], env);
  const long hi = json_int(j[3], env);
  ParamEnv inner = env;
  for (long k = lo; k <= hi; ++k) {
    inner[var] = k;
    body(inner);
  }
}

std::vector<SeqExpr> kernel_list(const json& j, const ParamEnv& env) {
  if (!j.is_array()) bad(j, "conv kernels must be a list");
  std::vector<SeqExpr> out;
  for (const auto& k : j) {
    if (k.is_array() && !k.empty() && k[0] == "irep") {
      for_range(k, env, [&](const ParamEnv& e) { out.push_back(seq_expr_from_json(k[4], e)); });
    } else if (k.is_array() && !k.empty() && k[0] == "rep") {
      need_args(k, 2, 2);
      const long count = json_int(k[1], env);
      for (long i = 0; i < count; ++i) out.push_back(seq_expr_from_json(k[2], env));
    } else {
      out.push_back(seq_expr_from_json(k, env));
    }
  }
  if (out.empty()) bad(j, "conv needs at least one kernel");
  return out;
}

}  // namespace

Rational json_rational(const json& j, const ParamEnv& env) {
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  if (j.is_string()) return eval_param(j.get_ref<const std::string&>(), env);
  bad(j, "expected a rational");
}

long json_int(const json& j, const ParamEnv& env) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) return eval_param_int(j.get_ref<const std::string&>(), env);
  bad(j, "expected an integer");
}

std::string resolve_sequence_name(const std::string& name, const ParamEnv& env) {
  if (name.size() > 3 && name.rfind("F(", 0) == 0 && name.back() == ')') {
    const long m = eval_param_int(name.substr(2, name.size() - 3), env);
    if (m < 1) throw ManifestError("m-step order must be >= 1 in '" + name + "'");
    return mstep_name(static_cast<int>(m));
  }
  return lookup_sequence(name).name;
}

SeqExpr seq_expr_from_json(const json& j, const ParamEnv& env) {
  if (j.is_string()) return term(resolve_sequence_name(j.get<std::string>(), env), 0);
  const std::string& op = head_of(j);
  auto rest = [&](std::size_t from) {
    std::vector<SeqExpr> v;
    for (std::size_t i = from; i < j.size(); ++i) v.push_back(seq_expr_from_json(j[i], env));
    return v;
  };
  if (op == "term") {
    need_args(j, 1, 2);
    if (!j[1].is_string()) bad(j, "term needs a sequence name");
    return term(resolve_sequence_name(j[1].get<std::string>(), env), j.size() > 2 ? json_int(j[2], env) : 0);
  }
  if (op == "npoly") {
    need_args(j, 1, 1);
    std::vector<Rational> c;
    for (const auto& x : j[1]) c.push_back(json_rational(x, env));
    return npoly(std::move(c));
  }
  if (op == "alt") return need_args(j, 0, 1), alt(j.size() > 1 ? json_int(j[1], env) : 0);
  if (op == "geo2") return need_args(j, 0, 1), geo2(j.size() > 1 ? json_int(j[1], env) : 0);
  if (op == "const") return need_args(j, 1, 1), constant(json_rational(j[1], env));
  if (op == "delta") return need_args(j, 1, 1), delta(json_int(j[1], env));
  if (op == "sum") return sum(rest(1));
  if (op == "prod") return product(rest(1));
  if (op == "scale") {
    need_args(j, 2, 2);
    return scale(json_rational(j[1], env), seq_expr_from_json(j[2], env));
  }
  if (op == "neg") return need_args(j, 1, 1), -seq_expr_from_json(j[1], env);
  if (op == "sub") {
    need_args(j, 2, 2);
    return seq_expr_from_json(j[1], env) - seq_expr_from_json(j[2], env);
  }
  if (op == "conv") {
    need_args(j, 1, 2);
    return conv(kernel_list(j[1], env), j.size() > 2 ? json_int(j[2], env) : 0);
  }
  if (op == "isum") {
    std::vector<SeqExpr> terms;
    for_range(j, env, [&](const ParamEnv& e) { terms.push_back(seq_expr_from_json(j[4], e)); });
    return sum(std::move(terms));
  }
  bad(j, "unknown expression operator '" + op + "'");
}

json to_json(const SeqExpr& e) {
  return std::visit(
      [&](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, expr::Term>) {
          return json::array({"term", x.seq, x.shift});
        } else if constexpr (std::is_same_v<T, expr::NPoly>) {
          json c = json::array();
          for (const auto& r : x.coeffs) c.push_back(to_string(r));
          return json::array({"npoly", c});
        } else if constexpr (std::is_same_v<T, expr::Alt>) {
          return json::array({"alt", x.offset});
        } else if constexpr (std::is_same_v<T, expr::Geo2>) {
          return json::array({"geo2", x.offset});
        } else if constexpr (std::is_same_v<T, expr::Const>) {
          return json::array({"const", to_string(x.value)});
        } else if constexpr (std::is_same_v<T, expr::Delta>) {
          return json::array({"delta", x.at});
        } else if constexpr (std::is_same_v<T, expr::Sum>) {
          json a = json::array({"sum"});
          for (const auto& t : x.terms) a.push_back(to_json(t));
          return a;
        } else if constexpr (std::is_same_v<T, expr::Product>) {
          json a = json::array({"prod"});
          for (const auto& t : x.factors) a.push_back(to_json(t));
          return a;
        } else if constexpr (std::is_same_v<T, expr::Scale>) {
          return json::array({"scale", to_string(x.factor), to_json(x.body)});
        } else if constexpr (std::is_same_v<T, expr::Conv>) {
          json k = json::array();
          for (const auto& t : x.kernels) k.push_back(to_json(t));
          return json::array({"conv", k, x.offset});
        }
      },
      e.node().v);
}

RatFun gf_expr_from_json(const json& j, const ParamEnv& env) {
  if (j.is_string()) return gf_of(lookup_sequence(resolve_sequence_name(j.get<std::string>(), env)));
  const std::string& op = head_of(j);
  auto arg = [&](std::size_t i) { return gf_expr_from_json(j[i], env); };
  if (op == "x") return need_args(j, 0, 1), RatFun::x_power(j.size() > 1 ? static_cast<int>(json_int(j[1], env)) : 1);
  if (op == "poly") {
    need_args(j, 1, 1);
    std::vector<Rational> c;
    for (const auto& x : j[1]) c.push_back(json_rational(x, env));
    return RatFun(Poly(std::move(c)));
  }
  if (op == "const") return need_args(j, 1, 1), RatFun::constant(json_rational(j[1], env));
  if (op == "sum") {
    RatFun acc;
    for (std::size_t i = 1; i < j.size(); ++i) acc += arg(i);
    return acc;
  }
  if (op == "prod") {
    RatFun acc = RatFun::constant(Rational(1));
    for (std::size_t i = 1; i < j.size(); ++i) acc *= arg(i);
    return acc;
  }
  if (op == "sub") return need_args(j, 2, 2), arg(1) - arg(2);
  if (op == "neg") return need_args(j, 1, 1), -arg(1);
  if (op == "scale") return need_args(j, 2, 2), RatFun::constant(json_rational(j[1], env)) * arg(2);
  if (op == "div") return need_args(j, 2, 2), arg(1) / arg(2);
  if (op == "subneg") return need_args(j, 1, 1), substitute_neg(arg(1));
  if (op == "pow") return need_args(j, 2, 2), pow(arg(1), static_cast<int>(json_int(j[2], env)));
  if (op == "isum" || op == "iprod") {
    const bool is_sum = op == "isum";
    RatFun acc = is_sum ? RatFun() : RatFun::constant(Rational(1));
    for_range(j, env, [&](const ParamEnv& e) {
      RatFun v = gf_expr_from_json(j[4], e);
      acc = is_sum ? acc + v : acc * v;
    });
    return acc;
  }
  bad(j, "unknown generating-function operator '" + op + "'");
}

}  // namespace fibconv
