#include "fibconv/param_expr.hpp"

#include "fibconv/error.hpp"

#include <cctype>

namespace fibconv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParamEnv& env) : s_(text), env_(env) {}

  Rational parse_all() {
    Rational v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

  Rational expr() {
    Rational v = product();
    for (;;) {
      skip();
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ManifestError("parameter expression '" + std::string(s_) + "': " + what);
  }

 private:
  Rational product() {
    Rational v = unary();
    for (;;) {
      skip();
      if (eat('*')) v *= unary();
      else if (peek('/')) {
        ++pos_;
        Rational d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else return v;
    }
  }

  Rational unary() {
    skip();
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  Rational primary() {
    skip();
    if (eat('(')) {
      Rational v = expr();
      skip();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Rational(BigInt(std::string(s_.substr(b, pos_ - b))));
    }
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(b, pos_ - b));
      auto it = env_.find(name);
      if (it == env_.end()) fail("unbound parameter '" + name + "'");
      return Rational(it->second);
    }
    fail("unexpected character");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::string_view s_;
  const ParamEnv& env_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational eval_param(std::string_view text, const ParamEnv& env) {
  return Parser(text, env).parse_all();
}

long eval_param_int(std::string_view text, const ParamEnv& env) {
  const Rational v = eval_param(text, env);
  if (!is_integer(v) || !v.get_num().fits_slong_p())
    throw ManifestError("parameter expression '" + std::string(text) + "' is not a machine integer");
  return v.get_num().get_si();
}

bool eval_condition(std::string_view text, const ParamEnv& env) {
  static constexpr std::string_view ops[] = {"<=", ">=", "==", "!=", "<", ">"};
  for (std::string_view op : ops) {
    const auto at = text.find(op);
    if (at == std::string_view::npos) continue;
    const Rational a = eval_param(text.substr(0, at), env);
    const Rational b = eval_param(text.substr(at + op.size()), env);
    if (op == "<=") return a <= b;
    if (op == ">=") return a >= b;
    if (op == "==") return a == b;
    if (op == "!=") return a != b;
    if (op == "<") return a < b;
    return a > b;
  }
  throw ManifestError("condition '" + std::string(text) + "' has no comparison operator");
}

}  // namespace fibconv
