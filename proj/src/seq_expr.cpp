#include "fibconv/seq_expr.hpp"

#include "fibconv/sequences.hpp"

#include <sstream>

namespace fibconv {

namespace {

template <class T>
SeqExpr make(T node) {
  return SeqExpr(std::make_shared<const ExprNode>(ExprNode{std::move(node)}));
}

std::string index_text(const std::string& var, long shift) {
  if (shift == 0) return var;
  return var + (shift > 0 ? "+" : "-") + std::to_string(shift > 0 ? shift : -shift);
}

std::string render(const SeqExpr& e, const std::string& var);

std::string render_factor(const SeqExpr& e, const std::string& var) {
  const bool compound = std::holds_alternative<expr::Sum>(e.node().v);
  std::string s = render(e, var);
  return compound ? "(" + s + ")" : s;
}

std::string render(const SeqExpr& e, const std::string& var) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, expr::Term>) {
          os << x.seq << "[" << index_text(var, x.shift) << "]";
        } else if constexpr (std::is_same_v<T, expr::NPoly>) {
          os << "(";
          bool first = true;
          for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
            if (x.coeffs[i] == 0) continue;
            if (!first) os << (x.coeffs[i] < 0 ? " - " : " + ");
            else if (x.coeffs[i] < 0) os << "-";
            first = false;
            Rational a = abs(x.coeffs[i]);
            if (i == 0) os << to_string(a);
            else {
              if (a != 1) os << to_string(a) << "*";
              os << var;
              if (i > 1) os << "^" << i;
            }
          }
          if (first) os << "0";
          os << ")";
        } else if constexpr (std::is_same_v<T, expr::Alt>) {
          os << "(-1)^(" << index_text(var, x.offset) << ")";
        } else if constexpr (std::is_same_v<T, expr::Geo2>) {
          os << "2^(" << index_text(var, x.offset) << ")";
        } else if constexpr (std::is_same_v<T, expr::Const>) {
          os << to_string(x.value);
        } else if constexpr (std::is_same_v<T, expr::Delta>) {
          os << "[" << var << "=" << x.at << "]";
        } else if constexpr (std::is_same_v<T, expr::Sum>) {
          if (x.terms.empty()) return "0";
          for (std::size_t i = 0; i < x.terms.size(); ++i) {
            std::string t = render(x.terms[i], var);
            if (i == 0) os << t;
            else if (!t.empty() && t[0] == '-') os << " - " << t.substr(1);
            else os << " + " << t;
          }
        } else if constexpr (std::is_same_v<T, expr::Product>) {
          for (std::size_t i = 0; i < x.factors.size(); ++i) {
            if (i) os << "*";
            os << render_factor(x.factors[i], var);
          }
        } else if constexpr (std::is_same_v<T, expr::Scale>) {
          if (x.factor == -1) os << "-" << render_factor(x.body, var);
          else os << to_string(x.factor) << "*" << render_factor(x.body, var);
        } else if constexpr (std::is_same_v<T, expr::Conv>) {
          os << "conv(";
          for (std::size_t i = 0; i < x.kernels.size(); ++i) {
            if (i) os << ", ";
            os << render(x.kernels[i], "k");
          }
          os << "; " << index_text(var, x.offset) << ")";
        }
        return os.str();
      },
      e.node().v);
}

}  // namespace

SeqExpr::SeqExpr() : SeqExpr(std::make_shared<const ExprNode>(ExprNode{expr::Const{Rational(0)}})) {}

SeqExpr term(const std::string& seq, long shift) {
  return make(expr::Term{lookup_sequence(seq).name, shift});
}
SeqExpr npoly(std::vector<Rational> coeffs) { return make(expr::NPoly{std::move(coeffs)}); }
SeqExpr alt(long offset) { return make(expr::Alt{offset}); }
SeqExpr geo2(long offset) { return make(expr::Geo2{offset}); }
SeqExpr constant(const Rational& c) { return make(expr::Const{c}); }
SeqExpr delta(long at) { return make(expr::Delta{at}); }
SeqExpr sum(std::vector<SeqExpr> terms) { return make(expr::Sum{std::move(terms)}); }
SeqExpr product(std::vector<SeqExpr> factors) { return make(expr::Product{std::move(factors)}); }
SeqExpr scale(const Rational& c, SeqExpr body) { return make(expr::Scale{c, std::move(body)}); }
SeqExpr conv(std::vector<SeqExpr> kernels, long offset) {
  return make(expr::Conv{std::move(kernels), offset});
}

SeqExpr operator+(const SeqExpr& a, const SeqExpr& b) { return sum({a, b}); }
SeqExpr operator-(const SeqExpr& a) { return scale(Rational(-1), a); }
SeqExpr operator-(const SeqExpr& a, const SeqExpr& b) { return sum({a, -b}); }
SeqExpr operator*(const SeqExpr& a, const SeqExpr& b) { return product({a, b}); }
SeqExpr operator*(const Rational& c, const SeqExpr& a) { return scale(c, a); }

std::string to_string(const SeqExpr& e) { return render(e, "n"); }

}  // namespace fibconv
