#pragma once

// Text form of dual quaternion polynomials.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := number | 'i' | 'j' | 'k' | 'eps' | 't' | '(' expr ')'
//
// Products keep their written order, eps^2 = 0 and t commutes with
// everything. There is no implicit multiplication. render() produces text
// in the same grammar with numbers at 12 significant digits.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dqf/algebra.hpp"
#include "dqf/error.hpp"
#include "dqf/poly.hpp"
#include "dqf/tolerance.hpp"

namespace dqf {

struct ExprAst {
  enum class Kind { Number, Unit, Negate, Sum, Product, Power, Group };

  Kind kind = Kind::Number;
  double value = 0.0;                          // Number
  std::string unit;                            // Unit: i, j, k, eps, t
  unsigned exponent = 0;                       // Power
  std::vector<std::unique_ptr<ExprAst>> children;
  std::vector<bool> negated;                   // Sum: sign of each child
  std::size_t position = 0;                    // source offset
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : src_(src) {}

  std::unique_ptr<ExprAst> parse() {
    auto e = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::unique_ptr<ExprAst> node(ExprAst::Kind kind, std::size_t at) {
    auto n = std::make_unique<ExprAst>();
    n->kind = kind;
    n->position = at;
    return n;
  }

  std::unique_ptr<ExprAst> expr() {
    skip();
    auto sum = node(ExprAst::Kind::Sum, pos_);
    bool neg = accept('-');
    sum->children.push_back(term());
    sum->negated.push_back(neg);
    while (true) {
      if (accept('+')) neg = false;
      else if (accept('-')) neg = true;
      else break;
      sum->children.push_back(term());
      sum->negated.push_back(neg);
    }
    if (sum->children.size() == 1 && !sum->negated[0]) return std::move(sum->children[0]);
    if (sum->children.size() == 1) {
      auto n = node(ExprAst::Kind::Negate, sum->position);
      n->children.push_back(std::move(sum->children[0]));
      return n;
    }
    return sum;
  }

  std::unique_ptr<ExprAst> term() {
    skip();
    auto prod = node(ExprAst::Kind::Product, pos_);
    prod->children.push_back(factor());
    while (accept('*')) prod->children.push_back(factor());
    if (prod->children.size() == 1) return std::move(prod->children[0]);
    return prod;
  }

  std::unique_ptr<ExprAst> factor() {
    auto base = atom();
    if (!accept('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected unsigned integer exponent");
    auto p = node(ExprAst::Kind::Power, start);
    p->exponent = static_cast<unsigned>(std::stoul(std::string(src_.substr(start, pos_ - start))));
    p->children.push_back(std::move(base));
    return p;
  }

  std::unique_ptr<ExprAst> atom() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    std::size_t at = pos_;
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      auto g = node(ExprAst::Kind::Group, at);
      g->children.push_back(expr());
      if (!accept(')')) fail("expected ')'");
      return g;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string word(src_.substr(start, pos_ - start));
      if (word == "i" || word == "j" || word == "k" || word == "eps" || word == "t") {
        auto u = node(ExprAst::Kind::Unit, at);
        u->unit = word;
        return u;
      }
      pos_ = start;
      fail("unknown symbol '" + word + "'");
    }
    if (c == '/') fail("division is not part of the polynomial grammar");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::unique_ptr<ExprAst> number() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits();
      } else {
        pos_ = mark;  // "2eps" is not a number with exponent
      }
    }
    std::string text(src_.substr(start, pos_ - start));
    if (text == ".") fail("malformed number");
    auto n = node(ExprAst::Kind::Number, start);
    n->value = std::stod(text);
    return n;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::unique_ptr<ExprAst> parse_expr(std::string_view src) { return detail::ExprParser(src).parse(); }

inline DQPoly evaluate(const ExprAst& e) {
  switch (e.kind) {
    case ExprAst::Kind::Number:
      return DQPoly::constant(DualQuaternion(e.value));
    case ExprAst::Kind::Unit:
      if (e.unit == "i") return DQPoly{DualQuaternion::i()};
      if (e.unit == "j") return DQPoly{DualQuaternion::j()};
      if (e.unit == "k") return DQPoly{DualQuaternion::k()};
      if (e.unit == "eps") return DQPoly{DualQuaternion::eps()};
      return DQPoly::t();
    case ExprAst::Kind::Negate:
      return -evaluate(*e.children[0]);
    case ExprAst::Kind::Group:
      return evaluate(*e.children[0]);
    case ExprAst::Kind::Power:
      return pow(evaluate(*e.children[0]), e.exponent);
    case ExprAst::Kind::Product: {
      DQPoly acc = evaluate(*e.children[0]);
      for (std::size_t n = 1; n < e.children.size(); ++n) acc = acc * evaluate(*e.children[n]);
      return acc;
    }
    case ExprAst::Kind::Sum: {
      DQPoly acc;
      for (std::size_t n = 0; n < e.children.size(); ++n) {
        DQPoly term = evaluate(*e.children[n]);
        if (e.negated[n]) acc -= term;
        else acc += term;
      }
      return acc;
    }
  }
  return {};
}

inline DQPoly parse_poly(std::string_view src) { return evaluate(*parse_expr(src)); }

// --- rendering ----------------------------------------------------------

/// Magnitude below which displayed values are treated as rounding residue.
inline constexpr double kDisplayFloor = 1e-11;

/// 12 significant digits, no trailing zeros, no negative zero.
inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

namespace detail {

struct SignedTerm {
  bool negative = false;
  std::string body;  // without sign
};

inline std::string term_body(double magnitude_value, const std::string& unit) {
  if (unit.empty()) return format_number(magnitude_value);
  if (format_number(magnitude_value) == "1") return unit;
  return format_number(magnitude_value) + "*" + unit;
}

inline std::vector<SignedTerm> quaternion_terms(const Quaternion& q, double threshold) {
  static const char* units[4] = {"", "i", "j", "k"};
  std::vector<SignedTerm> out;
  for (int n = 0; n < 4; ++n) {
    double c = q[n];
    if (std::abs(c) <= threshold || format_number(std::abs(c)) == "0") continue;
    out.push_back({c < 0, term_body(std::abs(c), units[n])});
  }
  return out;
}

inline std::string join_terms(const std::vector<SignedTerm>& terms) {
  std::string s;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    if (n == 0) s += terms[n].negative ? "-" : "";
    else s += terms[n].negative ? " - " : " + ";
    s += terms[n].body;
  }
  return s;
}

inline std::vector<SignedTerm> dual_quaternion_terms(const DualQuaternion& q, double threshold) {
  auto out = quaternion_terms(q.primal, threshold);
  auto dual_terms = quaternion_terms(q.dual, threshold);
  if (dual_terms.size() == 1) {
    const auto& d = dual_terms[0];
    std::string body = d.body == "1" ? "eps" : "eps*" + d.body;
    // numeric prefix goes in front: 2*i -> 2*eps*i
    auto star = d.body.find('*');
    if (star != std::string::npos) body = d.body.substr(0, star) + "*eps*" + d.body.substr(star + 1);
    else if (std::isdigit(static_cast<unsigned char>(d.body[0])) && d.body != "1") body = d.body + "*eps";
    out.push_back({d.negative, body});
  } else if (!dual_terms.empty()) {
    out.push_back({false, "eps*(" + join_terms(dual_terms) + ")"});
  }
  return out;
}

inline std::string monomial(int n) {
  if (n == 0) return "";
  if (n == 1) return "t";
  return "t^" + std::to_string(n);
}

inline std::string join_poly_terms(const std::vector<SignedTerm>& terms) {
  if (terms.empty()) return "0";
  return join_terms(terms);
}

}  // namespace detail

/// Components with |x| <= threshold are dropped.
inline std::string render(const DualQuaternion& q, double threshold = 0.0) {
  auto terms = detail::dual_quaternion_terms(q, threshold);
  return detail::join_poly_terms(terms);
}

inline std::string render(const DQPoly& m, double threshold = 0.0) {
  std::vector<detail::SignedTerm> terms;
  for (int n = m.degree(); n >= 0; --n) {
    auto parts = detail::dual_quaternion_terms(m[static_cast<std::size_t>(n)], threshold);
    if (parts.empty()) continue;
    std::string mono = detail::monomial(n);
    if (n == 0) {
      terms.insert(terms.end(), parts.begin(), parts.end());
    } else if (parts.size() == 1) {
      const auto& p = parts[0];
      std::string body = p.body == "1" ? mono : p.body + "*" + mono;
      terms.push_back({p.negative, body});
    } else {
      terms.push_back({false, "(" + detail::join_terms(parts) + ")*" + mono});
    }
  }
  return detail::join_poly_terms(terms);
}

inline std::string render(const RealPoly& p, double threshold = 0.0) {
  std::vector<detail::SignedTerm> terms;
  for (int n = p.degree(); n >= 0; --n) {
    double c = p[static_cast<std::size_t>(n)];
    if (std::abs(c) <= threshold || format_number(std::abs(c)) == "0") continue;
    std::string mono = detail::monomial(n);
    std::string coeff = format_number(std::abs(c));
    std::string body = n == 0 ? coeff : coeff == "1" ? mono : coeff + "*" + mono;
    terms.push_back({c < 0, body});
  }
  return detail::join_poly_terms(terms);
}

/// primal + eps*(dual) with both parts as real polynomials.
inline std::string render(const DualPoly& p, double threshold = 0.0) {
  std::string f = render(primal(p), threshold);
  std::string g = render(dual(p), threshold);
  if (g == "0") return f;
  if (f == "0") return "eps*(" + g + ")";
  return f + " + eps*(" + g + ")";
}

}  // namespace dqf
