#include "mero/expr.hpp"

#include <charconv>
#include <functional>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <variant>

#include "mero/error.hpp"

namespace mero {

namespace {

enum class BinaryOp { add, sub, mul, div };
enum class Function { exp, sin, cos };

}  // namespace

struct Expr::Node {
  struct Literal {
    cd value;
    std::string name;  // "pi", "e", "i" for named constants, empty otherwise
  };
  struct Variable {};
  struct Negate {
    NodePtr operand;
  };
  struct Binary {
    BinaryOp op;
    NodePtr lhs, rhs;
  };
  struct Power {
    NodePtr base;
    int exponent;
  };
  struct Call {
    Function fn;
    NodePtr arg;
  };
  std::variant<Literal, Variable, Negate, Binary, Power, Call> v;
};

namespace {

using Node = Expr::Node;
using NodePtr = Expr::NodePtr;

template <class T>
NodePtr make(T value) {
  return std::make_shared<const Node>(Node{std::move(value)});
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse_all() {
    skip_ws();
    if (pos_ >= src_.size()) fail({"expression"}, "empty expression");
    NodePtr e = parse_expr();
    skip_ws();
    if (pos_ < src_.size()) fail({"+", "-", "*", "/", "end of input"}, "unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what,
                         ParseError::Kind kind = ParseError::Kind::syntax) {
    throw ParseError(kind, pos_, std::move(expected), what);
  }

  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r' || src_[pos_] == '\n'))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        lhs = make(Node::Binary{BinaryOp::add, lhs, parse_term()});
      } else if (peek('-')) {
        ++pos_;
        lhs = make(Node::Binary{BinaryOp::sub, lhs, parse_term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        lhs = make(Node::Binary{BinaryOp::mul, lhs, parse_factor()});
      } else if (peek('/')) {
        ++pos_;
        lhs = make(Node::Binary{BinaryOp::div, lhs, parse_factor()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_factor() {
    if (peek('-')) {
      ++pos_;
      return make(Node::Negate{parse_power()});
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    bool negative = false;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_ws();
    }
    if (pos_ >= src_.size() || !(is_digit(src_[pos_]) || src_[pos_] == '.'))
      fail({"integer"}, "expected integer exponent");
    const std::size_t start = pos_;
    auto [value, is_integer] = lex_number();
    if (!is_integer) {
      pos_ = start;
      fail({"integer"}, "exponent must be an integer", ParseError::Kind::non_integer_exponent);
    }
    if (value > kMaxExponent) {
      pos_ = start;
      fail({"integer"}, "exponent out of range", ParseError::Kind::exponent_range);
    }
    const int n = static_cast<int>(value);
    return make(Node::Power{base, negative ? -n : n});
  }

  // Lexes a decimal literal at pos_; returns its value and whether the text
  // was a plain digit string.
  std::pair<double, bool> lex_number() {
    const std::size_t start = pos_;
    bool integer = true;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      integer = false;
      ++pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    }
    if (pos_ - start == 1 && src_[start] == '.') {
      pos_ = start;
      fail({"number"}, "malformed number");
    }
    // Exponent part only when digits follow, so "2*e" stays a constant.
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      if (q < src_.size() && (src_[q] == '+' || src_[q] == '-')) ++q;
      if (q < src_.size() && is_digit(src_[q])) {
        integer = false;
        pos_ = q;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      }
    }
    double value = 0.0;
    auto res = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (res.ec != std::errc{} || !std::isfinite(value)) {
      pos_ = start;
      fail({"number"}, "number out of range");
    }
    return {value, integer};
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail({"number", "pi", "e", "i", "z", "exp", "sin", "cos", "("}, "unexpected end of input");
    const char c = src_[pos_];
    if (is_digit(c) || c == '.') {
      auto [value, integer] = lex_number();
      (void)integer;
      return make(Node::Literal{cd(value, 0.0), {}});
    }
    if (c == '(') {
      ++pos_;
      if (++depth_ > kMaxNesting) fail({"shallower nesting"}, "nesting too deep");
      NodePtr inner = parse_expr();
      if (!peek(')')) fail({")"}, "unbalanced parenthesis");
      ++pos_;
      --depth_;
      return inner;
    }
    if (is_alpha(c)) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (is_alpha(src_[pos_]) || is_digit(src_[pos_]))) ++pos_;
      const std::string_view id = src_.substr(start, pos_ - start);
      if (id == "z") return make(Node::Variable{});
      if (id == "pi") return make(Node::Literal{cd(std::numbers::pi, 0.0), "pi"});
      if (id == "e") return make(Node::Literal{cd(std::numbers::e, 0.0), "e"});
      if (id == "i") return make(Node::Literal{cd(0.0, 1.0), "i"});
      Function fn;
      if (id == "exp") {
        fn = Function::exp;
      } else if (id == "sin") {
        fn = Function::sin;
      } else if (id == "cos") {
        fn = Function::cos;
      } else {
        pos_ = start;
        fail({"pi", "e", "i", "z", "exp", "sin", "cos"}, "unknown identifier '" + std::string(id) + "'");
      }
      if (!peek('(')) fail({"("}, "function name must be followed by '('");
      ++pos_;
      if (++depth_ > kMaxNesting) fail({"shallower nesting"}, "nesting too deep");
      NodePtr arg = parse_expr();
      if (!peek(')')) fail({")"}, "unbalanced parenthesis");
      ++pos_;
      --depth_;
      return make(Node::Call{fn, arg});
    }
    fail({"number", "pi", "e", "i", "z", "exp", "sin", "cos", "("}, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// ---------------------------------------------------------------------------
// Evaluation

cd ipow(cd base, unsigned n) {
  cd result = 1.0;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

cd eval_node(const Node& node, cd z) {
  struct Visitor {
    cd z;
    cd operator()(const Node::Literal& l) const { return l.value; }
    cd operator()(const Node::Variable&) const { return z; }
    cd operator()(const Node::Negate& n) const { return -eval_node(*n.operand, z); }
    cd operator()(const Node::Binary& b) const {
      const cd lhs = eval_node(*b.lhs, z);
      const cd rhs = eval_node(*b.rhs, z);
      switch (b.op) {
        case BinaryOp::add: return lhs + rhs;
        case BinaryOp::sub: return lhs - rhs;
        case BinaryOp::mul: return lhs * rhs;
        case BinaryOp::div:
          if (std::abs(rhs) < kPoleHitThreshold) throw EvalError(EvalError::Kind::pole_hit, "division by a near-zero value");
          return lhs / rhs;
      }
      return {};
    }
    cd operator()(const Node::Power& p) const {
      const cd b = eval_node(*p.base, z);
      if (p.exponent >= 0) return ipow(b, static_cast<unsigned>(p.exponent));
      const cd d = ipow(b, static_cast<unsigned>(-p.exponent));
      if (std::abs(d) < kPoleHitThreshold) throw EvalError(EvalError::Kind::pole_hit, "negative power of a near-zero value");
      return 1.0 / d;
    }
    cd operator()(const Node::Call& c) const {
      const cd a = eval_node(*c.arg, z);
      switch (c.fn) {
        case Function::exp: return std::exp(a);
        case Function::sin: return std::sin(a);
        case Function::cos: return std::cos(a);
      }
      return {};
    }
  };
  return std::visit(Visitor{z}, node.v);
}

// ---------------------------------------------------------------------------
// Rational conversion

std::optional<RationalForm> rational_node(const Node& node) {
  struct Visitor {
    std::optional<RationalForm> operator()(const Node::Literal& l) const {
      return RationalForm{Polynomial::constant(l.value), Polynomial::constant(1.0)};
    }
    std::optional<RationalForm> operator()(const Node::Variable&) const {
      return RationalForm{Polynomial{0.0, 1.0}, Polynomial::constant(1.0)};
    }
    std::optional<RationalForm> operator()(const Node::Negate& n) const {
      auto r = rational_node(*n.operand);
      if (r) r->numerator = -r->numerator;
      return r;
    }
    std::optional<RationalForm> operator()(const Node::Binary& b) const {
      auto lhs = rational_node(*b.lhs);
      if (!lhs) return std::nullopt;
      auto rhs = rational_node(*b.rhs);
      if (!rhs) return std::nullopt;
      switch (b.op) {
        case BinaryOp::add:
        case BinaryOp::sub: {
          const Polynomial rn = b.op == BinaryOp::add ? rhs->numerator : -rhs->numerator;
          if (lhs->denominator == rhs->denominator) return RationalForm{lhs->numerator + rn, lhs->denominator};
          return RationalForm{lhs->numerator * rhs->denominator + rn * lhs->denominator,
                              lhs->denominator * rhs->denominator};
        }
        case BinaryOp::mul:
          return RationalForm{lhs->numerator * rhs->numerator, lhs->denominator * rhs->denominator};
        case BinaryOp::div:
          return RationalForm{lhs->numerator * rhs->denominator, lhs->denominator * rhs->numerator};
      }
      return std::nullopt;
    }
    std::optional<RationalForm> operator()(const Node::Power& p) const {
      auto r = rational_node(*p.base);
      if (!r) return std::nullopt;
      const unsigned n = static_cast<unsigned>(std::abs(p.exponent));
      if (p.exponent >= 0) return RationalForm{r->numerator.pow(n), r->denominator.pow(n)};
      return RationalForm{r->denominator.pow(n), r->numerator.pow(n)};
    }
    std::optional<RationalForm> operator()(const Node::Call&) const { return std::nullopt; }
  };
  return std::visit(Visitor{}, node.v);
}

// ---------------------------------------------------------------------------
// Printing

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_literal(cd v) {
  const double re = v.real(), im = v.imag();
  if (im == 0.0) return re < 0 || std::signbit(re) ? "(" + format_real(re) + ")" : format_real(re);
  std::string s = "(" + format_real(re);
  s += std::signbit(im) ? "-" : "+";
  s += format_real(std::abs(im)) + "*i)";
  return s;
}

void print_node(const Node& node, std::string& out) {
  struct Visitor {
    std::string& out;
    void operator()(const Node::Literal& l) const { out += l.name.empty() ? format_literal(l.value) : l.name; }
    void operator()(const Node::Variable&) const { out += "z"; }
    void operator()(const Node::Negate& n) const {
      out += "(-(";
      print_node(*n.operand, out);
      out += "))";
    }
    void operator()(const Node::Binary& b) const {
      static constexpr const char* ops[] = {" + ", " - ", "*", "/"};
      out += "(";
      print_node(*b.lhs, out);
      out += ops[static_cast<int>(b.op)];
      print_node(*b.rhs, out);
      out += ")";
    }
    void operator()(const Node::Power& p) const {
      out += "(";
      print_node(*p.base, out);
      out += ")^" + std::to_string(p.exponent);
    }
    void operator()(const Node::Call& c) const {
      static constexpr const char* names[] = {"exp", "sin", "cos"};
      out += names[static_cast<int>(c.fn)];
      out += "(";
      print_node(*c.arg, out);
      out += ")";
    }
  };
  std::visit(Visitor{out}, node.v);
}

void collect_terms(const NodePtr& node, double sign, std::vector<Expr::Term>& out,
                   const std::function<Expr(NodePtr)>& wrap) {
  if (const auto* b = std::get_if<Node::Binary>(&node->v); b && (b->op == BinaryOp::add || b->op == BinaryOp::sub)) {
    collect_terms(b->lhs, sign, out, wrap);
    collect_terms(b->rhs, b->op == BinaryOp::add ? sign : -sign, out, wrap);
    return;
  }
  if (const auto* n = std::get_if<Node::Negate>(&node->v)) {
    collect_terms(n->operand, -sign, out, wrap);
    return;
  }
  out.push_back({sign, wrap(node)});
}

}  // namespace

Expr Expr::parse(std::string_view source) { return Expr(Parser(source).parse_all()); }

Expr Expr::variable() { return Expr(make(Node::Variable{})); }

Expr Expr::literal(cd value) { return Expr(make(Node::Literal{value, {}})); }

Expr Expr::sum(const std::vector<Term>& terms) {
  if (terms.empty()) return literal(0.0);
  NodePtr acc = terms.front().sign < 0 ? make(Node::Negate{terms.front().expr.root_}) : terms.front().expr.root_;
  for (std::size_t k = 1; k < terms.size(); ++k)
    acc = make(Node::Binary{terms[k].sign < 0 ? BinaryOp::sub : BinaryOp::add, acc, terms[k].expr.root_});
  return Expr(acc);
}

cd Expr::operator()(cd z) const {
  const cd v = eval_node(*root_, z);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw EvalError(EvalError::Kind::non_finite, "expression value is not finite");
  return v;
}

std::optional<RationalForm> Expr::as_rational() const { return rational_node(*root_); }

std::vector<Expr::Term> Expr::additive_terms() const {
  std::vector<Term> out;
  collect_terms(root_, 1.0, out, [](NodePtr p) { return Expr(std::move(p)); });
  return out;
}

std::string Expr::to_string() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

}  // namespace mero
