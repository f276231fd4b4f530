#include "lbiso/expr.hpp"

#include <cctype>
#include <sstream>

namespace lbiso {

struct ExprNode {
  enum Kind { kConst, kParam, kAdd, kSub, kMul, kDiv, kNeg, kPow } kind;
  Rational value;
  std::string name;
  std::shared_ptr<const ExprNode> a, b;
  int exp = 0;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_const(const Rational& c) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::kConst;
  n->value = c;
  return n;
}

int precedence(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::kConst:
      return n.value.sign() < 0 ? 40 : 100;
    case ExprNode::kParam:
      return 100;
    case ExprNode::kPow:
      return 50;
    case ExprNode::kNeg:
      return 40;
    case ExprNode::kMul:
    case ExprNode::kDiv:
      return 30;
    case ExprNode::kAdd:
    case ExprNode::kSub:
      return 20;
  }
  return 0;
}

void render(const ExprNode& n, int min_prec, std::ostream& os) {
  const int prec = precedence(n);
  const bool parens = prec < min_prec;
  if (parens) os << "(";
  switch (n.kind) {
    case ExprNode::kConst:
      os << n.value;
      break;
    case ExprNode::kParam:
      os << n.name;
      break;
    case ExprNode::kAdd:
      render(*n.a, 20, os);
      os << " + ";
      render(*n.b, 21, os);
      break;
    case ExprNode::kSub:
      render(*n.a, 20, os);
      os << " - ";
      render(*n.b, 21, os);
      break;
    case ExprNode::kMul:
      render(*n.a, 30, os);
      os << "*";
      render(*n.b, 31, os);
      break;
    case ExprNode::kDiv:
      render(*n.a, 30, os);
      os << "/";
      render(*n.b, 31, os);
      break;
    case ExprNode::kNeg:
      os << "-";
      render(*n.a, 41, os);
      break;
    case ExprNode::kPow:
      render(*n.a, 51, os);
      os << "^" << n.exp;
      break;
  }
  if (parens) os << ")";
}

void collect(const ExprNode& n, std::set<std::string>& out) {
  if (n.kind == ExprNode::kParam) out.insert(n.name);
  if (n.a) collect(*n.a, out);
  if (n.b) collect(*n.b, out);
}

Rational eval_node(const ExprNode& n, const ParamPoint& p) {
  switch (n.kind) {
    case ExprNode::kConst:
      return n.value;
    case ExprNode::kParam:
      return p.get(n.name);
    case ExprNode::kAdd:
      return eval_node(*n.a, p) + eval_node(*n.b, p);
    case ExprNode::kSub:
      return eval_node(*n.a, p) - eval_node(*n.b, p);
    case ExprNode::kMul:
      return eval_node(*n.a, p) * eval_node(*n.b, p);
    case ExprNode::kDiv: {
      Rational den = eval_node(*n.b, p);
      if (den.is_zero()) throw Error("Expr: division by zero while evaluating");
      return eval_node(*n.a, p) / den;
    }
    case ExprNode::kNeg:
      return -eval_node(*n.a, p);
    case ExprNode::kPow:
      return eval_node(*n.a, p).pow(n.exp);
  }
  throw Error("Expr: corrupt node");
}

bool equal_nodes(const ExprNode& x, const ExprNode& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case ExprNode::kConst:
      return x.value == y.value;
    case ExprNode::kParam:
      return x.name == y.name;
    case ExprNode::kNeg:
      return equal_nodes(*x.a, *y.a);
    case ExprNode::kPow:
      return x.exp == y.exp && equal_nodes(*x.a, *y.a);
    default:
      return equal_nodes(*x.a, *y.a) && equal_nodes(*x.b, *y.b);
  }
}

}  // namespace

Expr::Expr() : n_(make_const(Rational(0))) {}

Expr Expr::constant(const Rational& c) { return Expr(make_const(c)); }

Expr Expr::param(const std::string& name) {
  if (name.empty()) throw Error("Expr: empty parameter name");
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::kParam;
  n->name = name;
  return Expr(n);
}

bool Expr::is_constant() const { return n_->kind == ExprNode::kConst; }

Rational Expr::constant_value() const {
  if (!is_constant()) throw Error("Expr: not a constant");
  return n_->value;
}

namespace {

NodePtr binary_node(ExprNode::Kind kind, NodePtr a, NodePtr b) {
  if (a->kind == ExprNode::kConst && b->kind == ExprNode::kConst) {
    switch (kind) {
      case ExprNode::kAdd:
        return make_const(a->value + b->value);
      case ExprNode::kSub:
        return make_const(a->value - b->value);
      case ExprNode::kMul:
        return make_const(a->value * b->value);
      case ExprNode::kDiv:
        if (b->value.is_zero()) throw Error("Expr: constant division by zero");
        return make_const(a->value / b->value);
      default:
        break;
    }
  }
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) {
  return Expr(binary_node(ExprNode::kAdd, a.n_, b.n_));
}
Expr operator-(const Expr& a, const Expr& b) {
  return Expr(binary_node(ExprNode::kSub, a.n_, b.n_));
}
Expr operator*(const Expr& a, const Expr& b) {
  return Expr(binary_node(ExprNode::kMul, a.n_, b.n_));
}
Expr operator/(const Expr& a, const Expr& b) {
  return Expr(binary_node(ExprNode::kDiv, a.n_, b.n_));
}

Expr Expr::operator-() const {
  if (is_constant()) return constant(-constant_value());
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::kNeg;
  n->a = n_;
  return Expr(n);
}

Expr Expr::pow(int e) const {
  if (is_constant()) return constant(constant_value().pow(e));
  if (e == 1) return *this;
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::kPow;
  n->a = n_;
  n->exp = e;
  return Expr(n);
}

Rational Expr::eval(const ParamPoint& p) const { return eval_node(*n_, p); }

std::set<std::string> Expr::params() const {
  std::set<std::string> out;
  collect(*n_, out);
  return out;
}

std::string Expr::to_string() const {
  std::ostringstream os;
  render(*n_, 0, os);
  return os.str();
}

bool operator==(const Expr& a, const Expr& b) { return equal_nodes(*a.n_, *b.n_); }

namespace {

/// Recursive-descent parser for the expression grammar.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = sum();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "Expr: parse error at position " << pos_ << ": " << what << " in '" << text_ << "'";
    throw Error(os.str());
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      if (eat('+')) {
        e = e + product();
      } else if (eat('-')) {
        e = e - product();
      } else {
        return e;
      }
    }
  }

  Expr product() {
    Expr e = factor();
    for (;;) {
      if (eat('*')) {
        e = e * factor();
      } else if (eat('/')) {
        e = e / factor();
      } else {
        return e;
      }
    }
  }

  Expr factor() {
    if (eat('-')) return -factor();
    Expr e = primary();
    if (eat('^')) {
      bool neg = eat('-');
      int v = integer();
      e = e.pow(neg ? -v : v);
    }
    return e;
  }

  int integer() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr::constant(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Expr::param(std::string(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr Expr::parse(std::string_view text) { return Parser(text).parse(); }

Expr lambda_pow(int e) { return Expr::param("lambda").pow(e); }

}  // namespace lbiso
