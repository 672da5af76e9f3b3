#include "ptoep/symbol.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

#include "ptoep/rng.hpp"

namespace ptoep {

namespace {

enum class Func { kExp, kSin, kCos, kSqrt, kAtan, kRe, kIm, kConj, kAbs };

const char* func_name(Func f) {
  switch (f) {
    case Func::kExp: return "exp";
    case Func::kSin: return "sin";
    case Func::kCos: return "cos";
    case Func::kSqrt: return "sqrt";
    case Func::kAtan: return "atan";
    case Func::kRe: return "re";
    case Func::kIm: return "im";
    case Func::kConj: return "conj";
    case Func::kAbs: return "abs";
  }
  return "?";
}

bool lookup_func(const std::string& name, Func& out) {
  static const std::pair<const char*, Func> table[] = {
      {"exp", Func::kExp},   {"sin", Func::kSin}, {"cos", Func::kCos},
      {"sqrt", Func::kSqrt}, {"atan", Func::kAtan}, {"re", Func::kRe},
      {"im", Func::kIm},     {"conj", Func::kConj}, {"abs", Func::kAbs}};
  for (const auto& [key, value] : table) {
    if (name == key) {
      out = value;
      return true;
    }
  }
  return false;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

struct SymbolExpr::Node {
  enum class Kind {
    kNumber, kVarZ, kVarR, kRho2, kNeg, kAdd, kSub, kMul, kDiv, kPow, kFunc
  };

  Kind kind;
  double number = 0.0;   // kNumber
  int index = 0;         // kVarZ/kVarR: 1-based coordinate
  int exponent = 0;      // kPow
  Func func = Func::kExp;
  std::unique_ptr<Node> lhs, rhs;

  explicit Node(Kind k) : kind(k) {}
};

namespace {

using Node = SymbolExpr::Node;
using Kind = Node::Kind;
using NodePtr = std::unique_ptr<Node>;

class Lexer {
 public:
  Lexer(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  size_t pos() const { return pos_; }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool number_ahead() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return c == '.' && pos_ + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  double read_number() {
    skip_ws();
    double value = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [next, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || next == begin) {
      throw ParseError("malformed number literal", pos_);
    }
    pos_ += static_cast<size_t>(next - begin);
    return value;
  }

  bool ident_ahead() {
    skip_ws();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  std::string read_ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, int n) : lex_(text), n_(n) {}

  NodePtr run() {
    NodePtr root = parse_expr();
    if (!lex_.eof()) throw ParseError("unexpected trailing input", lex_.pos());
    return root;
  }

 private:
  NodePtr parse_expr() {
    NodePtr left = parse_term();
    for (;;) {
      if (lex_.consume('+')) {
        left = binary(Kind::kAdd, std::move(left), parse_term());
      } else if (lex_.consume('-')) {
        left = binary(Kind::kSub, std::move(left), parse_term());
      } else {
        return left;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr left = parse_factor();
    for (;;) {
      if (lex_.consume('*')) {
        left = binary(Kind::kMul, std::move(left), parse_factor());
      } else if (lex_.consume('/')) {
        left = binary(Kind::kDiv, std::move(left), parse_factor());
      } else {
        return left;
      }
    }
  }

  NodePtr parse_factor() {
    if (lex_.consume('-')) {
      auto node = std::make_unique<Node>(Kind::kNeg);
      node->lhs = parse_factor();
      return node;
    }
    if (lex_.consume('+')) return parse_factor();
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    lex_.peek();  // position past any whitespace
    size_t caret_pos = lex_.pos();
    if (!lex_.consume('^')) return base;
    NodePtr exp = parse_factor();  // right-associative via the recursion in parse_factor/parse_power
    auto node = std::make_unique<Node>(Kind::kPow);
    node->lhs = std::move(base);
    node->exponent = fold_integer_exponent(*exp, caret_pos);
    return node;
  }

  NodePtr parse_primary() {
    if (lex_.number_ahead()) {
      auto node = std::make_unique<Node>(Kind::kNumber);
      node->number = lex_.read_number();
      return node;
    }
    if (lex_.ident_ahead()) return parse_ident();
    size_t open_pos = lex_.pos();
    if (lex_.consume('(')) {
      NodePtr inner = parse_expr();
      if (!lex_.consume(')')) throw ParseError("missing closing parenthesis", open_pos);
      return inner;
    }
    throw ParseError("expected a number, variable, function or parenthesis", lex_.pos());
  }

  NodePtr parse_ident() {
    size_t start = lex_.pos();
    std::string name = lex_.read_ident();
    Func func;
    if (lookup_func(name, func)) {
      if (!lex_.consume('(')) {
        throw ParseError("function '" + name + "' requires parentheses", lex_.pos());
      }
      NodePtr arg = parse_expr();
      if (!lex_.consume(')')) throw ParseError("missing closing parenthesis", start);
      auto node = std::make_unique<Node>(Kind::kFunc);
      node->func = func;
      node->lhs = std::move(arg);
      return node;
    }
    if (name == "rho2") return std::make_unique<Node>(Kind::kRho2);
    if ((name[0] == 'z' || name[0] == 'r') && name.size() > 1) {
      int index = 0;
      auto [next, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
      if (ec == std::errc{} && next == name.data() + name.size()) {
        if (index < 1 || index > n_) {
          throw ParseError("variable '" + name + "' out of range for n = " +
                               std::to_string(n_), start);
        }
        auto node = std::make_unique<Node>(name[0] == 'z' ? Kind::kVarZ : Kind::kVarR);
        node->index = index;
        return node;
      }
    }
    throw ParseError("unknown identifier '" + name + "'", start);
  }

  static NodePtr binary(Kind kind, NodePtr lhs, NodePtr rhs) {
    auto node = std::make_unique<Node>(kind);
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  // Powers are restricted to integer exponents; constant subexpressions such
  // as (-2) or (1+1) fold at parse time.
  int fold_integer_exponent(const Node& node, size_t caret_pos) const {
    double value = 0.0;
    if (!fold_constant(node, value)) {
      throw ParseError("exponent must be an integer constant", caret_pos);
    }
    double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-9 || std::abs(rounded) > 1e9) {
      throw ParseError("exponent must be an integer constant", caret_pos);
    }
    return static_cast<int>(rounded);
  }

  static bool fold_constant(const Node& node, double& out) {
    double a, b;
    switch (node.kind) {
      case Kind::kNumber: out = node.number; return true;
      case Kind::kNeg:
        if (!fold_constant(*node.lhs, a)) return false;
        out = -a;
        return true;
      case Kind::kAdd:
      case Kind::kSub:
      case Kind::kMul:
      case Kind::kDiv:
        if (!fold_constant(*node.lhs, a) || !fold_constant(*node.rhs, b)) return false;
        switch (node.kind) {
          case Kind::kAdd: out = a + b; break;
          case Kind::kSub: out = a - b; break;
          case Kind::kMul: out = a * b; break;
          default: out = a / b; break;
        }
        return true;
      case Kind::kPow:
        if (!fold_constant(*node.lhs, a)) return false;
        out = std::pow(a, node.exponent);
        return true;
      default:
        return false;
    }
  }

  Lexer lex_;
  int n_;
};

bool mentions_z(const Node& node) {
  if (node.kind == Kind::kVarZ) return true;
  if (node.lhs && mentions_z(*node.lhs)) return true;
  if (node.rhs && mentions_z(*node.rhs)) return true;
  return false;
}

using Complex = std::complex<double>;

bool nearly_real(const Complex& v) {
  return std::abs(v.imag()) <= 1e-12 * (1.0 + std::abs(v));
}

Complex ipow(Complex base, int exponent) {
  if (exponent < 0) {
    if (base == Complex(0.0, 0.0)) throw EvalError("zero raised to a negative power");
    return Complex(1.0, 0.0) / ipow(base, -exponent);
  }
  Complex result(1.0, 0.0);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Complex eval_node(const Node& node, std::span<const Complex> z) {
  switch (node.kind) {
    case Kind::kNumber: return {node.number, 0.0};
    case Kind::kVarZ: return z[static_cast<size_t>(node.index - 1)];
    case Kind::kVarR: return {std::abs(z[static_cast<size_t>(node.index - 1)]), 0.0};
    case Kind::kRho2: {
      double acc = 0.0;
      for (const Complex& zj : z) acc += std::norm(zj);
      return {acc, 0.0};
    }
    case Kind::kNeg: return -eval_node(*node.lhs, z);
    case Kind::kAdd: return eval_node(*node.lhs, z) + eval_node(*node.rhs, z);
    case Kind::kSub: return eval_node(*node.lhs, z) - eval_node(*node.rhs, z);
    case Kind::kMul: return eval_node(*node.lhs, z) * eval_node(*node.rhs, z);
    case Kind::kDiv: {
      Complex den = eval_node(*node.rhs, z);
      if (den == Complex(0.0, 0.0)) throw EvalError("division by zero");
      return eval_node(*node.lhs, z) / den;
    }
    case Kind::kPow: return ipow(eval_node(*node.lhs, z), node.exponent);
    case Kind::kFunc: {
      Complex v = eval_node(*node.lhs, z);
      switch (node.func) {
        case Func::kExp: return std::exp(v);
        case Func::kSin: return std::sin(v);
        case Func::kCos: return std::cos(v);
        case Func::kSqrt:
          if (!nearly_real(v)) throw EvalError("sqrt of a non-real value");
          if (v.real() < 0.0) throw EvalError("sqrt of a negative value");
          return {std::sqrt(v.real()), 0.0};
        case Func::kAtan:
          if (!nearly_real(v)) throw EvalError("atan of a non-real value");
          return {std::atan(v.real()), 0.0};
        case Func::kRe: return {v.real(), 0.0};
        case Func::kIm: return {v.imag(), 0.0};
        case Func::kConj: return std::conj(v);
        case Func::kAbs: return {std::abs(v), 0.0};
      }
      throw EvalError("unhandled function");
    }
  }
  throw EvalError("unhandled node");
}

void print_node(const Node& node, std::string& out) {
  switch (node.kind) {
    case Kind::kNumber: out += format_number(node.number); return;
    case Kind::kVarZ: out += "z" + std::to_string(node.index); return;
    case Kind::kVarR: out += "r" + std::to_string(node.index); return;
    case Kind::kRho2: out += "rho2"; return;
    case Kind::kNeg:
      out += "(-";
      print_node(*node.lhs, out);
      out += ")";
      return;
    case Kind::kAdd:
    case Kind::kSub:
    case Kind::kMul:
    case Kind::kDiv: {
      const char* op = node.kind == Kind::kAdd   ? " + "
                       : node.kind == Kind::kSub ? " - "
                       : node.kind == Kind::kMul ? "*"
                                                 : "/";
      out += "(";
      print_node(*node.lhs, out);
      out += op;
      print_node(*node.rhs, out);
      out += ")";
      return;
    }
    case Kind::kPow:
      out += "(";
      print_node(*node.lhs, out);
      out += "^" + std::to_string(node.exponent) + ")";
      return;
    case Kind::kFunc:
      out += func_name(node.func);
      out += "(";
      print_node(*node.lhs, out);
      out += ")";
      return;
  }
}

bool nodes_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::kNumber: return a.number == b.number;
    case Kind::kVarZ:
    case Kind::kVarR: return a.index == b.index;
    case Kind::kRho2: return true;
    case Kind::kPow:
      return a.exponent == b.exponent && nodes_equal(*a.lhs, *b.lhs);
    case Kind::kFunc:
      return a.func == b.func && nodes_equal(*a.lhs, *b.lhs);
    case Kind::kNeg: return nodes_equal(*a.lhs, *b.lhs);
    default:
      return nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
  }
}

}  // namespace

SymbolExpr SymbolExpr::parse(const std::string& text, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Parser parser(text, n);
  SymbolExpr expr;
  expr.root_ = std::shared_ptr<const Node>(parser.run().release());
  expr.n_ = n;
  expr.radiality_ = mentions_z(*expr.root_) ? Radiality::kSyntacticallyGeneral
                                            : Radiality::kSyntacticallyRadial;
  expr.source_ = text;
  return expr;
}

std::complex<double> SymbolExpr::eval(std::span<const std::complex<double>> z) const {
  if (!root_) throw EvalError("empty expression");
  if (static_cast<int>(z.size()) != n_) {
    throw EvalError("point dimension does not match the parsed n");
  }
  return eval_node(*root_, z);
}

std::string SymbolExpr::str() const {
  std::string out;
  if (root_) print_node(*root_, out);
  return out;
}

bool SymbolExpr::same_tree(const SymbolExpr& other) const {
  if (n_ != other.n_) return false;
  if (!root_ || !other.root_) return root_ == other.root_;
  return nodes_equal(*root_, *other.root_);
}

std::function<std::complex<double>(std::span<const std::complex<double>>)>
as_function(const SymbolExpr& expr) {
  return [expr](std::span<const std::complex<double>> z) { return expr.eval(z); };
}

std::vector<std::complex<double>> apply_torus(std::span<const double> angles,
                                              std::span<const std::complex<double>> z) {
  if (angles.size() != z.size()) {
    throw std::invalid_argument("torus element and point dimension mismatch");
  }
  std::vector<std::complex<double>> out(z.size());
  for (size_t j = 0; j < z.size(); ++j) {
    out[j] = std::polar(1.0, angles[j]) * z[j];
  }
  return out;
}

InvarianceReport check_torus_invariance(const SymbolExpr& expr, int trials,
                                        std::uint64_t seed, double tol) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  const int n = expr.dim();
  Rng rng(seed);
  double max_dev = 0.0;
  TorusElement t(static_cast<size_t>(n));
  for (int trial = 0; trial < trials; ++trial) {
    for (double& tj : t) tj = rng.angle();
    const auto z = rng.nonzero_point(n, 3.0);
    const auto tz = apply_torus(t, z);
    max_dev = std::max(max_dev, std::abs(expr.eval(tz) - expr.eval(z)));
  }
  return {max_dev <= tol, max_dev};
}

}  // namespace ptoep
