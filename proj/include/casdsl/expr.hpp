#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "casdsl/number.hpp"

namespace casdsl {

/// True for `[A-Za-z_][A-Za-z0-9_]*`.
bool is_identifier(std::string_view name);

/// An indeterminate. Two symbols are equal iff their names are equal.
class Sym {
 public:
  /// Throws BadSymbolName unless `name` is identifier-shaped.
  explicit Sym(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Sym&, const Sym&) = default;
  friend auto operator<=>(const Sym&, const Sym&) = default;

 private:
  std::string name_;
};

inline Sym mk_symbol(std::string name) { return Sym(std::move(name)); }

struct NegNode;
struct BinaryNode;
struct CallNode;

/// Immutable symbolic expression.
///
/// Leaves are numbers and symbols; inner nodes are negation, binary
/// arithmetic and named function application. Nodes are shared, so copying
/// an Expr is cheap. The factory functions below fold numeric
/// subexpressions eagerly: no reachable Binary node has two number children
/// and no Neg node wraps a number or another Neg.
class Expr {
 public:
  using Node = std::variant<Number, Sym, NegNode, BinaryNode, CallNode>;

  Expr(Number n);  // NOLINT(implicit)
  Expr(Sym s);     // NOLINT(implicit)
  Expr(long n) : Expr(Number(n)) {}  // NOLINT(implicit)

  const Node& node() const;

  bool is_number() const;
  bool is_symbol() const;
  const Number& as_number() const;
  const Sym& as_symbol() const;
  const NegNode* as_neg() const;
  const BinaryNode* as_binary() const;
  const CallNode* as_call() const;

  /// Structural equality; numbers compare by value.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  friend Expr expr_binop(ArithOp, const Expr&, const Expr&);
  friend Expr expr_neg(const Expr&);
  friend Expr expr_call(std::string, std::vector<Expr>);

  std::shared_ptr<const Node> node_;
};

struct NegNode {
  Expr operand;
};

struct BinaryNode {
  ArithOp op;
  Expr lhs;
  Expr rhs;
};

struct CallNode {
  std::string name;
  std::vector<Expr> args;
};

inline const Expr::Node& Expr::node() const { return *node_; }

/// Folds when both operands are numbers, otherwise builds a Binary node.
Expr expr_binop(ArithOp op, const Expr& lhs, const Expr& rhs);
Expr expr_neg(const Expr& e);
/// Unevaluated application; throws BadSymbolName for a malformed name.
Expr expr_call(std::string name, std::vector<Expr> args);

/// Infix rendering with the minimum parentheses needed to parse back to the
/// same tree. Power prints as `^`.
std::string expr_to_string(const Expr& e);

inline Expr operator+(const Expr& a, const Expr& b) {
  return expr_binop(ArithOp::Add, a, b);
}
inline Expr operator-(const Expr& a, const Expr& b) {
  return expr_binop(ArithOp::Sub, a, b);
}
inline Expr operator*(const Expr& a, const Expr& b) {
  return expr_binop(ArithOp::Mul, a, b);
}
inline Expr operator/(const Expr& a, const Expr& b) {
  return expr_binop(ArithOp::Div, a, b);
}
inline Expr operator-(const Expr& a) { return expr_neg(a); }
inline Expr pow(const Expr& a, const Expr& b) {
  return expr_binop(ArithOp::Pow, a, b);
}

namespace precedence {
// Binding strength shared by the printer and the parser.
inline constexpr int kAdditive = 10;
inline constexpr int kMultiplicative = 20;
inline constexpr int kUnary = 30;
inline constexpr int kPower = 40;
inline constexpr int kPostfix = 50;
inline constexpr int kAtom = 60;

constexpr int of(ArithOp op) {
  switch (op) {
    case ArithOp::Add:
    case ArithOp::Sub: return kAdditive;
    case ArithOp::Mul:
    case ArithOp::Div: return kMultiplicative;
    case ArithOp::Pow: return kPower;
  }
  return kAtom;
}

constexpr bool right_associative(ArithOp op) { return op == ArithOp::Pow; }

/// Precedence of a number literal as printed: `-3` reads as a negation and
/// `5/9` as a division.
int of(const Number& n);
}  // namespace precedence

}  // namespace casdsl
