#include "casdsl/expr.hpp"

#include <cctype>

#include "casdsl/error.hpp"

namespace casdsl {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  };
  if (!alpha(name.front())) return false;
  for (char c : name) {
    if (!alpha(c) && !std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Sym::Sym(std::string name) : name_(std::move(name)) {
  if (!is_identifier(name_)) {
    throw Error(ErrorKind::BadSymbolName,
                "invalid symbol name '" + name_ + "'");
  }
}

Expr::Expr(Number n) : node_(std::make_shared<const Node>(std::move(n))) {}
Expr::Expr(Sym s) : node_(std::make_shared<const Node>(std::move(s))) {}

bool Expr::is_number() const { return std::holds_alternative<Number>(*node_); }
bool Expr::is_symbol() const { return std::holds_alternative<Sym>(*node_); }
const Number& Expr::as_number() const { return std::get<Number>(*node_); }
const Sym& Expr::as_symbol() const { return std::get<Sym>(*node_); }
const NegNode* Expr::as_neg() const { return std::get_if<NegNode>(node_.get()); }
const BinaryNode* Expr::as_binary() const {
  return std::get_if<BinaryNode>(node_.get());
}
const CallNode* Expr::as_call() const {
  return std::get_if<CallNode>(node_.get());
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const Expr::Node& x = *a.node_;
  const Expr::Node& y = *b.node_;
  if (x.index() != y.index()) return false;
  if (const auto* n = std::get_if<Number>(&x)) return *n == std::get<Number>(y);
  if (const auto* s = std::get_if<Sym>(&x)) return *s == std::get<Sym>(y);
  if (const auto* g = std::get_if<NegNode>(&x)) {
    return g->operand == std::get<NegNode>(y).operand;
  }
  if (const auto* bx = std::get_if<BinaryNode>(&x)) {
    const auto& by = std::get<BinaryNode>(y);
    return bx->op == by.op && bx->lhs == by.lhs && bx->rhs == by.rhs;
  }
  const auto& cx = std::get<CallNode>(x);
  const auto& cy = std::get<CallNode>(y);
  return cx.name == cy.name && cx.args == cy.args;
}

Expr expr_binop(ArithOp op, const Expr& lhs, const Expr& rhs) {
  if (lhs.is_number() && rhs.is_number()) {
    return Expr(num_binop(op, lhs.as_number(), rhs.as_number()));
  }
  return Expr(std::make_shared<const Expr::Node>(BinaryNode{op, lhs, rhs}));
}

Expr expr_neg(const Expr& e) {
  if (e.is_number()) return Expr(-e.as_number());
  if (const auto* inner = e.as_neg()) return inner->operand;
  return Expr(std::make_shared<const Expr::Node>(NegNode{e}));
}

Expr expr_call(std::string name, std::vector<Expr> args) {
  if (!is_identifier(name)) {
    throw Error(ErrorKind::BadSymbolName,
                "invalid function name '" + name + "'");
  }
  return Expr(std::make_shared<const Expr::Node>(
      CallNode{std::move(name), std::move(args)}));
}

int precedence::of(const Number& n) {
  if (!n.is_integer()) return kMultiplicative;
  return n.sign() < 0 ? kUnary : kAtom;
}

namespace {

int precedence_of(const Expr& e) {
  if (e.is_number()) return precedence::of(e.as_number());
  if (e.as_neg() != nullptr) return precedence::kUnary;
  if (const auto* b = e.as_binary()) return precedence::of(b->op);
  return precedence::kAtom;
}

void render(const Expr& e, std::string& out);

void render_operand(const Expr& e, bool parens, std::string& out) {
  if (parens) out += '(';
  render(e, out);
  if (parens) out += ')';
}

void render(const Expr& e, std::string& out) {
  if (e.is_number()) {
    out += e.as_number().to_string();
  } else if (e.is_symbol()) {
    out += e.as_symbol().name();
  } else if (const auto* n = e.as_neg()) {
    out += '-';
    render_operand(n->operand, precedence_of(n->operand) < precedence::kUnary,
                   out);
  } else if (const auto* b = e.as_binary()) {
    const int p = precedence::of(b->op);
    const bool right = precedence::right_associative(b->op);
    const int lp = precedence_of(b->lhs);
    const int rp = precedence_of(b->rhs);
    render_operand(b->lhs, lp < p || (right && lp == p), out);
    out += symbol_of(b->op);
    render_operand(b->rhs, rp < p || (!right && rp == p), out);
  } else {
    const auto& c = *e.as_call();
    out += c.name;
    out += '(';
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      if (i > 0) out += ',';
      render(c.args[i], out);
    }
    out += ')';
  }
}

}  // namespace

std::string expr_to_string(const Expr& e) {
  std::string out;
  render(e, out);
  return out;
}

}  // namespace casdsl
