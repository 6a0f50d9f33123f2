#include "casdsl/parser.hpp"

#include <optional>

#include "casdsl/expr.hpp"

namespace casdsl {

bool operator==(const Ast& a, const Ast& b) {
  return a.kind == b.kind && a.text == b.text &&
         (a.kind != Ast::Kind::BinOp || a.op == b.op) &&
         a.children == b.children;
}

namespace {

// Binding powers. Left-associative operators bind their right operand one
// step tighter; power does the opposite.
struct Binding {
  int left;
  int right;
};

constexpr Binding binding_of(ArithOp op) {
  const int p = precedence::of(op);
  return precedence::right_associative(op) ? Binding{p + 1, p}
                                           : Binding{p, p + 1};
}

std::optional<ArithOp> binary_op(const Token& t) {
  if (t.kind != TokenKind::Op) return std::nullopt;
  if (t.text == "+") return ArithOp::Add;
  if (t.text == "-") return ArithOp::Sub;
  if (t.text == "*") return ArithOp::Mul;
  if (t.text == "/") return ArithOp::Div;
  return ArithOp::Pow;  // `^` and `**`
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::IntLit: return "integer literal " + t.text;
    case TokenKind::Ident: return "identifier '" + t.text + "'";
    case TokenKind::String: return "string literal";
    case TokenKind::Op: return "'" + t.text + "'";
    default: return std::string(to_string(t.kind));
  }
}

class Parser {
 public:
  Parser(std::span<const Token> tokens, const ParseOptions& options)
      : tokens_(tokens), options_(options) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::Eof) {
      throw Error(ErrorKind::ParseError, "token stream must end with EOF");
    }
  }

  std::vector<Stmt> statements() {
    std::vector<Stmt> out;
    for (;;) {
      while (at(TokenKind::Newline) || at(TokenKind::Semi)) advance();
      if (at(TokenKind::Eof)) break;
      out.push_back(statement());
    }
    return out;
  }

  Ast single_expression() {
    while (at(TokenKind::Newline)) advance();
    Ast e = expression(0);
    while (at(TokenKind::Newline)) advance();
    if (!at(TokenKind::Eof)) fail("end of input");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t j = i_ + ahead;
    return j < tokens_.size() ? tokens_[j] : tokens_.back();
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }

  const Token& advance() {
    const Token& t = tokens_[i_];
    if (i_ + 1 < tokens_.size()) ++i_;
    last_kind_ = t.kind;
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw Error(ErrorKind::ParseError,
                "expected " + expected + ", found " + describe(peek()),
                peek().pos);
  }

  const Token& expect(TokenKind kind) {
    if (!at(kind)) fail(std::string(to_string(kind)));
    return advance();
  }

  bool destructuring_ahead() const {
    std::size_t j = 0;
    if (peek(j).kind != TokenKind::Ident) return false;
    ++j;
    bool saw_comma = false;
    while (peek(j).kind == TokenKind::Comma) {
      if (peek(j + 1).kind != TokenKind::Ident) return false;
      saw_comma = true;
      j += 2;
    }
    return saw_comma && peek(j).kind == TokenKind::Assign;
  }

  Stmt statement() {
    Stmt s;
    s.pos = peek().pos;
    if (at(TokenKind::Ident) && peek(1).kind == TokenKind::Assign) {
      s.kind = Stmt::Kind::Assign;
      s.targets.push_back(advance().text);
      advance();
    } else if (destructuring_ahead()) {
      s.kind = Stmt::Kind::Destructure;
      s.targets.push_back(advance().text);
      while (at(TokenKind::Comma)) {
        advance();
        s.targets.push_back(advance().text);
      }
      expect(TokenKind::Assign);
    }
    s.value = expression(0);
    if (at(TokenKind::Semi)) {
      s.echo = false;
      advance();
    } else if (at(TokenKind::Newline)) {
      advance();
    } else if (!at(TokenKind::Eof)) {
      fail("';' or newline");
    }
    return s;
  }

  bool starts_factor() const {
    return at(TokenKind::IntLit) || at(TokenKind::Ident) ||
           at(TokenKind::LParen);
  }

  bool is_call_site(const Ast& lhs) const {
    if (lhs.kind != Ast::Kind::Ident || !at(TokenKind::LParen)) return false;
    if (!options_.implicit_mul) return true;
    return options_.is_callable && options_.is_callable(lhs.text);
  }

  Ast expression(int min_bp) {
    Ast lhs = prefix();
    for (;;) {
      const Token& t = peek();
      if (precedence::kPostfix >= min_bp) {
        if (is_call_site(lhs)) {
          lhs = call(std::move(lhs));
          continue;
        }
        if (t.kind == TokenKind::Dot) {
          lhs = method_call(std::move(lhs));
          continue;
        }
        if (t.kind == TokenKind::LBracket) {
          lhs = index(std::move(lhs));
          continue;
        }
      }
      if (auto op = binary_op(t)) {
        const Binding b = binding_of(*op);
        if (b.left < min_bp) break;
        const SourcePos pos = advance().pos;
        Ast rhs = expression(b.right);
        lhs = binop(*op, std::move(lhs), std::move(rhs), pos);
        continue;
      }
      if (options_.implicit_mul && starts_factor()) {
        const Binding b = binding_of(ArithOp::Mul);
        if (b.left < min_bp) break;
        if (last_kind_ == TokenKind::IntLit && at(TokenKind::IntLit)) {
          throw Error(ErrorKind::ParseError,
                      "juxtaposed integer literals need an explicit operator",
                      t.pos);
        }
        const SourcePos pos = t.pos;
        Ast rhs = expression(b.right);
        lhs = binop(ArithOp::Mul, std::move(lhs), std::move(rhs), pos);
        continue;
      }
      break;
    }
    return lhs;
  }

  static Ast binop(ArithOp op, Ast lhs, Ast rhs, SourcePos pos) {
    Ast node;
    node.kind = Ast::Kind::BinOp;
    node.op = op;
    node.pos = pos;
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  Ast prefix() {
    const Token& t = peek();
    Ast node;
    node.pos = t.pos;
    switch (t.kind) {
      case TokenKind::IntLit:
        node.kind = Ast::Kind::IntLit;
        node.text = advance().text;
        return node;
      case TokenKind::Ident:
        node.kind = Ast::Kind::Ident;
        node.text = advance().text;
        return node;
      case TokenKind::String:
        node.kind = Ast::Kind::StrLit;
        node.text = advance().text;
        return node;
      case TokenKind::Op:
        if (t.text != "-") break;
        advance();
        node.kind = Ast::Kind::UnaryNeg;
        node.children.push_back(expression(precedence::kUnary));
        return node;
      case TokenKind::LParen: {
        advance();
        Ast inner = expression(0);
        expect(TokenKind::RParen);
        return inner;
      }
      case TokenKind::LBracket:
        advance();
        node.kind = Ast::Kind::ListLit;
        node.children = arguments(TokenKind::RBracket);
        return node;
      default:
        break;
    }
    fail("expression");
  }

  std::vector<Ast> arguments(TokenKind close) {
    std::vector<Ast> out;
    if (at(close)) {
      advance();
      return out;
    }
    for (;;) {
      out.push_back(expression(0));
      if (at(TokenKind::Comma)) {
        advance();
        continue;
      }
      expect(close);
      return out;
    }
  }

  Ast call(Ast callee) {
    Ast node;
    node.kind = Ast::Kind::Call;
    node.text = std::move(callee.text);
    node.pos = callee.pos;
    advance();
    node.children = arguments(TokenKind::RParen);
    return node;
  }

  Ast method_call(Ast receiver) {
    Ast node;
    node.kind = Ast::Kind::MethodCall;
    node.pos = advance().pos;
    node.text = expect(TokenKind::Ident).text;
    expect(TokenKind::LParen);
    node.children.push_back(std::move(receiver));
    for (Ast& a : arguments(TokenKind::RParen)) {
      node.children.push_back(std::move(a));
    }
    return node;
  }

  Ast index(Ast target) {
    Ast node;
    node.kind = Ast::Kind::Index;
    node.pos = advance().pos;
    node.children.push_back(std::move(target));
    node.children.push_back(expression(0));
    expect(TokenKind::RBracket);
    return node;
  }

  std::span<const Token> tokens_;
  const ParseOptions& options_;
  std::size_t i_ = 0;
  TokenKind last_kind_ = TokenKind::Eof;
};

int precedence_of(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::UnaryNeg: return precedence::kUnary;
    case Ast::Kind::BinOp: return precedence::of(a.op);
    case Ast::Kind::Call:
    case Ast::Kind::MethodCall:
    case Ast::Kind::Index: return precedence::kPostfix;
    default: return precedence::kAtom;
  }
}

void render(const Ast& a, std::string& out);

void render_operand(const Ast& a, bool parens, std::string& out) {
  if (parens) out += '(';
  render(a, out);
  if (parens) out += ')';
}

void render_list(std::span<const Ast> items, std::string& out) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    render(items[i], out);
  }
}

void render(const Ast& a, std::string& out) {
  switch (a.kind) {
    case Ast::Kind::IntLit:
    case Ast::Kind::Ident:
      out += a.text;
      return;
    case Ast::Kind::StrLit: {
      const char quote = a.text.find('\'') == std::string::npos ? '\'' : '"';
      out += quote;
      out += a.text;
      out += quote;
      return;
    }
    case Ast::Kind::UnaryNeg:
      out += '-';
      render_operand(a.children[0],
                     precedence_of(a.children[0]) < precedence::kUnary, out);
      return;
    case Ast::Kind::BinOp: {
      const int p = precedence::of(a.op);
      const bool right = precedence::right_associative(a.op);
      const int lp = precedence_of(a.children[0]);
      const int rp = precedence_of(a.children[1]);
      render_operand(a.children[0], lp < p || (right && lp == p), out);
      out += symbol_of(a.op);
      render_operand(a.children[1], rp < p || (!right && rp == p), out);
      return;
    }
    case Ast::Kind::ListLit:
      out += '[';
      render_list(a.children, out);
      out += ']';
      return;
    case Ast::Kind::Call:
      out += a.text;
      out += '(';
      render_list(a.children, out);
      out += ')';
      return;
    case Ast::Kind::MethodCall:
      render_operand(a.children[0],
                     precedence_of(a.children[0]) < precedence::kPostfix, out);
      out += '.';
      out += a.text;
      out += '(';
      render_list(std::span<const Ast>(a.children).subspan(1), out);
      out += ')';
      return;
    case Ast::Kind::Index:
      render_operand(a.children[0],
                     precedence_of(a.children[0]) < precedence::kPostfix, out);
      out += '[';
      render(a.children[1], out);
      out += ']';
      return;
  }
}

}  // namespace

std::vector<Stmt> parse(std::span<const Token> tokens,
                        const ParseOptions& options) {
  return Parser(tokens, options).statements();
}

std::vector<Stmt> parse_with_implicit_mul(
    std::span<const Token> tokens,
    std::function<bool(std::string_view)> is_callable) {
  ParseOptions options;
  options.implicit_mul = true;
  options.is_callable = std::move(is_callable);
  return parse(tokens, options);
}

std::vector<Stmt> parse_source(std::string_view src,
                               const ParseOptions& options, int first_line) {
  const std::vector<Token> tokens = tokenize(src, first_line);
  return parse(tokens, options);
}

Ast parse_expression(std::string_view src, const ParseOptions& options) {
  const std::vector<Token> tokens = tokenize(src);
  return Parser(tokens, options).single_expression();
}

std::string ast_to_string(const Ast& ast) {
  std::string out;
  render(ast, out);
  return out;
}

}  // namespace casdsl
