#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "casdsl/error.hpp"
#include "casdsl/lexer.hpp"
#include "casdsl/number.hpp"

namespace casdsl {

/// Surface syntax tree for one expression.
///
/// `text` holds the digits of an IntLit, the name of an Ident, Call or
/// MethodCall, and the contents of a StrLit. `children` holds, by kind:
///   UnaryNeg    [operand]
///   BinOp       [lhs, rhs]
///   ListLit     elements
///   Call        arguments
///   MethodCall  [receiver, arguments...]
///   Index       [target, index]
struct Ast {
  enum class Kind {
    IntLit,
    Ident,
    StrLit,
    UnaryNeg,
    BinOp,
    ListLit,
    Call,
    MethodCall,
    Index,
  };

  Kind kind = Kind::IntLit;
  std::string text;
  ArithOp op = ArithOp::Add;
  std::vector<Ast> children;
  SourcePos pos;

  /// Structural equality; positions are ignored.
  friend bool operator==(const Ast& a, const Ast& b);
};

struct Stmt {
  enum class Kind { Expr, Assign, Destructure };

  Kind kind = Kind::Expr;
  // One name for Assign, two or more for `x, y = ...`.
  std::vector<std::string> targets;
  Ast value;
  // False when the statement is terminated by `;`.
  bool echo = true;
  SourcePos pos;
};

struct ParseOptions {
  bool implicit_mul = false;
  // With implicit multiplication on, `name(...)` is a call only when this
  // returns true for `name`; otherwise it is `name*(...)`.
  std::function<bool(std::string_view)> is_callable;
};

/// Statements separated by `;` or newlines; blank statements are skipped.
/// Throws ParseError with the position of the offending token.
std::vector<Stmt> parse(std::span<const Token> tokens,
                        const ParseOptions& options = {});

std::vector<Stmt> parse_with_implicit_mul(
    std::span<const Token> tokens,
    std::function<bool(std::string_view)> is_callable = {});

/// Convenience: tokenize then parse.
std::vector<Stmt> parse_source(std::string_view src,
                               const ParseOptions& options = {},
                               int first_line = 1);

/// Parses text holding exactly one expression.
Ast parse_expression(std::string_view src, const ParseOptions& options = {});

/// Renders an Ast with minimal parentheses, using `^` for power.
std::string ast_to_string(const Ast& ast);

}  // namespace casdsl
