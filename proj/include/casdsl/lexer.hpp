#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "casdsl/error.hpp"

namespace casdsl {

enum class TokenKind {
  IntLit,
  Ident,
  String,
  Op,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Dot,
  Assign,
  Semi,
  Newline,
  Eof,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  // IntLit: the digits; String: the contents without quotes; Op: one of
  // + - * / ** ^.
  std::string text;
  SourcePos pos;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Longest-match lexer. Whitespace is skipped, `\` before a newline joins
/// lines, and `'...'` / `"..."` produce String tokens. `first_line` offsets
/// reported positions when a caller feeds one chunk of a larger input.
/// Throws LexError at the first unrecognized character.
std::vector<Token> tokenize(std::string_view src, int first_line = 1);

}  // namespace casdsl
