#include "casdsl/lexer.hpp"

#include <cctype>
#include <optional>

namespace casdsl {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::IntLit: return "integer literal";
    case TokenKind::Ident: return "identifier";
    case TokenKind::String: return "string literal";
    case TokenKind::Op: return "operator";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Assign: return "'='";
    case TokenKind::Semi: return "';'";
    case TokenKind::Newline: return "newline";
    case TokenKind::Eof: return "end of input";
  }
  return "token";
}

namespace {

class Lexer {
 public:
  Lexer(std::string_view src, int first_line)
      : src_(src), pos_{first_line, 1} {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (i_ < src_.size()) {
      const char c = src_[i_];
      const SourcePos start = pos_;
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '\n') {
        advance();
        out.push_back({TokenKind::Newline, "\n", start});
      } else if (c == '\\') {
        continuation(start);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back({TokenKind::IntLit, take_while(is_digit), start});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        out.push_back({TokenKind::Ident, take_while(is_word), start});
      } else if (c == '\'' || c == '"') {
        out.push_back({TokenKind::String, string_literal(start), start});
      } else if (c == '*' && peek(1) == '*') {
        advance();
        advance();
        out.push_back({TokenKind::Op, "**", start});
      } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
        advance();
        out.push_back({TokenKind::Op, std::string(1, c), start});
      } else if (auto kind = punctuation(c)) {
        advance();
        out.push_back({*kind, std::string(1, c), start});
      } else {
        throw Error(ErrorKind::LexError,
                    "unexpected character '" + offending_character() + "'",
                    start);
      }
    }
    out.push_back({TokenKind::Eof, "", pos_});
    return out;
  }

 private:
  static bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }
  static bool is_word(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  }

  static std::optional<TokenKind> punctuation(char c) {
    switch (c) {
      case '(': return TokenKind::LParen;
      case ')': return TokenKind::RParen;
      case '[': return TokenKind::LBracket;
      case ']': return TokenKind::RBracket;
      case ',': return TokenKind::Comma;
      case '.': return TokenKind::Dot;
      case '=': return TokenKind::Assign;
      case ';': return TokenKind::Semi;
      default: return std::nullopt;
    }
  }

  char peek(std::size_t ahead) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }

  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(src_[i_]) & 0xC0) != 0x80) {
      ++pos_.column;
    }
    ++i_;
  }

  template <typename Pred>
  std::string take_while(Pred pred) {
    const std::size_t begin = i_;
    while (i_ < src_.size() && pred(src_[i_])) advance();
    return std::string(src_.substr(begin, i_ - begin));
  }

  // `\` may be followed by spaces before the newline it escapes.
  void continuation(SourcePos start) {
    std::size_t j = i_ + 1;
    while (j < src_.size() && (src_[j] == ' ' || src_[j] == '\t' ||
                               src_[j] == '\r')) {
      ++j;
    }
    if (j < src_.size() && src_[j] != '\n') {
      throw Error(ErrorKind::LexError, "unexpected character '\\'", start);
    }
    while (i_ < src_.size() && i_ <= j) advance();
  }

  std::string string_literal(SourcePos start) {
    const char quote = src_[i_];
    advance();
    const std::size_t begin = i_;
    while (i_ < src_.size() && src_[i_] != quote && src_[i_] != '\n') {
      advance();
    }
    if (i_ >= src_.size() || src_[i_] != quote) {
      throw Error(ErrorKind::LexError, "unterminated string literal", start);
    }
    std::string body(src_.substr(begin, i_ - begin));
    advance();
    return body;
  }

  // The whole UTF-8 sequence starting at the current byte.
  std::string offending_character() const {
    std::size_t len = 1;
    while (i_ + len < src_.size() &&
           (static_cast<unsigned char>(src_[i_ + len]) & 0xC0) == 0x80) {
      ++len;
    }
    return std::string(src_.substr(i_, len));
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view src, int first_line) {
  return Lexer(src, first_line).run();
}

}  // namespace casdsl
