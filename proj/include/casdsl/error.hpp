#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace casdsl {

/// 1-based line and column in the source text.
struct SourcePos {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class ErrorKind {
  DivisionByZero,
  UnsupportedExponent,
  DemotionError,
  BadSymbolName,
  LexError,
  ParseError,
  NameError,
  TypeError,
  ConversionError,
  EmptyInput,
  RingMismatch,
  ArityMismatch,
  ZeroOperand,
  FileNotFound,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The REPL renders it as
/// `line:col: kind: message` when a position is known.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message,
        std::optional<SourcePos> pos = std::nullopt);

  ErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }
  const std::optional<SourcePos>& pos() const { return pos_; }

  /// Attaches a position if none has been recorded yet.
  void locate(SourcePos pos) {
    if (!pos_) pos_ = pos;
  }

  std::string diagnostic() const;

 private:
  ErrorKind kind_;
  std::string message_;
  std::optional<SourcePos> pos_;
};

}  // namespace casdsl
