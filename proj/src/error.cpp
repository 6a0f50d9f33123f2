#include "casdsl/error.hpp"

namespace casdsl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnsupportedExponent: return "UnsupportedExponent";
    case ErrorKind::DemotionError: return "DemotionError";
    case ErrorKind::BadSymbolName: return "BadSymbolName";
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NameError: return "NameError";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::ConversionError: return "ConversionError";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ZeroOperand: return "ZeroOperand";
    case ErrorKind::FileNotFound: return "FileNotFound";
  }
  return "Error";
}

Error::Error(ErrorKind kind, std::string message, std::optional<SourcePos> pos)
    : std::runtime_error(message),
      kind_(kind),
      message_(std::move(message)),
      pos_(pos) {}

std::string Error::diagnostic() const {
  std::string out;
  if (pos_) {
    out += std::to_string(pos_->line) + ":" + std::to_string(pos_->column) +
           ": ";
  }
  out += to_string(kind_);
  out += ": ";
  out += message_;
  return out;
}

}  // namespace casdsl
