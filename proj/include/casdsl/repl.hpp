#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "casdsl/interpreter.hpp"

namespace casdsl {

struct SessionConfig {
  bool auto_symbols = true;
  bool implicit_mul = false;
  // Print Buchberger pair counts to the error stream.
  bool debug_gb = false;
  std::string prompt = "cas> ";
  // Prompts are written only for interactive input.
  bool show_prompt = false;
  std::optional<std::string> script_path;
};

/// Read-eval-print loop over `in`. Echoes each statement's value unless it
/// ends in `;`, reports errors as `line:col: kind: message` on `err` and
/// keeps going. A trailing `\` continues a statement on the next line.
/// Returns 0 at end of input or `quit`, nonzero on an input stream failure.
int run_repl(const SessionConfig& config, std::istream& in, std::ostream& out,
             std::ostream& err);

/// Batch mode: same output as the REPL fed the file's lines, but the first
/// error stops execution with status 1. A missing file reports FileNotFound.
int run_script(const SessionConfig& config, const std::string& path,
               std::ostream& out, std::ostream& err);

}  // namespace casdsl
