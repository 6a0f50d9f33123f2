#include "casdsl/repl.hpp"

#include <fstream>

#include "casdsl/error.hpp"

namespace casdsl {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

class Session {
 public:
  Session(const SessionConfig& config, std::ostream& out, std::ostream& err)
      : config_(config),
        interp_(SessionFlags{config.auto_symbols, config.implicit_mul}),
        out_(out),
        err_(err) {
    if (config.debug_gb) {
      interp_.set_gb_observer([&err](const GbStats& s) {
        err << "gb: pairs=" << s.pairs_considered
            << " coprime=" << s.pairs_skipped_coprime
            << " zero=" << s.pairs_reduced_to_zero
            << " added=" << s.basis_additions << " basis=" << s.basis_size
            << '\n';
      });
    }
  }

  // Runs the lines read from `in`; `stop_on_error` selects batch mode.
  int run(std::istream& in, bool stop_on_error) {
    std::string chunk;
    int chunk_line = 1;
    int line_no = 0;
    std::string line;
    for (;;) {
      if (config_.show_prompt) {
        out_ << (chunk.empty() ? config_.prompt : std::string("...> "))
             << std::flush;
      }
      if (!std::getline(in, line)) break;
      ++line_no;
      if (chunk.empty()) {
        chunk_line = line_no;
        if (trim(line) == "quit") return 0;
      }
      chunk += line;
      chunk += '\n';
      const std::string_view body = trim(line);
      if (!body.empty() && body.back() == '\\') continue;
      const bool ok = execute(chunk, chunk_line);
      chunk.clear();
      if (!ok && stop_on_error) return 1;
    }
    if (in.bad()) {
      err_ << "error: failed reading input\n";
      return 2;
    }
    if (!chunk.empty() && !execute(chunk, chunk_line) && stop_on_error) {
      return 1;
    }
    return 0;
  }

 private:
  bool execute(const std::string& src, int first_line) {
    try {
      for (const Stmt& s : interp_.parse(src, first_line)) {
        Value v = interp_.eval_stmt(s);
        if (s.echo) out_ << v.to_string() << '\n';
      }
      return true;
    } catch (const Error& e) {
      out_ << std::flush;
      err_ << e.diagnostic() << '\n';
      return false;
    }
  }

  const SessionConfig& config_;
  Interpreter interp_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_repl(const SessionConfig& config, std::istream& in, std::ostream& out,
             std::ostream& err) {
  return Session(config, out, err).run(in, false);
}

int run_script(const SessionConfig& config, const std::string& path,
               std::ostream& out, std::ostream& err) {
  std::ifstream file(path);
  if (!file) {
    err << Error(ErrorKind::FileNotFound, "cannot open '" + path + "'")
               .diagnostic()
        << '\n';
    return 1;
  }
  SessionConfig batch = config;
  batch.show_prompt = false;
  return Session(batch, out, err).run(file, true);
}

}  // namespace casdsl
