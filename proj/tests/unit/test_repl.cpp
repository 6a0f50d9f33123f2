#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "casdsl/repl.hpp"
#include "generators.hpp"

using namespace casdsl;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome repl(const std::string& input, SessionConfig config = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_repl(config, in, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_script(const std::string& name,
                                  const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("casdsl_test_" + name + ".cas");
  std::ofstream(path) << body;
  return path;
}

Outcome script(const std::string& name, const std::string& body,
               SessionConfig config = {}) {
  const auto path = temp_script(name, body);
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_script(config, path.string(), out, err);
  std::filesystem::remove(path);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("run_repl examples") {
  CHECK(repl("1+2\n").out == "3\n");
  const Outcome s = repl("f = x**3 * y + x**2 * z - 5/9\nf\n");
  CHECK(s.out == "x^3*y+x^2*z-5/9\nx^3*y+x^2*z-5/9\n");
  CHECK(repl("quit\n1+2\n").out.empty());
  CHECK(repl("quit\n").status == 0);
  CHECK(repl("").status == 0);
  CHECK(repl("1+2").out == "3\n");
}

TEST_CASE("echo suppression and continuation") {
  CHECK(repl("a = 1;\na + 1\n").out == "2\n");
  CHECK(repl("a = 1; b = 2\n").out == "2\n");
  CHECK(repl("1 + \\\n 2\n").out == "3\n");
  CHECK(repl("[1, \\\n 2, \\\n 3]\n").out == "[1, 2, 3]\n");
}

TEST_CASE("errors are reported and the loop continues") {
  const Outcome o = repl("1+2\nx $ y\n1/0\n(1 +\n4\n");
  CHECK(o.status == 0);
  CHECK(o.out == "3\n4\n");
  CHECK(o.err ==
        "2:3: LexError: unexpected character '$'\n"
        "3:2: DivisionByZero: division of 1 by zero\n"
        "4:5: ParseError: expected expression, found newline\n");
}

TEST_CASE("prompts are written only when requested") {
  SessionConfig config;
  config.show_prompt = true;
  const Outcome o = repl("1 + \\\n2\n", config);
  CHECK(o.out == "cas> ...> 3\ncas> ");
}

TEST_CASE("debug telemetry goes to the error stream") {
  SessionConfig config;
  config.debug_gb = true;
  const Outcome o = repl("groebner([x^2 - y, x*y - 1], lex)\n", config);
  CHECK(o.out == "[x-y^2, y^3-1]\n");
  CHECK(o.err.rfind("gb: pairs=", 0) == 0);
}

TEST_CASE("run_script examples") {
  const Outcome empty = script("empty", "");
  CHECK(empty.status == 0);
  CHECK(empty.out.empty());
  CHECK(empty.err.empty());

  const Outcome lex = script("lex", "x $ y\n1+2\n");
  CHECK(lex.status != 0);
  CHECK(lex.out.empty());
  CHECK(lex.err.rfind("1:3: LexError", 0) == 0);

  const Outcome stop = script("stop", "1\n2/0\n3\n");
  CHECK(stop.status == 1);
  CHECK(stop.out == "1\n");
  CHECK(stop.err.rfind("2:2: DivisionByZero", 0) == 0);

  std::ostringstream out;
  std::ostringstream err;
  CHECK(run_script({}, "/nonexistent/casdsl/none.cas", out, err) != 0);
  CHECK(err.str().find("FileNotFound") != std::string::npos);
}

TEST_CASE("the session script matches its golden transcript") {
  const std::filesystem::path dir = CASDSL_TEST_DATA_DIR;
  std::ostringstream out;
  std::ostringstream err;
  CHECK(run_script({}, (dir / "session.cas").string(), out, err) == 0);
  CHECK(err.str().empty());
  CHECK(out.str() == slurp(dir / "session.golden"));
}

TEST_CASE("property: REPL and script modes are equivalent") {
  std::mt19937 rng(71);
  gen::SourceGen sources(rng);
  for (int i = 0; i < 40; ++i) {
    std::string body;
    const int n = gen::uniform(rng, 1, 6);
    for (int k = 0; k < n; ++k) {
      if (gen::coin(rng, 0.3)) body += "v" + std::to_string(k) + " = ";
      body += sources.both(3).first;
      body += gen::coin(rng, 0.2) ? ";\n" : "\n";
    }
    const Outcome s = script("equiv", body);
    const Outcome r = repl(body);
    if (s.status == 0) {
      CHECK(s.out == r.out);
      CHECK(s.err == r.err);
    } else {
      // The script stops at the first error; the REPL reports it the same way.
      CHECK(r.out.starts_with(s.out));
      CHECK(r.err.starts_with(s.err));
    }
  }
}

TEST_CASE("property: the REPL survives arbitrary input") {
  std::mt19937 rng(72);
  const std::string alphabet = "xyz0129+-*/^()[],.=;'\"$ \n\\#";
  for (int i = 0; i < 500; ++i) {
    std::string input;
    const int n = gen::uniform(rng, 0, 30);
    for (int k = 0; k < n; ++k) {
      input += alphabet[gen::uniform(rng, 0, static_cast<int>(alphabet.size()) - 1)];
    }
    const Outcome o = repl(input);
    CHECK(o.status == 0);
  }
}
