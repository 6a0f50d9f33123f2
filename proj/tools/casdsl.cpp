#include <unistd.h>

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "casdsl/repl.hpp"

int main(int argc, char** argv) {
  CLI::App app{"casdsl - a small computer algebra scripting language"};

  casdsl::SessionConfig config;
  std::string script;
  bool no_auto_symbols = false;
  app.add_option("--script", script, "Run statements from FILE and exit")
      ->option_text("FILE");
  app.add_flag("--no-auto-symbols", no_auto_symbols,
               "Unbound names are errors instead of fresh symbols");
  app.add_flag("--implicit-mul", config.implicit_mul,
               "Juxtaposition multiplies: 2x, x(y+1)");
  app.add_flag("--debug-gb", config.debug_gb,
               "Print Buchberger pair counts to stderr");
  CLI11_PARSE(app, argc, argv);

  config.auto_symbols = !no_auto_symbols;
  if (!script.empty()) {
    config.script_path = script;
    return casdsl::run_script(config, script, std::cout, std::cerr);
  }
  config.show_prompt = isatty(STDIN_FILENO) != 0;
  return casdsl::run_repl(config, std::cin, std::cout, std::cerr);
}
