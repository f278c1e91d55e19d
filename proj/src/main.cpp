#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tt/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "ttcheck: type checker and normalizer for a small dependent type "
      "theory with singleton types and proof irrelevance"};
  std::string first;
  std::string second;
  tt::RunConfig cfg;
  app.add_option("first", first,
                 "command (check | normalize | infer) or input file")
      ->required();
  app.add_option("second", second, "input file when a command is given");
  app.add_flag("--allow-star", cfg.allow_star,
               "accept * as a proof and as the Enum 0 element");
  app.add_flag("--proof-relevant", cfg.proof_relevant,
               "evaluate proofs instead of collapsing them (experimental)");
  app.add_option("--depth-limit", cfg.depth_limit,
                 "evaluation recursion budget");
  app.add_flag("--machine", cfg.machine,
               "one tab-separated record per declaration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (second.empty()) {
    cfg.input_path = first;
  } else {
    if (first == "check") {
      cfg.command = tt::Command::Check;
    } else if (first == "normalize") {
      cfg.command = tt::Command::Normalize;
    } else if (first == "infer") {
      cfg.command = tt::Command::Infer;
    } else {
      std::cerr << "unknown command '" << first
                << "' (expected check, normalize, or infer)\n";
      return 2;
    }
    cfg.input_path = second;
  }

  tt::RunResult res = tt::run(cfg);
  if (res.exit_code == 2) {
    std::cerr << res.output;
  } else {
    std::cout << res.output;
  }
  return res.exit_code;
}
