// Declaration-file processing shared by the command-line tool and the tests:
// one growing context, per-declaration verdicts, machine-readable output.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tt/check.hpp"
#include "tt/surface.hpp"
#include "tt/syntax.hpp"

namespace tt {

enum class Command { Check, Normalize, Infer };

struct RunConfig {
  Command command = Command::Check;
  std::string input_path;
  bool allow_star = false;
  bool proof_relevant = false;
  unsigned depth_limit = 100000;
  bool machine = false;
};

// Verdict for one declaration. For accepted judgement verbs the elaborated
// pieces are kept so tests can re-examine the judgement.
struct DeclResult {
  std::size_t index = 0;
  DeclKind verb = DeclKind::Check;
  bool accepted = false;
  std::string payload;  // machine column: normal form, type, or failure kind
  std::string detail;   // human-format extra text (diagnostic rendering)
  Ctx ctx;              // context the judgement ran in, innermost first
  TermPtr type;         // elaborated type (assume/define/check/normalize)
  TermPtr type_normal;  // its normal form
  TermPtr term;         // elaborated subject (define/check/normalize/infer)
  TermPtr normal;       // normal form of the subject when one was computed
};

struct RunResult {
  std::vector<DeclResult> decls;
  int exit_code = 0;     // 0 all accepted, 1 some judgement rejected, 2 bad input
  std::string output;    // complete report text
  bool parse_ok = true;
};

// Processes declarations against one growing context. A rejected assume or
// define stops the file (the context would be unusable); rejected judgement
// verbs are recorded and processing continues.
class Session {
 public:
  explicit Session(const RunConfig& cfg);

  DeclResult process(const Decl& d, std::size_t index);
  bool stopped() const { return stopped_; }

  const Ctx& ctx() const { return ctx_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  RunConfig cfg_;
  Mode mode_;
  Ctx ctx_;                         // innermost first
  std::vector<std::string> names_;  // outermost first
  DefMap defs_;
  bool stopped_ = false;

  std::vector<std::string> scope_names() const;  // innermost first
};

RunResult run_text(const std::string& text, const RunConfig& cfg);
RunResult run(const RunConfig& cfg);

}  // namespace tt
