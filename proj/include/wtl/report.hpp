#ifndef WTL_REPORT_HPP
#define WTL_REPORT_HPP

// Command results in both renderings. Every command produces a Report, even
// on failure; the exit code is part of the result.

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace wtl {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitUsage = 2,
  kExitPrecondition = 3,
};

struct Options {
  std::size_t max_len = 12;
  std::size_t verify_depth = 8;
};

struct Report {
  std::string command;
  std::string verdict;
  nlohmann::json witness;  // null when the verdict has none
  nlohmann::json evidence = nlohmann::json::object();
  double elapsed_ms = 0.0;
  std::vector<std::string> lines;  // human-readable body, without the summary
  std::string summary;
  int exit_code = kExitOk;
  std::string artifact;  // automaton text produced by the command, if any

  /// Keys: command, verdict, witness, evidence, elapsed_ms.
  nlohmann::json to_json() const;
  /// Body lines followed by the summary line, newline terminated.
  std::string to_text() const;
};

/// Words are read from the command line with parse_word; files with
/// load_dfa. Errors become reports with exit codes 2 or 3.
Report cmd_validate(const std::string& path);
Report cmd_run(const std::string& path, const std::string& word);
Report cmd_jc(const std::string& path, const std::string& word);
Report cmd_profile(const std::string& path, const Options& opts);
Report cmd_classify(const std::string& path, const Options& opts);
Report cmd_regular(const std::string& path, const Options& opts);
Report cmd_equiv(const std::string& left, const std::string& right);
Report cmd_to_nfa(const std::string& path);

/// Report for a failure that happened before any command ran.
Report error_report(const std::string& command, int exit_code, const std::string& message);

/// Largest number of words the enumerating commands will visit.
inline constexpr std::size_t kMaxEnumeratedWords = std::size_t{1} << 24;

}  // namespace wtl

#endif  // WTL_REPORT_HPP
