// Command-line front end. All analysis goes through the C API; this file only
// parses arguments, prints reports and writes emitted automata.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wtl/wtl.h"

namespace {

struct ReportHandle {
  wtl_report* r;
  ~ReportHandle() { wtl_report_free(r); }
};

bool write_text(const std::string& path, const char* text) {
  if (path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int emit(const char* command, wtl_report* raw, bool json, const std::string& artifact_path) {
  ReportHandle report{raw};
  if (!report.r) {
    std::cerr << "out of memory\n";
    return 2;
  }
  if (!artifact_path.empty()) {
    const char* artifact = wtl_report_artifact(report.r);
    if (artifact && !write_text(artifact_path, artifact)) {
      const std::string message = "cannot write '" + artifact_path + "'";
      return emit(command, wtl_report_error(command, 2, message.c_str()), json, "");
    }
  }
  if (json) {
    std::cout << wtl_report_json(report.r) << '\n';
  } else {
    std::cout << wtl_report_text(report.r);
  }
  return wtl_report_exit_code(report.r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyses for finite automata with translucent letters"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  wtl_options opts;
  wtl_options_init(&opts);
  app.add_flag("--json", json, "Print a JSON report instead of text");
  app.add_option("--max-len", opts.max_len, "Longest word length to enumerate")
      ->capture_default_str();
  app.add_option("--verify-depth", opts.verify_depth, "Pump iterations checked by simulation")
      ->capture_default_str();

  std::string file;
  std::string file2;
  std::string word;
  std::string out_path;

  auto* validate = app.add_subcommand("validate", "Check an automaton file");
  validate->add_option("FILE", file)->required();

  auto* run = app.add_subcommand("run", "Trace the computation on a word");
  run->add_option("FILE", file)->required();
  run->add_option("WORD", word, "Letters, e.g. 'ab' or 'a b'; '-' for the empty word")
      ->required();

  auto* jc = app.add_subcommand("jc", "Jump count of an accepted word");
  jc->add_option("FILE", file)->required();
  jc->add_option("WORD", word)->required();

  auto* profile = app.add_subcommand("profile", "JC(n) for n up to --max-len");
  profile->add_option("FILE", file)->required();

  auto* classify = app.add_subcommand("classify", "Constant or linear jump complexity");
  classify->add_option("FILE", file)->required();

  auto* regular = app.add_subcommand("regular", "Regularity of a binary-alphabet automaton");
  regular->add_option("FILE", file)->required();
  regular->add_option("--emit-nfa", out_path, "Write the counter NFA here ('-' for stdout)");

  auto* equiv = app.add_subcommand("equiv", "Language equivalence of constant automata");
  equiv->add_option("FILE1", file)->required();
  equiv->add_option("FILE2", file2)->required();

  auto* to_nfa = app.add_subcommand("to-nfa", "Classical NFA for a constant automaton");
  to_nfa->add_option("FILE", file)->required();
  to_nfa->add_option("--out", out_path, "Output path ('-' for stdout)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (json) return emit("usage", wtl_report_error("usage", 2, e.what()), true, "");
    app.exit(e);
    return 2;
  }

  if (*validate) return emit("validate", wtl_cmd_validate(file.c_str()), json, "");
  if (*run) return emit("run", wtl_cmd_run(file.c_str(), word.c_str()), json, "");
  if (*jc) return emit("jc", wtl_cmd_jc(file.c_str(), word.c_str()), json, "");
  if (*profile) return emit("profile", wtl_cmd_profile(file.c_str(), &opts), json, "");
  if (*classify) return emit("classify", wtl_cmd_classify(file.c_str(), &opts), json, "");
  if (*regular) return emit("regular", wtl_cmd_regular(file.c_str(), &opts), json, out_path);
  if (*equiv) return emit("equiv", wtl_cmd_equiv(file.c_str(), file2.c_str()), json, "");
  if (*to_nfa) return emit("to-nfa", wtl_cmd_to_nfa(file.c_str()), json, out_path);
  return 2;
}
