#include "wtl/wtl.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "wtl/amortize.hpp"
#include "wtl/jumpcx.hpp"
#include "wtl/regular.hpp"
#include "wtl/report.hpp"
#include "wtl/sim.hpp"
#include "wtl/text.hpp"

struct wtl_automaton {
  wtl::DfaWtl m;
};

struct wtl_report {
  wtl::Report report;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string last_error;

wtl_status fail(wtl_status status, const std::string& message) {
  last_error = message;
  return status;
}

wtl_status status_for(wtl::ErrorKind kind) {
  using wtl::ErrorKind;
  switch (kind) {
    case ErrorKind::Io:
      return WTL_ERR_IO;
    case ErrorKind::LetterOutsideAlphabet:
    case ErrorKind::BoundTooLarge:
    case ErrorKind::InvalidArgument:
      return WTL_ERR_ARGUMENT;
    case ErrorKind::AlphabetNotBinary:
    case ErrorKind::AlphabetMismatch:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::NotConstant:
      return WTL_ERR_PRECONDITION;
    default:
      return WTL_ERR_PARSE;
  }
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
wtl_status guard(Body body) {
  try {
    last_error.clear();
    return body();
  } catch (const wtl::Error& e) {
    return fail(status_for(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(WTL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WTL_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wtl::Options options_of(const wtl_options* opts) {
  wtl::Options o;
  if (opts) {
    o.max_len = opts->max_len;
    o.verify_depth = opts->verify_depth;
  }
  return o;
}

template <typename Make>
wtl_report* make_report(const char* command, Make make) {
  try {
    auto* r = new wtl_report;
    try {
      r->report = make();
    } catch (const std::exception& e) {
      r->report = wtl::error_report(command, wtl::kExitUsage, e.what());
    }
    r->text = r->report.to_text();
    r->json = r->report.to_json().dump();
    return r;
  } catch (...) {
    return nullptr;
  }
}

std::string str(const char* s) { return s ? std::string(s) : std::string(); }

}  // namespace

extern "C" {

const char* wtl_last_error(void) { return last_error.c_str(); }

const char* wtl_status_string(wtl_status status) {
  switch (status) {
    case WTL_OK:
      return "ok";
    case WTL_ERR_PARSE:
      return "parse error";
    case WTL_ERR_IO:
      return "i/o error";
    case WTL_ERR_ARGUMENT:
      return "invalid argument";
    case WTL_ERR_PRECONDITION:
      return "precondition violated";
    case WTL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void wtl_options_init(wtl_options* opts) {
  if (!opts) return;
  const wtl::Options defaults;
  opts->max_len = defaults.max_len;
  opts->verify_depth = defaults.verify_depth;
}

void wtl_string_free(char* s) { std::free(s); }

wtl_status wtl_automaton_from_text(const char* text, wtl_automaton** out) {
  if (!text || !out) return fail(WTL_ERR_ARGUMENT, "null argument");
  return guard([&] {
    *out = new wtl_automaton{wtl::dfa_from_text(text)};
    return WTL_OK;
  });
}

wtl_status wtl_automaton_from_file(const char* path, wtl_automaton** out) {
  if (!path || !out) return fail(WTL_ERR_ARGUMENT, "null argument");
  return guard([&] {
    *out = new wtl_automaton{wtl::load_dfa(path)};
    return WTL_OK;
  });
}

void wtl_automaton_free(wtl_automaton* m) { delete m; }

wtl_status wtl_automaton_to_text(const wtl_automaton* m, char** out) {
  if (!m || !out) return fail(WTL_ERR_ARGUMENT, "null argument");
  return guard([&] {
    *out = duplicate(wtl::serialize_automaton(wtl::to_doc(m->m)));
    return *out ? WTL_OK : fail(WTL_ERR_INTERNAL, "out of memory");
  });
}

size_t wtl_automaton_num_states(const wtl_automaton* m) { return m ? m->m.num_states() : 0; }

size_t wtl_automaton_num_letters(const wtl_automaton* m) { return m ? m->m.num_letters() : 0; }

wtl_status wtl_accepts(const wtl_automaton* m, const char* word, int* accepted, size_t* jumps) {
  if (!m || !word || !accepted) return fail(WTL_ERR_ARGUMENT, "null argument");
  return guard([&] {
    const auto jc = wtl::jc_word(m->m, wtl::parse_word(m->m.letter_names(), word));
    *accepted = jc.has_value();
    if (jc && jumps) *jumps = *jc;
    return WTL_OK;
  });
}

wtl_status wtl_classify(const wtl_automaton* m, wtl_jump_class* out) {
  if (!m || !out) return fail(WTL_ERR_ARGUMENT, "null argument");
  return guard([&] {
    *out = wtl::classify(m->m).cls == wtl::JumpClass::Constant ? WTL_CONSTANT : WTL_LINEAR;
    return WTL_OK;
  });
}

wtl_status wtl_is_regular(const wtl_automaton* m, int* regular) {
  if (!m || !regular) return fail(WTL_ERR_ARGUMENT, "null argument");
  return guard([&] {
    *regular = wtl::decide_regular(m->m).answer == wtl::Regularity::Regular;
    return WTL_OK;
  });
}

wtl_status wtl_equivalent(const wtl_automaton* a, const wtl_automaton* b, wtl_equivalence* out,
                          char** witness) {
  if (!a || !b || !out) return fail(WTL_ERR_ARGUMENT, "null argument");
  return guard([&] {
    const auto v = wtl::decide_equivalence(a->m, b->m);
    if (witness) *witness = nullptr;
    switch (v.answer) {
      case wtl::Equivalence::Equal:
        *out = WTL_EQUAL;
        break;
      case wtl::Equivalence::NotEqual:
        *out = WTL_NOT_EQUAL;
        if (witness) *witness = duplicate(wtl::render_word(a->m.letter_names(), *v.witness));
        break;
      case wtl::Equivalence::NotApplicable:
        *out = WTL_NOT_APPLICABLE;
        break;
    }
    return WTL_OK;
  });
}

wtl_report* wtl_cmd_validate(const char* path) {
  return make_report("validate", [&] { return wtl::cmd_validate(str(path)); });
}

wtl_report* wtl_cmd_run(const char* path, const char* word) {
  return make_report("run", [&] { return wtl::cmd_run(str(path), str(word)); });
}

wtl_report* wtl_cmd_jc(const char* path, const char* word) {
  return make_report("jc", [&] { return wtl::cmd_jc(str(path), str(word)); });
}

wtl_report* wtl_cmd_profile(const char* path, const wtl_options* opts) {
  return make_report("profile", [&] { return wtl::cmd_profile(str(path), options_of(opts)); });
}

wtl_report* wtl_cmd_classify(const char* path, const wtl_options* opts) {
  return make_report("classify", [&] { return wtl::cmd_classify(str(path), options_of(opts)); });
}

wtl_report* wtl_cmd_regular(const char* path, const wtl_options* opts) {
  return make_report("regular", [&] { return wtl::cmd_regular(str(path), options_of(opts)); });
}

wtl_report* wtl_cmd_equiv(const char* left, const char* right) {
  return make_report("equiv", [&] { return wtl::cmd_equiv(str(left), str(right)); });
}

wtl_report* wtl_cmd_to_nfa(const char* path) {
  return make_report("to-nfa", [&] { return wtl::cmd_to_nfa(str(path)); });
}

wtl_report* wtl_report_error(const char* command, int exit_code, const char* message) {
  return make_report(command ? command : "", [&] {
    return wtl::error_report(str(command), exit_code, str(message));
  });
}

const char* wtl_report_verdict(const wtl_report* r) { return r ? r->report.verdict.c_str() : ""; }

const char* wtl_report_text(const wtl_report* r) { return r ? r->text.c_str() : ""; }

const char* wtl_report_json(const wtl_report* r) { return r ? r->json.c_str() : ""; }

const char* wtl_report_artifact(const wtl_report* r) {
  return r && !r->report.artifact.empty() ? r->report.artifact.c_str() : nullptr;
}

int wtl_report_exit_code(const wtl_report* r) { return r ? r->report.exit_code : 2; }

void wtl_report_free(wtl_report* r) { delete r; }

}  // extern "C"
