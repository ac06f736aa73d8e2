#include "wtl/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "wtl/amortize.hpp"
#include "wtl/jumpcx.hpp"
#include "wtl/regular.hpp"
#include "wtl/sim.hpp"
#include "wtl/text.hpp"

namespace wtl {

using nlohmann::json;

json Report::to_json() const {
  return json{{"command", command},
              {"verdict", verdict},
              {"witness", witness},
              {"evidence", evidence},
              {"elapsed_ms", elapsed_ms}};
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out + summary + "\n";
}

Report error_report(const std::string& command, int exit_code, const std::string& message) {
  Report r;
  r.command = command;
  r.verdict = "Error";
  r.exit_code = exit_code;
  r.evidence["message"] = message;
  r.summary = "Error: " + message;
  return r;
}

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AlphabetNotBinary:
    case ErrorKind::AlphabetMismatch:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::NotConstant:
      return kExitPrecondition;
    default:
      return kExitUsage;
  }
}

// Runs `body` with timing and turns library errors into reports.
template <typename Body>
Report guarded(const std::string& command, Body body) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    r = body();
  } catch (const Error& e) {
    r = error_report(command, exit_code_for(e.kind()), e.what());
    r.evidence["kind"] = std::string(to_string(e.kind()));
  }
  r.command = command;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string words_of(const DfaWtl& m, const Word& w) { return render_word(m.letter_names(), w); }

std::string state_list(const DfaWtl& m, const std::vector<StateId>& states) {
  std::string out;
  for (StateId q : states) {
    if (!out.empty()) out += ' ';
    out += m.state_name(q);
  }
  return out;
}

// A closed path lists its start state at both ends; drop the repeat.
std::vector<StateId> cycle_states(const Path& p) {
  std::vector<StateId> states = p.states;
  if (states.size() > 1 && states.front() == states.back()) states.pop_back();
  return states;
}

void check_budget(std::size_t letters, std::size_t max_len) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t n = 0; n <= max_len; ++n) {
    total += layer;
    if (total > kMaxEnumeratedWords) {
      throw Error(ErrorKind::BoundTooLarge,
                  "refusing to enumerate words up to length " + std::to_string(max_len) +
                      " over " + std::to_string(letters) + " letters");
    }
    if (letters > 1 && layer > kMaxEnumeratedWords / letters) layer = kMaxEnumeratedWords + 1;
    else layer *= letters;
  }
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Accepted:
      return "Accepted";
    case Outcome::RejectedStuck:
      return "RejectedStuck";
    case Outcome::RejectedNonFinal:
      return "RejectedNonFinal";
  }
  return "";
}

}  // namespace

Report cmd_validate(const std::string& path) {
  return guarded("validate", [&] {
    Report r;
    auto doc = parse_automaton(read_file(path));
    auto reject = [&](const std::vector<Issue>& issues) {
      r.verdict = "Invalid";
      r.exit_code = kExitUsage;
      json list = json::array();
      for (const auto& issue : issues) {
        r.lines.push_back(issue.describe());
        list.push_back({{"kind", std::string(to_string(issue.kind))},
                        {"message", issue.message},
                        {"line", issue.line},
                        {"column", issue.column}});
      }
      r.evidence["issues"] = list;
      r.summary = "Invalid, " + std::to_string(issues.size()) + " issue(s)";
      return r;
    };
    if (!doc.ok()) return reject(doc.issues);
    auto dfa = validate(*doc.value);
    r.verdict = "Valid";
    if (dfa.ok()) {
      r.evidence = {{"kind", "deterministic"},
                    {"states", dfa.value->num_states()},
                    {"letters", dfa.value->num_letters()}};
      r.summary = "Valid, deterministic, " + std::to_string(dfa.value->num_states()) +
                  " states";
      return r;
    }
    auto nfa = validate_nfa(*doc.value);
    if (!nfa.ok()) return reject(dfa.issues);
    r.evidence = {{"kind", "nondeterministic"},
                  {"states", nfa.value->num_states()},
                  {"letters", nfa.value->num_letters()}};
    for (const auto& issue : dfa.issues) r.lines.push_back("note: " + issue.describe());
    r.summary = "Valid, nondeterministic, " + std::to_string(nfa.value->num_states()) +
                " states";
    return r;
  });
}

Report cmd_run(const std::string& path, const std::string& word) {
  return guarded("run", [&] {
    const DfaWtl m = load_dfa(path);
    const Trace t = run(m, parse_word(m.letter_names(), word));
    Report r;
    json steps = json::array();
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      const TraceStep& s = t.steps[i];
      const bool jump = s.kind == StepKind::Jump;
      std::string line = std::to_string(i + 1) + "\t" + m.state_name(s.from) + " -" +
                         m.letter_name(s.letter) + "-> " + m.state_name(s.to) + "\t" +
                         (jump ? "[jump +" + std::to_string(s.consumed_index) + "]" : "[seq]");
      r.lines.push_back(std::move(line));
      steps.push_back({{"from", m.state_name(s.from)},
                       {"letter", m.letter_name(s.letter)},
                       {"to", m.state_name(s.to)},
                       {"kind", jump ? "jump" : "sequential"},
                       {"skipped", s.consumed_index}});
    }
    r.verdict = outcome_name(t.outcome);
    r.exit_code = t.accepted() ? kExitOk : kExitNegative;
    r.evidence = {{"input", words_of(m, t.input)},
                  {"steps", steps},
                  {"jump_count", t.jump_count},
                  {"last_state", m.state_name(t.last_state)}};
    r.summary = r.verdict + ", jumps: " + std::to_string(t.jump_count);
    return r;
  });
}

Report cmd_jc(const std::string& path, const std::string& word) {
  return guarded("jc", [&] {
    const DfaWtl m = load_dfa(path);
    const Word w = parse_word(m.letter_names(), word);
    Report r;
    r.evidence["input"] = words_of(m, w);
    if (auto jc = jc_word(m, w)) {
      r.verdict = std::to_string(*jc);
      r.evidence["jc"] = *jc;
      r.summary = "jc = " + r.verdict;
    } else {
      r.verdict = "Undefined";
      r.evidence["jc"] = nullptr;
      r.exit_code = kExitNegative;
      r.summary = "Undefined, word rejected";
    }
    return r;
  });
}

Report cmd_profile(const std::string& path, const Options& opts) {
  return guarded("profile", [&] {
    const DfaWtl m = load_dfa(path);
    check_budget(m.num_letters(), opts.max_len);
    const auto table = jc_profile(m, opts.max_len, opts.max_len);
    Report r;
    r.verdict = "Profile";
    r.lines.push_back("n\tJC");
    json rows = json::array();
    for (std::size_t n = 0; n < table.size(); ++n) {
      r.lines.push_back(std::to_string(n) + "\t" +
                        (table[n] ? std::to_string(*table[n]) : "Undefined"));
      rows.push_back(table[n] ? json(*table[n]) : json(nullptr));
    }
    r.evidence = {{"max_len", opts.max_len}, {"jc", rows}};
    r.summary = "Profile, lengths 0.." + std::to_string(opts.max_len);
    return r;
  });
}

Report cmd_classify(const std::string& path, const Options& opts) {
  return guarded("classify", [&] {
    if (opts.verify_depth > kMaxVerifyDepth) {
      throw Error(ErrorKind::BoundTooLarge, "verify depth exceeds " +
                                                std::to_string(kMaxVerifyDepth));
    }
    const DfaWtl m = load_dfa(path);
    const DfaWtl trimmed = prune(m);
    const std::size_t useful = trim(m).num_states();
    const ComplexityVerdict v = classify(m);
    Report r;
    r.evidence["trimmed_states"] = useful;
    if (v.cls == JumpClass::Constant) {
      r.verdict = "Constant";
      r.evidence["jump_bound"] = useful - 1;
      r.summary = "Constant";
      return r;
    }
    r.verdict = "Linear";
    const LinearWitness& w = *v.witness;
    r.witness = {{"prefix", words_of(m, w.prefix)},
                 {"pump", words_of(m, w.pump)},
                 {"suffix", words_of(m, w.suffix)},
                 {"jumps_per_iteration", w.jumps_per_iteration}};
    if (const auto* t1 = std::get_if<T1Trigger>(&*v.trigger)) {
      r.evidence["trigger"] = {{"type", "T1"},
                               {"state", trimmed.state_name(t1->t)},
                               {"jumped", trimmed.letter_name(t1->jumped)},
                               {"consumed", trimmed.letter_name(t1->consumed)}};
      r.lines.push_back("trigger T1 at " + trimmed.state_name(t1->t) + ": jumps over " +
                        trimmed.letter_name(t1->jumped) + " to read " +
                        trimmed.letter_name(t1->consumed));
    } else {
      const auto& t2 = std::get<T2Trigger>(*v.trigger);
      r.evidence["trigger"] = {{"type", "T2"},
                               {"state", trimmed.state_name(t2.base)},
                               {"jumped", trimmed.letter_name(t2.jumped)},
                               {"cycle", state_list(trimmed, cycle_states(t2.cycle))}};
      r.lines.push_back("trigger T2 at " + trimmed.state_name(t2.base) + ": cycle of " +
                        trimmed.letter_name(t2.jumped) + "-deficient states " +
                        state_list(trimmed, cycle_states(t2.cycle)));
    }
    const WitnessCheck check = verify_witness(m, w, opts.verify_depth);
    r.evidence["verified_depth"] = opts.verify_depth;
    r.evidence["verified"] = check.passed;
    r.lines.push_back("witness checked for i = 1.." + std::to_string(opts.verify_depth) + ": " +
                      (check.passed ? "ok" : "failed"));
    r.summary = "Linear, witness: (" + words_of(m, w.prefix) + ", " + words_of(m, w.pump) +
                ", " + words_of(m, w.suffix) + ")";
    return r;
  });
}

Report cmd_regular(const std::string& path, const Options& opts) {
  return guarded("regular", [&] {
    const DfaWtl m = load_dfa(path);
    const RegularityVerdict v = decide_regular(m);
    const DfaWtl trimmed = prune(m);
    Report r;
    if (v.answer == Regularity::Regular) {
      r.verdict = "Regular";
      r.evidence["counter_nfa_states"] = v.counter_nfa->num_states();
      r.artifact = serialize_automaton(to_doc(*v.counter_nfa));
      r.summary = "Regular, counter NFA with " + std::to_string(v.counter_nfa->num_states()) +
                  " states";
      return r;
    }
    r.verdict = "NonRegular";
    r.exit_code = kExitNegative;
    const NonRegularWitness& w = *v.witness;
    const JumpingCycle& c = *v.cycle;
    r.witness = {{"u", words_of(m, w.u)},
                 {"b_block", words_of(m, w.b_block)},
                 {"a_block", words_of(m, w.a_block)},
                 {"v", words_of(m, w.v)}};
    const bool ok = verify_nonregular_witness(m, w, opts.verify_depth);
    r.evidence = {{"x", m.letter_name(c.x)},
                  {"cycle", state_list(trimmed, c.states)},
                  {"cycle_word", words_of(m, c.letters)},
                  {"verified_depth", opts.verify_depth},
                  {"verified", ok}};
    r.lines.push_back(m.letter_name(c.x) + "-jumping cycle: " + state_list(trimmed, c.states) +
                      " reading " + words_of(m, c.letters));
    r.lines.push_back("family checked for i = 1.." + std::to_string(opts.verify_depth) + ": " +
                      (ok ? "ok" : "failed"));
    r.summary = "NonRegular, witness: (" + words_of(m, w.u) + ", (" + words_of(m, w.b_block) +
                ")^i, (" + words_of(m, w.a_block) + ")^i, " + words_of(m, w.v) + ")";
    return r;
  });
}

Report cmd_equiv(const std::string& left, const std::string& right) {
  return guarded("equiv", [&] {
    const DfaWtl a = load_dfa(left);
    const DfaWtl b = load_dfa(right);
    const EquivalenceVerdict v = decide_equivalence(a, b);
    Report r;
    switch (v.answer) {
      case Equivalence::Equal:
        r.verdict = "Equal";
        r.summary = "Equal";
        break;
      case Equivalence::NotEqual: {
        r.verdict = "NotEqual";
        r.exit_code = kExitNegative;
        const std::string w = words_of(a, *v.witness);
        r.witness = w;
        const bool left_accepts = v.accepted_by == Side::Left;
        r.evidence["accepted_by"] = left_accepts ? left : right;
        r.lines.push_back(w + " is accepted by " + (left_accepts ? left : right) +
                          " and rejected by " + (left_accepts ? right : left));
        r.summary = "NotEqual, witness: " + w;
        break;
      }
      case Equivalence::NotApplicable: {
        r.verdict = "NotApplicable";
        r.exit_code = kExitPrecondition;
        const std::string& which = v.side == Side::Left ? left : right;
        r.evidence["linear_input"] = which;
        r.summary = "NotApplicable, " + which + " has linear jump complexity";
        break;
      }
    }
    return r;
  });
}

Report cmd_to_nfa(const std::string& path) {
  return guarded("to-nfa", [&] {
    const DfaWtl m = load_dfa(path);
    const AmortizingNfa a = build_amortizing_nfa(m);
    Report r;
    r.verdict = "Constant";
    r.artifact = serialize_automaton(to_doc(a.nfa));
    r.evidence = {{"nfa_states", a.nfa.num_states()},
                  {"nfa_transitions", a.nfa.num_transitions()},
                  {"bound", a.bound}};
    r.summary = "Constant, amortizing NFA with " + std::to_string(a.nfa.num_states()) +
                " states";
    return r;
  });
}

}  // namespace wtl
