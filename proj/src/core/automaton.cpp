#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "wtl/core.hpp"

namespace wtl {

std::vector<LetterId> LetterSet::members() const {
  std::vector<LetterId> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<LetterId>(std::countr_zero(rest)));
  }
  return out;
}

DfaWtl::DfaWtl(std::vector<std::string> letters, std::vector<std::string> states,
               StateId initial)
    : letter_names_(std::move(letters)),
      state_names_(std::move(states)),
      initial_(initial),
      finals_(state_names_.size(), false),
      table_(state_names_.size() * letter_names_.size(), kNoState) {}

std::optional<LetterId> DfaWtl::find_letter(const std::string& name) const {
  auto it = std::find(letter_names_.begin(), letter_names_.end(), name);
  if (it == letter_names_.end()) return std::nullopt;
  return static_cast<LetterId>(it - letter_names_.begin());
}

std::optional<StateId> DfaWtl::find_state(const std::string& name) const {
  auto it = std::find(state_names_.begin(), state_names_.end(), name);
  if (it == state_names_.end()) return std::nullopt;
  return static_cast<StateId>(it - state_names_.begin());
}

Nfa::Nfa(std::vector<std::string> letter_names, std::vector<std::string> state_names,
         StateId initial_state)
    : letters(std::move(letter_names)),
      states(std::move(state_names)),
      initial(initial_state),
      finals(states.size(), false),
      delta(states.size() * letters.size()),
      epsilon(states.size()) {}

namespace {

void insert_sorted(std::vector<StateId>& v, StateId x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

}  // namespace

void Nfa::add_transition(StateId q, LetterId a, StateId target) {
  insert_sorted(delta[static_cast<std::size_t>(q) * num_letters() + a], target);
}

void Nfa::add_epsilon(StateId q, StateId target) { insert_sorted(epsilon[q], target); }

bool Nfa::has_epsilon() const {
  return std::any_of(epsilon.begin(), epsilon.end(),
                     [](const auto& v) { return !v.empty(); });
}

std::size_t Nfa::num_transitions() const {
  std::size_t count = 0;
  for (const auto& v : delta) count += v.size();
  for (const auto& v : epsilon) count += v.size();
  return count;
}

Nfa Nfa::from_dfa(const DfaWtl& m) {
  Nfa n(m.letter_names(), m.state_names(), m.initial());
  for (StateId q = 0; q < m.num_states(); ++q) {
    n.finals[q] = m.is_final(q);
    for (LetterId a = 0; a < m.num_letters(); ++a) {
      if (m.defined(q, a)) n.add_transition(q, a, m.next(q, a));
    }
  }
  return n;
}

LetterSet deficiency(const DfaWtl& m, StateId q) {
  if (q >= m.num_states()) {
    throw Error(ErrorKind::UnknownState, "state index " + std::to_string(q));
  }
  LetterSet out;
  for (LetterId a = 0; a < m.num_letters(); ++a) {
    if (!m.defined(q, a)) out.insert(a);
  }
  return out;
}

namespace {

// Name tables shared by both validators.
struct Symbols {
  std::unordered_map<std::string, LetterId> letters;
  std::unordered_map<std::string, StateId> states;
  std::optional<StateId> initial;
  std::vector<StateId> finals;
};

Symbols collect_symbols(const AutomatonDoc& doc, std::vector<Issue>& issues) {
  Symbols sym;
  if (doc.alphabet.size() > kMaxLetters) {
    issues.push_back({ErrorKind::TooManyLetters,
                      std::to_string(doc.alphabet.size()) + " letters (at most " +
                          std::to_string(kMaxLetters) + ")"});
  }
  for (std::size_t i = 0; i < doc.alphabet.size(); ++i) {
    const auto& name = doc.alphabet[i];
    if (name == kEpsilonToken) {
      issues.push_back({ErrorKind::Syntax, "'epsilon' is reserved and cannot be a letter"});
      continue;
    }
    if (!sym.letters.emplace(name, static_cast<LetterId>(i)).second) {
      issues.push_back({ErrorKind::DuplicateName, "letter '" + name + "' declared twice"});
    }
  }
  for (std::size_t i = 0; i < doc.states.size(); ++i) {
    if (!sym.states.emplace(doc.states[i], static_cast<StateId>(i)).second) {
      issues.push_back(
          {ErrorKind::DuplicateName, "state '" + doc.states[i] + "' declared twice"});
    }
  }
  if (!doc.initial) {
    issues.push_back({ErrorKind::MissingInitial, "no initial state given"});
  } else if (auto it = sym.states.find(*doc.initial); it == sym.states.end()) {
    issues.push_back({ErrorKind::UnknownState, "initial state '" + *doc.initial + "'"});
  } else {
    sym.initial = it->second;
  }
  for (const auto& f : doc.finals) {
    auto it = sym.states.find(f);
    if (it == sym.states.end()) {
      issues.push_back({ErrorKind::UnknownState, "final state '" + f + "'"});
    } else {
      sym.finals.push_back(it->second);
    }
  }
  return sym;
}

struct ResolvedArc {
  StateId source = kNoState;
  LetterId letter = kNoLetter;  // kNoLetter marks an epsilon arc
  StateId target = kNoState;
};

std::optional<ResolvedArc> resolve(const Symbols& sym, const TransitionLine& t,
                                   std::vector<Issue>& issues) {
  ResolvedArc arc;
  bool ok = true;
  if (auto it = sym.states.find(t.source); it != sym.states.end()) {
    arc.source = it->second;
  } else {
    issues.push_back({ErrorKind::UnknownState, "'" + t.source + "'", t.line, t.columns[0]});
    ok = false;
  }
  if (t.letter != kEpsilonToken) {
    if (auto it = sym.letters.find(t.letter); it != sym.letters.end()) {
      arc.letter = it->second;
    } else {
      issues.push_back({ErrorKind::UnknownLetter, "'" + t.letter + "'", t.line, t.columns[1]});
      ok = false;
    }
  }
  if (auto it = sym.states.find(t.target); it != sym.states.end()) {
    arc.target = it->second;
  } else {
    issues.push_back({ErrorKind::UnknownState, "'" + t.target + "'", t.line, t.columns[2]});
    ok = false;
  }
  if (!ok) return std::nullopt;
  return arc;
}

}  // namespace

Checked<DfaWtl> validate(const AutomatonDoc& doc) {
  Checked<DfaWtl> result;
  Symbols sym = collect_symbols(doc, result.issues);

  std::map<std::pair<StateId, LetterId>, StateId> table;
  std::set<std::pair<StateId, LetterId>> reported;
  for (const auto& t : doc.transitions) {
    auto arc = resolve(sym, t, result.issues);
    if (!arc) continue;
    if (arc->letter == kNoLetter) {
      result.issues.push_back({ErrorKind::EpsilonArc,
                               "epsilon arc in a deterministic automaton", t.line,
                               t.columns[1]});
      continue;
    }
    auto key = std::make_pair(arc->source, arc->letter);
    auto [it, inserted] = table.emplace(key, arc->target);
    if (!inserted && it->second != arc->target && reported.insert(key).second) {
      result.issues.push_back({ErrorKind::Nondeterministic,
                               "(" + t.source + "," + t.letter + ")", t.line,
                               t.columns[0]});
    }
  }
  if (!result.issues.empty()) return result;

  DfaWtl m(doc.alphabet, doc.states, *sym.initial);
  for (StateId f : sym.finals) m.set_final(f);
  for (const auto& [key, target] : table) m.set_transition(key.first, key.second, target);
  result.value = std::move(m);
  return result;
}

Checked<Nfa> validate_nfa(const AutomatonDoc& doc) {
  Checked<Nfa> result;
  Symbols sym = collect_symbols(doc, result.issues);
  std::vector<ResolvedArc> arcs;
  for (const auto& t : doc.transitions) {
    if (auto arc = resolve(sym, t, result.issues)) arcs.push_back(*arc);
  }
  if (!result.issues.empty()) return result;

  Nfa n(doc.alphabet, doc.states, *sym.initial);
  for (StateId f : sym.finals) n.finals[f] = true;
  for (const auto& arc : arcs) {
    if (arc.letter == kNoLetter) {
      n.add_epsilon(arc.source, arc.target);
    } else {
      n.add_transition(arc.source, arc.letter, arc.target);
    }
  }
  result.value = std::move(n);
  return result;
}

AutomatonDoc to_doc(const DfaWtl& m) {
  AutomatonDoc doc;
  doc.alphabet = m.letter_names();
  doc.states = m.state_names();
  doc.initial = m.state_name(m.initial());
  for (StateId q = 0; q < m.num_states(); ++q) {
    if (m.is_final(q)) doc.finals.push_back(m.state_name(q));
  }
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (LetterId a = 0; a < m.num_letters(); ++a) {
      if (m.defined(q, a)) {
        doc.transitions.push_back(
            {m.state_name(q), m.letter_name(a), m.state_name(m.next(q, a))});
      }
    }
  }
  return doc;
}

AutomatonDoc to_doc(const Nfa& n) {
  AutomatonDoc doc;
  doc.alphabet = n.letters;
  doc.states = n.states;
  doc.initial = n.states[n.initial];
  for (StateId q = 0; q < n.num_states(); ++q) {
    if (n.finals[q]) doc.finals.push_back(n.states[q]);
  }
  for (StateId q = 0; q < n.num_states(); ++q) {
    for (LetterId a = 0; a < n.num_letters(); ++a) {
      for (StateId p : n.targets(q, a)) {
        doc.transitions.push_back({n.states[q], n.letters[a], n.states[p]});
      }
    }
    for (StateId p : n.epsilon[q]) {
      doc.transitions.push_back({n.states[q], kEpsilonToken, n.states[p]});
    }
  }
  return doc;
}

namespace {

void close_under_epsilon(const Nfa& n, std::vector<bool>& in, std::vector<StateId>& set) {
  std::vector<StateId> stack(set.begin(), set.end());
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId p : n.epsilon[q]) {
      if (!in[p]) {
        in[p] = true;
        set.push_back(p);
        stack.push_back(p);
      }
    }
  }
}

}  // namespace

bool accepts_classically(const Nfa& n, const Word& w) {
  std::vector<bool> in(n.num_states(), false);
  std::vector<StateId> current{n.initial};
  in[n.initial] = true;
  close_under_epsilon(n, in, current);
  for (LetterId a : w) {
    if (a >= n.num_letters()) {
      throw Error(ErrorKind::LetterOutsideAlphabet, "letter index " + std::to_string(a));
    }
    std::vector<bool> next_in(n.num_states(), false);
    std::vector<StateId> next;
    for (StateId q : current) {
      for (StateId p : n.targets(q, a)) {
        if (!next_in[p]) {
          next_in[p] = true;
          next.push_back(p);
        }
      }
    }
    close_under_epsilon(n, next_in, next);
    if (next.empty()) return false;
    current = std::move(next);
    in = std::move(next_in);
  }
  return std::any_of(current.begin(), current.end(),
                     [&](StateId q) { return n.finals[q]; });
}

}  // namespace wtl
