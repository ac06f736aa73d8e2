#ifndef WTL_CORE_HPP
#define WTL_CORE_HPP

// Automaton data model shared by every analysis: deterministic and
// nondeterministic automata with translucent letters, raw descriptions as
// read from text, and the digraph utilities (reachability, shortest labelled
// paths, trimming) the decision procedures are built on.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wtl/error.hpp"

namespace wtl {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;
using Word = std::vector<LetterId>;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();
inline constexpr LetterId kNoLetter = std::numeric_limits<LetterId>::max();
inline constexpr std::size_t kMaxLetters = 64;

/// Set of letters of one alphabet, stored as a bitmask.
class LetterSet {
 public:
  constexpr LetterSet() = default;
  constexpr explicit LetterSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr LetterSet all(std::size_t num_letters) {
    return LetterSet(num_letters >= 64 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << num_letters) - 1);
  }

  constexpr bool contains(LetterId a) const { return (bits_ >> a) & 1U; }
  constexpr void insert(LetterId a) { bits_ |= std::uint64_t{1} << a; }
  constexpr void erase(LetterId a) { bits_ &= ~(std::uint64_t{1} << a); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr LetterSet operator|(LetterSet o) const { return LetterSet(bits_ | o.bits_); }
  constexpr LetterSet operator&(LetterSet o) const { return LetterSet(bits_ & o.bits_); }

  /// Members in ascending (declared) order.
  std::vector<LetterId> members() const;

  friend constexpr bool operator==(LetterSet, LetterSet) = default;
  friend constexpr auto operator<=>(LetterSet, LetterSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// One transition line of a raw description. An epsilon arc uses the letter
/// token `epsilon`.
struct TransitionLine {
  std::string source;
  std::string letter;
  std::string target;
  int line = 0;
  std::array<int, 3> columns{};  // 1-based token columns, 0 when unknown

  friend bool operator==(const TransitionLine& a, const TransitionLine& b) {
    return a.source == b.source && a.letter == b.letter && a.target == b.target;
  }
};

inline constexpr const char* kEpsilonToken = "epsilon";

/// Raw, unvalidated automaton description (the text format's data model).
struct AutomatonDoc {
  std::vector<std::string> comments;  // leading comment lines, without '#'
  std::vector<std::string> alphabet;
  std::vector<std::string> states;
  std::optional<std::string> initial;
  std::vector<std::string> finals;
  std::vector<TransitionLine> transitions;

  friend bool operator==(const AutomatonDoc&, const AutomatonDoc&) = default;
};

/// Deterministic finite automaton with translucent letters. Transitions are
/// partial; an undefined δ(q,a) makes `a` translucent for `q`. No sink state
/// is ever materialized.
class DfaWtl {
 public:
  DfaWtl(std::vector<std::string> letters, std::vector<std::string> states,
         StateId initial);

  std::size_t num_states() const { return state_names_.size(); }
  std::size_t num_letters() const { return letter_names_.size(); }
  StateId initial() const { return initial_; }

  bool is_final(StateId q) const { return finals_[q]; }
  void set_final(StateId q, bool final = true) { finals_[q] = final; }

  /// Target of δ(q,a), or kNoState when undefined.
  StateId next(StateId q, LetterId a) const {
    return table_[static_cast<std::size_t>(q) * num_letters() + a];
  }
  bool defined(StateId q, LetterId a) const { return next(q, a) != kNoState; }
  void set_transition(StateId q, LetterId a, StateId target) {
    table_[static_cast<std::size_t>(q) * num_letters() + a] = target;
  }

  const std::vector<std::string>& letter_names() const { return letter_names_; }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::string& letter_name(LetterId a) const { return letter_names_[a]; }
  const std::string& state_name(StateId q) const { return state_names_[q]; }
  std::optional<LetterId> find_letter(const std::string& name) const;
  std::optional<StateId> find_state(const std::string& name) const;

  friend bool operator==(const DfaWtl&, const DfaWtl&) = default;

 private:
  std::vector<std::string> letter_names_;
  std::vector<std::string> state_names_;
  StateId initial_;
  std::vector<bool> finals_;
  std::vector<StateId> table_;
};

/// Nondeterministic automaton. Without epsilon arcs it is read as an NFAwtl
/// by the simulator; with translucency ignored it is a classical epsilon-NFA,
/// which is how the regularity and equivalence constructions emit results.
struct Nfa {
  std::vector<std::string> letters;
  std::vector<std::string> states;
  StateId initial = 0;
  std::vector<bool> finals;
  std::vector<std::vector<StateId>> delta;    // index q * |letters| + a, sorted
  std::vector<std::vector<StateId>> epsilon;  // per state, sorted

  Nfa() = default;
  Nfa(std::vector<std::string> letter_names, std::vector<std::string> state_names,
      StateId initial_state);

  std::size_t num_states() const { return states.size(); }
  std::size_t num_letters() const { return letters.size(); }
  const std::vector<StateId>& targets(StateId q, LetterId a) const {
    return delta[static_cast<std::size_t>(q) * num_letters() + a];
  }
  void add_transition(StateId q, LetterId a, StateId target);
  void add_epsilon(StateId q, StateId target);
  bool has_epsilon() const;
  std::size_t num_transitions() const;

  static Nfa from_dfa(const DfaWtl& m);
};

/// Translucent letters of `q`: Γ(q) = { a | δ(q,a) undefined }.
LetterSet deficiency(const DfaWtl& m, StateId q);

/// Builds a DfaWtl from a raw description, or reports every violation found.
Checked<DfaWtl> validate(const AutomatonDoc& doc);

/// Builds an Nfa from a raw description; repeated (source, letter) lines and
/// epsilon arcs are allowed.
Checked<Nfa> validate_nfa(const AutomatonDoc& doc);

AutomatonDoc to_doc(const DfaWtl& m);
AutomatonDoc to_doc(const Nfa& n);

/// Classical (non-jumping) acceptance with epsilon closure.
bool accepts_classically(const Nfa& n, const Word& w);

struct Arc {
  StateId from;
  StateId to;
  LetterId letter = kNoLetter;
};

class Digraph {
 public:
  explicit Digraph(std::size_t num_vertices = 0) : num_vertices_(num_vertices) {}

  std::size_t num_vertices() const { return num_vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  void add_arc(StateId from, StateId to, LetterId letter = kNoLetter);

  /// Outgoing arcs per vertex, in insertion order.
  std::vector<std::vector<Arc>> adjacency() const;

 private:
  std::size_t num_vertices_;
  std::vector<Arc> arcs_;
};

/// Letter-labelled transition digraph of `m`.
Digraph digraph_of(const DfaWtl& m);

/// Reflexive-transitive reachability relation, one bit row per vertex.
class Reachability {
 public:
  explicit Reachability(std::size_t n);

  std::size_t size() const { return n_; }
  bool operator()(StateId from, StateId to) const {
    return (rows_[from * words_ + to / 64] >> (to % 64)) & 1U;
  }
  void set(StateId from, StateId to) {
    rows_[from * words_ + to / 64] |= std::uint64_t{1} << (to % 64);
  }
  /// row(target) |= row(source)
  void merge_row(StateId target, StateId source);

  friend bool operator==(const Reachability&, const Reachability&) = default;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

/// Warshall closure; paths of length 0 count, so the result is reflexive.
Reachability transitive_closure(const Digraph& g);

/// Removes states that are unreachable from the initial state or cannot
/// reach a final state. Surviving states keep their names and relative order.
/// When the initial state itself is useless the result is the canonical
/// one-state empty-language automaton.
DfaWtl trim(const DfaWtl& m);

/// Dropping a transition into a useless state makes its letter translucent
/// at the source, so `trim` can enlarge the jumping language. `prune` keeps
/// such letters blocked: the transitions are redirected to one added
/// non-final state without transitions, numbered after the useful states.
/// The jumping language and every jump count are preserved. Without such
/// transitions the result equals `trim(m)`.
DfaWtl prune(const DfaWtl& m);

/// True when `trim(m)` recognizes the same jumping language as `m`, i.e. no
/// useful state has a transition into a useless one.
bool trim_is_exact(const DfaWtl& m);

struct Path {
  std::vector<StateId> states;  // |letters| + 1 entries
  Word letters;
};

/// Shortest path from `from` to a vertex satisfying `is_target`, using only
/// arcs accepted by `arc_ok`. Among shortest paths the lexicographically
/// least label (declared letter order) wins. With `nonempty`, `from` itself
/// only counts as a target after at least one arc.
std::optional<Path> shortest_path(
    const DfaWtl& m, StateId from, const std::function<bool(StateId)>& is_target,
    const std::function<bool(StateId, LetterId, StateId)>& arc_ok = {},
    bool nonempty = false);

}  // namespace wtl

#endif  // WTL_CORE_HPP
