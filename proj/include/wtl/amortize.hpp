#ifndef WTL_AMORTIZE_HPP
#define WTL_AMORTIZE_HPP

// Language equivalence for constant-jump DfaWtl. Each machine is turned into
// a classical NFA that reads its input strictly left to right: a jump is
// guessed ahead of time and recorded as an owed letter, which is paid off
// when its physical occurrence is reached. Owed entries carry the
// translucent set of the state that jumped, so the NFA can check that every
// letter passed over in the meantime really was skippable.

#include <cstddef>
#include <optional>
#include <vector>

#include "wtl/core.hpp"

namespace wtl {

struct OwedEntry {
  LetterId letter;
  LetterSet guard;  // translucent letters of the jumping state

  friend bool operator==(const OwedEntry&, const OwedEntry&) = default;
  friend auto operator<=>(const OwedEntry&, const OwedEntry&) = default;
};

struct AmortState {
  StateId base;
  std::vector<OwedEntry> pending;  // oldest first

  friend bool operator==(const AmortState&, const AmortState&) = default;
  friend auto operator<=>(const AmortState&, const AmortState&) = default;
};

struct AmortizingNfa {
  Nfa nfa;                         // epsilon-free
  std::vector<AmortState> states;  // states[i] describes nfa state i
  std::size_t bound = 0;
};

/// Throws NotConstant unless classify(m) is Constant. The default bound is
/// |Q| - 1 of the trimmed automaton. Guessed jumps that would exceed the
/// bound are not generated.
AmortizingNfa build_amortizing_nfa(const DfaWtl& m,
                                   std::optional<std::size_t> bound = std::nullopt);

/// Same construction without the complexity check. Used by tests that probe
/// the construction on machines of either class.
AmortizingNfa build_amortizing_nfa_unchecked(const DfaWtl& m, std::size_t bound);

/// Epsilon-free NFA with the same classical language.
Nfa eliminate_epsilon(const Nfa& n);

/// Classical deterministic automaton; kNoState marks a missing transition.
struct ClassicalDfa {
  std::vector<std::string> letters;
  StateId initial = 0;
  std::vector<bool> finals;
  std::vector<StateId> table;  // index q * |letters| + a

  std::size_t num_states() const { return finals.size(); }
  std::size_t num_letters() const { return letters.size(); }
  StateId next(StateId q, LetterId a) const { return table[q * num_letters() + a]; }
  bool accepts(const Word& w) const;
};

/// Powerset construction over reachable subsets; the empty subset is left
/// implicit. Throws PreconditionViolated on epsilon arcs.
ClassicalDfa subset_construction(const Nfa& n);

ClassicalDfa classical_of(const DfaWtl& m);

struct DfaComparison {
  bool equal = true;
  std::optional<Word> witness;  // shortest, then lexicographically least
};

/// Throws AlphabetMismatch unless both use the same letters in the same order.
DfaComparison dfa_equivalence(const ClassicalDfa& d1, const ClassicalDfa& d2);

enum class Equivalence { Equal, NotEqual, NotApplicable };
enum class Side { Left, Right };

struct EquivalenceVerdict {
  Equivalence answer = Equivalence::Equal;
  std::optional<Word> witness;  // in the left machine's letter numbering
  std::optional<Side> side;     // which input is not constant
  std::optional<Side> accepted_by;
};

/// Both machines must have the same set of letter names; the right one is
/// renumbered to the left one's order when they differ. Throws
/// AlphabetMismatch.
EquivalenceVerdict decide_equivalence(const DfaWtl& a, const DfaWtl& b);

}  // namespace wtl

#endif  // WTL_AMORTIZE_HPP
