#ifndef WTL_REGULAR_HPP
#define WTL_REGULAR_HPP

// Regularity for binary-alphabet DfaWtl. The language is non-regular exactly
// when the trimmed automaton has an x-jumping cycle: a cycle with arcs on
// both letters in which every x-arc leaves a state that is deficient in the
// other letter. Otherwise a counter epsilon-NFA recognizes the language.

#include <cstddef>
#include <optional>
#include <vector>

#include "wtl/core.hpp"

namespace wtl {

/// All arcs on the other letter, plus the x-arcs whose source is deficient
/// in the other letter. Throws AlphabetNotBinary.
Digraph restrict_graph(const DfaWtl& m, LetterId x);

/// entry(i, p, q, c): some path of length <= i from p to q in the graph
/// contains at least one arc labelled c.
class DpMatrix {
 public:
  /// Fills layers 0..steps for a graph over `num_letters` letters.
  DpMatrix(const Digraph& g, std::size_t num_letters, std::size_t steps);

  std::size_t steps() const { return steps_; }
  bool entry(std::size_t i, StateId p, StateId q, LetterId c) const {
    return cells_[index(i, p, q, c)];
  }

 private:
  std::size_t index(std::size_t i, StateId p, StateId q, LetterId c) const {
    return ((i * n_ + p) * n_ + q) * letters_ + c;
  }

  std::size_t n_;
  std::size_t letters_;
  std::size_t steps_;
  std::vector<bool> cells_;
};

struct JumpingCycle {
  LetterId x;
  std::vector<StateId> states;  // p0 .. p(n-1); the arc after the last returns to p0
  Word letters;                 // letters[i] labels p(i) -> p(i+1)
  std::size_t length() const { return letters.size(); }
  std::size_t x_arcs() const;

  friend bool operator==(const JumpingCycle&, const JumpingCycle&) = default;
};

/// Expects a trimmed binary automaton. Runs the path DP on the restricted
/// graph up to |Q| steps and reconstructs a cycle through the first state
/// that closes a circuit containing both letters.
std::optional<JumpingCycle> detect_jumping_cycle(const DfaWtl& m, LetterId x);

/// u · b_block^i · a_block^i · v is accepted for every i; b_block repeats
/// the letter other than x, a_block repeats x.
struct NonRegularWitness {
  Word u;
  Word b_block;
  Word a_block;
  Word v;

  Word instance(std::size_t i) const;

  friend bool operator==(const NonRegularWitness&, const NonRegularWitness&) = default;
};

/// Expects the trimmed automaton the cycle was found on.
NonRegularWitness synthesize_nonregular_witness(const DfaWtl& m, const JumpingCycle& c);

/// True when every instance for i = 1..depth is accepted.
bool verify_nonregular_witness(const DfaWtl& m, const NonRegularWitness& w,
                               std::size_t depth);

/// Counter epsilon-NFA over states (q, m, n): m and n count jumps that
/// consumed the first and second letter and have not yet been matched with
/// their physical occurrence. Counters never exceed |Q| - 1. Throws
/// AlphabetNotBinary, and PreconditionViolated when a jumping cycle exists.
/// Only states reachable from (initial, 0, 0) are kept.
Nfa build_counter_nfa(const DfaWtl& m);

enum class Regularity { Regular, NonRegular };

/// State ids in `cycle` refer to prune(M).
struct RegularityVerdict {
  Regularity answer = Regularity::Regular;
  std::optional<Nfa> counter_nfa;
  std::optional<JumpingCycle> cycle;
  std::optional<NonRegularWitness> witness;
};

RegularityVerdict decide_regular(const DfaWtl& m);

}  // namespace wtl

#endif  // WTL_REGULAR_HPP
