#ifndef WTL_SIM_HPP
#define WTL_SIM_HPP

// Execution semantics. A state reads the first remaining letter when it has
// a transition on it (sequential step); otherwise it skips the maximal prefix
// of its translucent letters and consumes the first letter it can read (jump
// step). The skipped letters stay on the tape.

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "wtl/core.hpp"

namespace wtl {

inline constexpr std::size_t kDefaultEnumerationBound = 12;

struct Configuration {
  StateId state = kNoState;
  Word remaining;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

enum class StepKind { Sequential, Jump };

struct TraceStep {
  StepKind kind;
  LetterId letter;
  std::size_t consumed_index;  // index within the remaining word before the step
  StateId from;
  StateId to;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

enum class Outcome { Accepted, RejectedStuck, RejectedNonFinal };

struct Moved {
  Configuration next;
  TraceStep step;
};

struct Halt {
  Outcome outcome;
};

using StepResult = std::variant<Moved, Halt>;

struct Trace {
  Word input;
  std::vector<TraceStep> steps;
  Outcome outcome = Outcome::RejectedStuck;
  std::size_t jump_count = 0;
  StateId last_state = kNoState;

  bool accepted() const { return outcome == Outcome::Accepted; }
  friend bool operator==(const Trace&, const Trace&) = default;
};

StepResult step(const DfaWtl& m, const Configuration& c);

/// Runs `m` on `w` to a halt. Throws LetterOutsideAlphabet.
Trace run(const DfaWtl& m, const Word& w);

/// Jump count of the accepting computation, or nullopt when `w` is rejected.
std::optional<std::size_t> jc_word(const DfaWtl& m, const Word& w);

/// Minimum number of jumps over all accepting computations of an NFAwtl.
/// 0/1-weighted shortest path over configurations; exponential in the worst
/// case and meant for small oracle checks. `n` must not have epsilon arcs.
std::optional<std::size_t> min_jump_count(const Nfa& n, const Word& w);

/// Every word over `num_letters` letters with length <= max_len, in
/// length-lexicographic order.
void for_each_word(std::size_t num_letters, std::size_t max_len,
                   const std::function<void(const Word&)>& visit);

using LanguageSample = std::vector<std::pair<Word, std::size_t>>;

/// All accepted words of length <= max_len with their jump counts, in
/// length-lexicographic order. Throws BoundTooLarge when max_len > bound.
LanguageSample enumerate_language(const DfaWtl& m, std::size_t max_len,
                                  std::size_t bound = kDefaultEnumerationBound);

/// JC(n) for n = 0..max_len; nullopt where no word of that length is accepted.
std::vector<std::optional<std::size_t>> jc_profile(
    const DfaWtl& m, std::size_t max_len, std::size_t bound = kDefaultEnumerationBound);

/// Length-lexicographic order on words.
bool length_lex_less(const Word& a, const Word& b);

}  // namespace wtl

#endif  // WTL_SIM_HPP
