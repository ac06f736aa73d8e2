#ifndef WTL_JUMPCX_HPP
#define WTL_JUMPCX_HPP

// Jump-complexity classification. A DfaWtl either has jump complexity
// bounded by a constant or linear in the input length; nothing in between
// exists, so the verdict type has exactly those two values. Linear verdicts
// carry a pump family that can be checked by simulation.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "wtl/core.hpp"

namespace wtl {

inline constexpr std::size_t kMaxVerifyDepth = 256;

/// A jump from `t` over `jumped` consumes `consumed` and moves to `s`; `s`
/// then reads `jumped` sequentially into `r`, and `r` returns to `t` along
/// `return_path`. Each pass around this loop costs one jump.
struct T1Trigger {
  StateId t;
  LetterId jumped;
  LetterId consumed;
  StateId s;
  StateId r;
  Path return_path;  // r ->* t, possibly empty
};

/// A cycle of `jumped`-deficient states at `base`, plus an escape through
/// `jumped`-deficient states to `exit`, which moves on `exit_letter` to a
/// state `reader` that reads `jumped`. Every letter of the cycle is consumed
/// by a jump.
struct T2Trigger {
  LetterId jumped;
  StateId base;
  Path cycle;   // base ->+ base inside the deficient states
  Path escape;  // base ->* exit inside the deficient states
  LetterId exit_letter = kNoLetter;
  StateId reader = kNoState;
};

using Trigger = std::variant<T1Trigger, T2Trigger>;

struct LinearWitness {
  Word prefix;
  Word pump;
  Word suffix;
  std::size_t jumps_per_iteration = 1;

  /// prefix · pump^i · suffix
  Word instance(std::size_t i) const;

  friend bool operator==(const LinearWitness&, const LinearWitness&) = default;
};

enum class JumpClass { Constant, Linear };

/// State ids inside `trigger` refer to prune(M).
struct ComplexityVerdict {
  JumpClass cls = JumpClass::Constant;
  std::optional<LinearWitness> witness;
  std::optional<Trigger> trigger;
};

/// Expects a trimmed automaton. Triggers are searched state-major, then by
/// jumped letter, then by consumed letter.
std::optional<T1Trigger> t1_trigger(const DfaWtl& m);

/// Expects a trimmed automaton. Searched letter-major, then by cycle state.
std::optional<T2Trigger> t2_trigger(const DfaWtl& m);

ComplexityVerdict classify(const DfaWtl& m);

/// Expects the trimmed automaton the trigger was found on.
LinearWitness synthesize_linear_witness(const DfaWtl& m, const Trigger& trigger);

struct WitnessCheck {
  bool passed = true;
  std::optional<std::size_t> first_failure;
  std::size_t checked = 0;
};

/// Checks acceptance and jc >= i * jumps_per_iteration for i = 1..depth.
WitnessCheck verify_witness(const DfaWtl& m, const LinearWitness& w, std::size_t depth,
                            std::size_t bound = kMaxVerifyDepth);

}  // namespace wtl

#endif  // WTL_JUMPCX_HPP
