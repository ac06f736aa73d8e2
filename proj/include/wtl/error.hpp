#ifndef WTL_ERROR_HPP
#define WTL_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wtl {

enum class ErrorKind {
  Syntax,
  MissingSection,
  UnknownLetter,
  UnknownState,
  MissingInitial,
  Nondeterministic,
  DuplicateName,
  TooManyLetters,
  EpsilonArc,
  LetterOutsideAlphabet,
  BoundTooLarge,
  AlphabetNotBinary,
  AlphabetMismatch,
  PreconditionViolated,
  NotConstant,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// A single diagnostic. Line and column are 1-based; 0 means "not tied to a
/// source position".
struct Issue {
  ErrorKind kind;
  std::string message;
  int line = 0;
  int column = 0;

  std::string describe() const;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Either a value or the full list of problems that prevented building it.
template <typename T>
struct Checked {
  std::optional<T> value;
  std::vector<Issue> issues;

  bool ok() const noexcept { return value.has_value(); }
};

}  // namespace wtl

#endif  // WTL_ERROR_HPP
