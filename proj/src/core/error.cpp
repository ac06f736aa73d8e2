#include "wtl/error.hpp"

namespace wtl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::MissingSection: return "MissingSection";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::MissingInitial: return "MissingInitial";
    case ErrorKind::Nondeterministic: return "Nondeterministic";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::TooManyLetters: return "TooManyLetters";
    case ErrorKind::EpsilonArc: return "EpsilonArc";
    case ErrorKind::LetterOutsideAlphabet: return "LetterOutsideAlphabet";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::AlphabetNotBinary: return "AlphabetNotBinary";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotConstant: return "NotConstant";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "IoError";
  }
  return "Unknown";
}

std::string Issue::describe() const {
  std::string out;
  if (line > 0) {
    out += "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    out += ": ";
  }
  out += std::string(to_string(kind));
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace wtl
