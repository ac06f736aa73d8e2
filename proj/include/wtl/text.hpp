#ifndef WTL_TEXT_HPP
#define WTL_TEXT_HPP

// Plain-text automaton format:
//
//   # comment
//   alphabet: a b
//   states: q0 q1
//   initial: q0
//   final: q0
//   q0 a q1
//   q1 b q0
//
// One automaton per file. Tokens are whitespace separated and '#' starts a
// comment. Nondeterministic automata repeat (source, letter) pairs and use
// the pseudo-letter `epsilon` for epsilon arcs.

#include <string>
#include <string_view>
#include <vector>

#include "wtl/core.hpp"

namespace wtl {

/// Errors: SyntaxError, MissingSection, UnknownLetter; each with line and
/// column.
Checked<AutomatonDoc> parse_automaton(std::string_view text);

/// Canonical text: leading comments, headers, then transitions sorted by
/// source (declared order), letter (declared order, epsilon last) and
/// target. Identical input gives byte-identical output.
std::string serialize_automaton(const AutomatonDoc& doc);

/// Reads and validates a deterministic automaton file; throws Error with
/// every issue in the message.
DfaWtl load_dfa(const std::string& path);
DfaWtl dfa_from_text(std::string_view text);

/// Letters are written back to back when every letter name is a single
/// character, and space separated otherwise. The empty word is "ε".
std::string render_word(const std::vector<std::string>& letters, const Word& w);

/// Accepts "", "ε" and "-" for the empty word; whitespace or commas separate
/// multi-character letter names. Throws LetterOutsideAlphabet.
Word parse_word(const std::vector<std::string>& letters, std::string_view text);

}  // namespace wtl

#endif  // WTL_TEXT_HPP
