#include "wtl/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace wtl {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view s, int column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back({std::string(s.substr(start, i - start)),
                   column_offset + static_cast<int>(start) + 1});
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

Checked<AutomatonDoc> parse_automaton(std::string_view text) {
  Checked<AutomatonDoc> result;
  AutomatonDoc doc;
  bool seen_alphabet = false;
  bool seen_states = false;
  bool seen_final = false;
  bool content_started = false;
  auto syntax = [&](int line, int column, std::string msg) {
    result.issues.push_back({ErrorKind::Syntax, std::move(msg), line, column});
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      const bool whole_line = line.find_first_not_of(" \t") == hash;
      if (whole_line && !content_started) doc.comments.emplace_back(line.substr(hash + 1));
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    content_started = true;

    if (auto colon = line.find(':'); colon != std::string_view::npos) {
      auto key_tokens = tokenize(line.substr(0, colon), 0);
      auto values = tokenize(line.substr(colon + 1), static_cast<int>(colon) + 1);
      if (key_tokens.size() != 1) {
        syntax(line_no, 1, "malformed header");
        continue;
      }
      const std::string& key = key_tokens[0].text;
      std::vector<std::string> names;
      for (auto& t : values) names.push_back(std::move(t.text));
      auto duplicate = [&](bool& seen) {
        if (seen) syntax(line_no, key_tokens[0].column, "duplicate '" + key + ":' header");
        seen = true;
      };
      if (key == "alphabet") {
        duplicate(seen_alphabet);
        doc.alphabet = std::move(names);
      } else if (key == "states") {
        duplicate(seen_states);
        doc.states = std::move(names);
      } else if (key == "final") {
        duplicate(seen_final);
        doc.finals = std::move(names);
      } else if (key == "initial") {
        if (doc.initial) syntax(line_no, key_tokens[0].column, "duplicate 'initial:' header");
        if (names.size() != 1) {
          syntax(line_no, values.empty() ? static_cast<int>(colon) + 2 : values[0].column,
                 "'initial:' takes exactly one state");
          continue;
        }
        doc.initial = std::move(names[0]);
      } else {
        syntax(line_no, key_tokens[0].column, "unknown header '" + key + "'");
      }
      continue;
    }

    auto tokens = tokenize(line, 0);
    if (tokens.size() != 3) {
      syntax(line_no, tokens.size() > 3 ? tokens[3].column : tokens.back().column,
             "expected 'source letter target'");
      continue;
    }
    doc.transitions.push_back({tokens[0].text, tokens[1].text, tokens[2].text, line_no,
                               {tokens[0].column, tokens[1].column, tokens[2].column}});
    if (end == text.size()) break;
  }

  auto missing = [&](bool present, const char* name) {
    if (!present) {
      result.issues.push_back(
          {ErrorKind::MissingSection, std::string("missing '") + name + ":' section", 0, 0});
    }
  };
  missing(seen_alphabet, "alphabet");
  missing(seen_states, "states");
  missing(doc.initial.has_value(), "initial");
  missing(seen_final, "final");

  if (seen_alphabet) {
    for (const auto& t : doc.transitions) {
      if (t.letter == kEpsilonToken) continue;
      if (std::find(doc.alphabet.begin(), doc.alphabet.end(), t.letter) == doc.alphabet.end()) {
        result.issues.push_back({ErrorKind::UnknownLetter, "'" + t.letter + "'", t.line,
                                 t.columns[1]});
      }
    }
  }
  std::stable_sort(result.issues.begin(), result.issues.end(),
                   [](const Issue& a, const Issue& b) { return a.line < b.line; });
  if (result.issues.empty()) result.value = std::move(doc);
  return result;
}

std::string serialize_automaton(const AutomatonDoc& doc) {
  std::unordered_map<std::string, std::size_t> state_rank;
  std::unordered_map<std::string, std::size_t> letter_rank;
  for (std::size_t i = 0; i < doc.states.size(); ++i) state_rank.emplace(doc.states[i], i);
  for (std::size_t i = 0; i < doc.alphabet.size(); ++i) letter_rank.emplace(doc.alphabet[i], i);
  auto rank = [](const auto& table, const std::string& name) {
    auto it = table.find(name);
    return it == table.end() ? table.size() : it->second;
  };

  std::vector<TransitionLine> lines = doc.transitions;
  std::stable_sort(lines.begin(), lines.end(), [&](const auto& x, const auto& y) {
    auto key = [&](const TransitionLine& t) {
      return std::make_tuple(rank(state_rank, t.source), rank(letter_rank, t.letter),
                             rank(state_rank, t.target));
    };
    return key(x) < key(y);
  });
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

  std::ostringstream out;
  for (const auto& c : doc.comments) out << '#' << c << '\n';
  auto header = [&](const char* key, const std::vector<std::string>& names) {
    out << key << ':';
    if (!names.empty()) out << ' ' << join(names, " ");
    out << '\n';
  };
  header("alphabet", doc.alphabet);
  header("states", doc.states);
  header("initial", doc.initial ? std::vector<std::string>{*doc.initial}
                                : std::vector<std::string>{});
  header("final", doc.finals);
  for (const auto& t : lines) out << t.source << ' ' << t.letter << ' ' << t.target << '\n';
  return out.str();
}

DfaWtl dfa_from_text(std::string_view text) {
  auto fail = [](const std::vector<Issue>& issues) {
    std::string msg;
    for (const auto& issue : issues) {
      if (!msg.empty()) msg += "; ";
      msg += issue.describe();
    }
    throw Error(issues.front().kind, msg);
  };
  auto doc = parse_automaton(text);
  if (!doc.ok()) fail(doc.issues);
  auto m = validate(*doc.value);
  if (!m.ok()) fail(m.issues);
  return std::move(*m.value);
}

DfaWtl load_dfa(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return dfa_from_text(buf.str());
}

std::string render_word(const std::vector<std::string>& letters, const Word& w) {
  if (w.empty()) return "ε";
  const bool compact = std::all_of(letters.begin(), letters.end(),
                                   [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += letters.at(w[i]);
  }
  return out;
}

Word parse_word(const std::vector<std::string>& letters, std::string_view text) {
  Word w;
  if (text.empty() || text == "ε" || text == "-") return w;
  auto lookup = [&](const std::string& name) {
    auto it = std::find(letters.begin(), letters.end(), name);
    if (it == letters.end()) {
      throw Error(ErrorKind::LetterOutsideAlphabet, "'" + name + "' is not in the alphabet");
    }
    return static_cast<LetterId>(it - letters.begin());
  };
  const bool separated = text.find_first_of(" \t,") != std::string_view::npos;
  if (separated) {
    std::string current;
    for (char ch : text) {
      if (ch == ' ' || ch == '\t' || ch == ',') {
        if (!current.empty()) w.push_back(lookup(current));
        current.clear();
      } else {
        current += ch;
      }
    }
    if (!current.empty()) w.push_back(lookup(current));
    return w;
  }
  for (char ch : text) w.push_back(lookup(std::string(1, ch)));
  return w;
}

}  // namespace wtl
