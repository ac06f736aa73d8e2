#ifndef WTL_TESTS_SUPPORT_HPP
#define WTL_TESTS_SUPPORT_HPP

// Shared helpers for the test binaries: fixture loading, a seeded random
// automaton generator, and reference oracles written directly from the
// definitions. The oracles deliberately avoid the library's algorithms.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wtl/core.hpp"
#include "wtl/text.hpp"

#ifndef WTL_CORPUS_DIR
#error "WTL_CORPUS_DIR must point at the fixture directory"
#endif

namespace wtl::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(WTL_CORPUS_DIR) + "/" + name;
}

inline DfaWtl fixture(const std::string& name) { return load_dfa(corpus_path(name)); }

inline Word word(const DfaWtl& m, const std::string& text) {
  return parse_word(m.letter_names(), text);
}

inline std::vector<std::string> names(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// Random partial DfaWtl. Each transition is present with probability
/// `density`; at least one state is final.
inline DfaWtl random_dfa(std::mt19937_64& rng, std::size_t states, std::size_t letters,
                         double density = 0.55) {
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < letters; ++i) alphabet.push_back(std::string(1, char('a' + i)));
  DfaWtl m(alphabet, names("q", states), 0);
  std::bernoulli_distribution present(density);
  std::bernoulli_distribution final(0.35);
  std::uniform_int_distribution<StateId> target(0, static_cast<StateId>(states - 1));
  bool any_final = false;
  for (StateId q = 0; q < states; ++q) {
    if (final(rng)) {
      m.set_final(q);
      any_final = true;
    }
    for (LetterId a = 0; a < letters; ++a) {
      if (present(rng)) m.set_transition(q, a, target(rng));
    }
  }
  if (!any_final) m.set_final(target(rng));
  return m;
}

/// Random machine with a nonempty language after trimming, already trimmed.
inline DfaWtl random_trimmed(std::mt19937_64& rng, std::size_t max_states,
                             std::size_t min_letters, std::size_t max_letters) {
  std::uniform_int_distribution<std::size_t> n(1, max_states);
  std::uniform_int_distribution<std::size_t> l(min_letters, max_letters);
  std::uniform_real_distribution<double> d(0.35, 0.8);
  while (true) {
    DfaWtl m = trim(random_dfa(rng, n(rng), l(rng), d(rng)));
    bool any_final = false;
    for (StateId q = 0; q < m.num_states(); ++q) any_final = any_final || m.is_final(q);
    if (any_final) return m;
  }
}

/// The jump relation taken literally: from (s, w) move to (p, w with
/// position i removed) when δ(s, w[i]) = p and δ(s, w[j]) is undefined for
/// every j < i. Returns the jump count of an accepting computation.
inline std::optional<std::size_t> reference_jc(const DfaWtl& m, Word w) {
  StateId s = m.initial();
  std::size_t jumps = 0;
  while (!w.empty()) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < w.size() && !pick; ++i) {
      if (!m.defined(s, w[i])) continue;
      bool earlier_translucent = true;
      for (std::size_t j = 0; j < i; ++j) earlier_translucent &= !m.defined(s, w[j]);
      if (earlier_translucent) pick = i;
    }
    if (!pick) return std::nullopt;
    if (*pick > 0) ++jumps;
    s = m.next(s, w[*pick]);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(*pick));
  }
  if (!m.is_final(s)) return std::nullopt;
  return jumps;
}

/// Every word over `letters` letters with length <= max_len.
inline std::vector<Word> all_words(std::size_t letters, std::size_t max_len) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (LetterId a = 0; a < letters; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

/// Classical acceptance by an NFA with epsilon arcs, via explicit state sets.
inline bool reference_nfa_accepts(const Nfa& n, const Word& w) {
  auto close = [&](std::set<StateId> s) {
    std::vector<StateId> work(s.begin(), s.end());
    while (!work.empty()) {
      StateId q = work.back();
      work.pop_back();
      for (StateId p : n.epsilon[q]) {
        if (s.insert(p).second) work.push_back(p);
      }
    }
    return s;
  };
  std::set<StateId> current = close({n.initial});
  for (LetterId a : w) {
    std::set<StateId> next;
    for (StateId q : current) {
      for (StateId p : n.targets(q, a)) next.insert(p);
    }
    current = close(std::move(next));
  }
  return std::any_of(current.begin(), current.end(), [&](StateId q) { return n.finals[q]; });
}

/// Strongly connected components (Tarjan, recursive) of a labelled digraph.
inline std::vector<int> scc_ids(const Digraph& g) {
  const std::size_t n = g.num_vertices();
  const auto adj = g.adjacency();
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  int counter = 0;
  int components = 0;
  auto visit = [&](auto&& self, StateId v) -> void {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const Arc& arc : adj[v]) {
      if (index[arc.to] < 0) {
        self(self, arc.to);
        low[v] = std::min(low[v], low[arc.to]);
      } else if (on_stack[arc.to]) {
        low[v] = std::min(low[v], index[arc.to]);
      }
    }
    if (low[v] == index[v]) {
      StateId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = components;
      } while (w != v);
      ++components;
    }
  };
  for (StateId v = 0; v < n; ++v) {
    if (index[v] < 0) visit(visit, v);
  }
  return comp;
}

/// True when some strongly connected component of the graph obtained by
/// keeping every y-arc and the x-arcs of y-deficient states has internal
/// arcs on both letters. Binary alphabets only.
inline bool reference_has_jumping_cycle(const DfaWtl& m, LetterId x) {
  const LetterId y = 1 - x;
  Digraph g(m.num_states());
  for (StateId q = 0; q < m.num_states(); ++q) {
    if (m.defined(q, y)) g.add_arc(q, m.next(q, y), y);
    if (m.defined(q, x) && !m.defined(q, y)) g.add_arc(q, m.next(q, x), x);
  }
  const auto comp = scc_ids(g);
  std::map<int, std::set<LetterId>> labels;
  for (const Arc& arc : g.arcs()) {
    if (comp[arc.from] == comp[arc.to]) labels[comp[arc.from]].insert(arc.letter);
  }
  return std::any_of(labels.begin(), labels.end(),
                     [](const auto& entry) { return entry.second.size() == 2; });
}

}  // namespace wtl::testing

#endif  // WTL_TESTS_SUPPORT_HPP
