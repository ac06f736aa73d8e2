#include <algorithm>
#include <deque>

#include "wtl/core.hpp"

namespace wtl {

void Digraph::add_arc(StateId from, StateId to, LetterId letter) {
  if (from >= num_vertices_ || to >= num_vertices_) {
    throw Error(ErrorKind::UnknownState, "arc endpoint outside the vertex set");
  }
  arcs_.push_back({from, to, letter});
}

std::vector<std::vector<Arc>> Digraph::adjacency() const {
  std::vector<std::vector<Arc>> out(num_vertices_);
  for (const Arc& arc : arcs_) out[arc.from].push_back(arc);
  return out;
}

Digraph digraph_of(const DfaWtl& m) {
  Digraph g(m.num_states());
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (LetterId a = 0; a < m.num_letters(); ++a) {
      if (m.defined(q, a)) g.add_arc(q, m.next(q, a), a);
    }
  }
  return g;
}

Reachability::Reachability(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

void Reachability::merge_row(StateId target, StateId source) {
  std::uint64_t* dst = &rows_[target * words_];
  const std::uint64_t* src = &rows_[source * words_];
  for (std::size_t i = 0; i < words_; ++i) dst[i] |= src[i];
}

Reachability transitive_closure(const Digraph& g) {
  const std::size_t n = g.num_vertices();
  Reachability reach(n);
  for (StateId v = 0; v < n; ++v) reach.set(v, v);
  for (const Arc& arc : g.arcs()) reach.set(arc.from, arc.to);
  // Warshall over bit rows: after round k, reach(i,j) holds iff some path
  // from i to j uses only intermediates < k+1.
  for (StateId k = 0; k < n; ++k) {
    for (StateId i = 0; i < n; ++i) {
      if (i != k && reach(i, k)) reach.merge_row(i, k);
    }
  }
  return reach;
}

namespace {

std::vector<bool> forward_reachable(const DfaWtl& m) {
  std::vector<bool> seen(m.num_states(), false);
  std::vector<StateId> stack{m.initial()};
  seen[m.initial()] = true;
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (LetterId a = 0; a < m.num_letters(); ++a) {
      StateId p = m.next(q, a);
      if (p != kNoState && !seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

std::vector<bool> coreachable(const DfaWtl& m) {
  std::vector<std::vector<StateId>> preds(m.num_states());
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (LetterId a = 0; a < m.num_letters(); ++a) {
      if (m.defined(q, a)) preds[m.next(q, a)].push_back(q);
    }
  }
  std::vector<bool> seen(m.num_states(), false);
  std::vector<StateId> stack;
  for (StateId q = 0; q < m.num_states(); ++q) {
    if (m.is_final(q)) {
      seen[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId p : preds[q]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace

namespace {

std::vector<bool> useful_states(const DfaWtl& m) {
  const auto fwd = forward_reachable(m);
  const auto bwd = coreachable(m);
  std::vector<bool> useful(m.num_states());
  for (StateId q = 0; q < m.num_states(); ++q) useful[q] = fwd[q] && bwd[q];
  return useful;
}

bool leaks(const DfaWtl& m, const std::vector<bool>& useful) {
  for (StateId q = 0; q < m.num_states(); ++q) {
    if (!useful[q]) continue;
    for (LetterId a = 0; a < m.num_letters(); ++a) {
      const StateId p = m.next(q, a);
      if (p != kNoState && !useful[p]) return true;
    }
  }
  return false;
}

DfaWtl restrict_to_useful(const DfaWtl& m, const std::vector<bool>& useful, bool keep_blocked) {
  if (!useful[m.initial()]) {
    return DfaWtl(m.letter_names(), {m.state_name(m.initial())}, 0);
  }
  std::vector<StateId> renumber(m.num_states(), kNoState);
  std::vector<std::string> names;
  for (StateId q = 0; q < m.num_states(); ++q) {
    if (useful[q]) {
      renumber[q] = static_cast<StateId>(names.size());
      names.push_back(m.state_name(q));
    }
  }
  const StateId dead = static_cast<StateId>(names.size());
  if (keep_blocked) {
    std::string name = "dead";
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(name);
  }
  DfaWtl out(m.letter_names(), std::move(names), renumber[m.initial()]);
  for (StateId q = 0; q < m.num_states(); ++q) {
    if (renumber[q] == kNoState) continue;
    out.set_final(renumber[q], m.is_final(q));
    for (LetterId a = 0; a < m.num_letters(); ++a) {
      const StateId p = m.next(q, a);
      if (p == kNoState) continue;
      if (renumber[p] != kNoState) {
        out.set_transition(renumber[q], a, renumber[p]);
      } else if (keep_blocked) {
        out.set_transition(renumber[q], a, dead);
      }
    }
  }
  return out;
}

}  // namespace

// Digraph paths are always readable sequentially, so reachability in the
// digraph is exactly reachability by computations without jumps.
DfaWtl trim(const DfaWtl& m) { return restrict_to_useful(m, useful_states(m), false); }

DfaWtl prune(const DfaWtl& m) {
  const auto useful = useful_states(m);
  return restrict_to_useful(m, useful, useful[m.initial()] && leaks(m, useful));
}

bool trim_is_exact(const DfaWtl& m) {
  const auto useful = useful_states(m);
  return !useful[m.initial()] || !leaks(m, useful);
}

// Breadth-first search that expands letters in declared order. Because the
// graph is deterministic, each level of the queue is ordered by the
// lexicographic order of the labels that reach it, so the first path found
// to a target is the length-lexicographically least one.
std::optional<Path> shortest_path(const DfaWtl& m, StateId from,
                                  const std::function<bool(StateId)>& is_target,
                                  const std::function<bool(StateId, LetterId, StateId)>& arc_ok,
                                  bool nonempty) {
  if (!nonempty && is_target(from)) return Path{{from}, {}};

  struct Parent {
    StateId state = kNoState;
    LetterId letter = kNoLetter;
  };
  std::vector<Parent> parent(m.num_states());
  std::vector<bool> seen(m.num_states(), false);
  std::deque<StateId> queue{from};
  seen[from] = true;

  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (LetterId a = 0; a < m.num_letters(); ++a) {
      StateId p = m.next(q, a);
      if (p == kNoState || (arc_ok && !arc_ok(q, a, p))) continue;
      if (is_target(p)) {
        Path path{{p}, {a}};
        for (StateId v = q; v != from; v = parent[v].state) {
          path.states.push_back(v);
          path.letters.push_back(parent[v].letter);
        }
        path.states.push_back(from);
        std::reverse(path.states.begin(), path.states.end());
        std::reverse(path.letters.begin(), path.letters.end());
        return path;
      }
      if (!seen[p]) {
        seen[p] = true;
        parent[p] = {q, a};
        queue.push_back(p);
      }
    }
  }
  return std::nullopt;
}

}  // namespace wtl
