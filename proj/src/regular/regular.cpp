#include "wtl/regular.hpp"

#include <algorithm>
#include <deque>

#include "wtl/sim.hpp"

namespace wtl {

namespace {

void require_binary(const DfaWtl& m) {
  if (m.num_letters() != 2) {
    throw Error(ErrorKind::AlphabetNotBinary,
                "regularity is decided for two-letter alphabets only (got " +
                    std::to_string(m.num_letters()) + " letters)");
  }
}

LetterId other(LetterId x) { return 1 - x; }

}  // namespace

Digraph restrict_graph(const DfaWtl& m, LetterId x) {
  require_binary(m);
  const LetterId y = other(x);
  Digraph g(m.num_states());
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (LetterId c = 0; c < 2; ++c) {
      const StateId p = m.next(q, c);
      if (p == kNoState) continue;
      if (c == x && m.defined(q, y)) continue;
      g.add_arc(q, p, c);
    }
  }
  return g;
}

DpMatrix::DpMatrix(const Digraph& g, std::size_t num_letters, std::size_t steps)
    : n_(g.num_vertices()),
      letters_(num_letters),
      steps_(steps),
      cells_((steps + 1) * n_ * n_ * num_letters, false) {
  // Layer i+1 extends every path of layer i by one arc r -d-> q. The longer
  // path contains c if the shorter one did, or if d == c and some path
  // (possibly empty) leads from p to r.
  for (std::size_t i = 0; i < steps_; ++i) {
    for (StateId p = 0; p < n_; ++p) {
      for (StateId q = 0; q < n_; ++q) {
        for (LetterId c = 0; c < letters_; ++c) {
          if (entry(i, p, q, c)) cells_[index(i + 1, p, q, c)] = true;
        }
      }
      for (const Arc& arc : g.arcs()) {
        bool path_to_r = arc.from == p;
        for (LetterId c = 0; c < letters_ && !path_to_r; ++c) {
          path_to_r = entry(i, p, arc.from, c);
        }
        for (LetterId c = 0; c < letters_; ++c) {
          if (entry(i, p, arc.from, c) || (arc.letter == c && path_to_r)) {
            cells_[index(i + 1, p, arc.to, c)] = true;
          }
        }
      }
    }
  }
}

std::size_t JumpingCycle::x_arcs() const {
  return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), x));
}

std::optional<JumpingCycle> detect_jumping_cycle(const DfaWtl& m, LetterId x) {
  const Digraph g = restrict_graph(m, x);
  const std::size_t n = m.num_states();
  const LetterId y = other(x);
  const DpMatrix dp(g, 2, n);

  for (StateId p = 0; p < n; ++p) {
    for (StateId r = 0; r < n; ++r) {
      if (!dp.entry(n, p, r, x) || !dp.entry(n, r, p, y)) continue;
      // A state keeps an x-arc only when it has no y-arc, so every vertex of
      // the restricted graph has at most one successor. The circuit through
      // p is therefore the simple cycle obtained by following successors.
      std::vector<Arc> succ(n, Arc{kNoState, kNoState, kNoLetter});
      for (const Arc& arc : g.arcs()) succ[arc.from] = arc;
      JumpingCycle cycle;
      cycle.x = x;
      StateId v = p;
      do {
        cycle.states.push_back(v);
        cycle.letters.push_back(succ[v].letter);
        v = succ[v].to;
      } while (v != p && cycle.states.size() <= n);
      if (v != p) {
        throw Error(ErrorKind::PreconditionViolated, "restricted graph is not functional");
      }
      return cycle;
    }
  }
  return std::nullopt;
}

Word NonRegularWitness::instance(std::size_t i) const {
  Word w = u;
  for (std::size_t k = 0; k < i; ++k) w.insert(w.end(), b_block.begin(), b_block.end());
  for (std::size_t k = 0; k < i; ++k) w.insert(w.end(), a_block.begin(), a_block.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

NonRegularWitness synthesize_nonregular_witness(const DfaWtl& m, const JumpingCycle& c) {
  const auto lead = std::find(c.letters.begin(), c.letters.end(), c.x);
  if (lead == c.letters.end()) {
    throw Error(ErrorKind::PreconditionViolated, "cycle has no x-arc");
  }
  const StateId p0 = c.states[static_cast<std::size_t>(lead - c.letters.begin())];
  NonRegularWitness w;
  w.u = shortest_path(m, m.initial(), [p0](StateId q) { return q == p0; })->letters;
  w.v = shortest_path(m, p0, [&](StateId q) { return m.is_final(q); })->letters;
  const std::size_t ell = c.x_arcs();
  w.b_block.assign(c.length() - ell, other(c.x));
  w.a_block.assign(ell, c.x);
  return w;
}

bool verify_nonregular_witness(const DfaWtl& m, const NonRegularWitness& w,
                               std::size_t depth) {
  for (std::size_t i = 1; i <= depth; ++i) {
    if (!jc_word(m, w.instance(i))) return false;
  }
  return true;
}

namespace {

Nfa counter_nfa_of_trimmed(const DfaWtl& m) {
  const std::size_t k = m.num_states();
  const std::size_t cap = k - 1;  // largest counter value
  auto encode = [k](StateId q, std::size_t a, std::size_t b) {
    return (static_cast<std::size_t>(q) * k + a) * k + b;
  };
  struct Node {
    StateId q;
    std::size_t a;  // pending jumps that consumed letter 0
    std::size_t b;  // pending jumps that consumed letter 1
  };

  std::vector<StateId> id(k * k * k, kNoState);
  std::vector<Node> nodes;
  std::deque<std::size_t> queue;
  auto visit = [&](Node node) {
    const std::size_t key = encode(node.q, node.a, node.b);
    if (id[key] == kNoState) {
      id[key] = static_cast<StateId>(nodes.size());
      nodes.push_back(node);
      queue.push_back(nodes.size() - 1);
    }
    return id[key];
  };

  struct Edge {
    StateId from;
    LetterId letter;  // kNoLetter for epsilon
    StateId to;
  };
  std::vector<Edge> edges;
  visit({m.initial(), 0, 0});
  while (!queue.empty()) {
    const std::size_t index = queue.front();
    queue.pop_front();
    const Node node = nodes[index];
    const auto from = static_cast<StateId>(index);
    const StateId on_a = m.next(node.q, 0);
    const StateId on_b = m.next(node.q, 1);
    // Recording jumps: a state that cannot read one letter skips it and
    // consumes the other one ahead of time.
    if (on_a == kNoState && on_b != kNoState && node.b < cap) {
      edges.push_back({from, kNoLetter, visit({on_b, node.a, node.b + 1})});
    }
    if (on_b == kNoState && on_a != kNoState && node.a < cap) {
      edges.push_back({from, kNoLetter, visit({on_a, node.a + 1, node.b})});
    }
    // Amortizing: the physical occurrence of a letter consumed earlier.
    if (node.a >= 1) edges.push_back({from, 0, visit({node.q, node.a - 1, node.b})});
    if (node.b >= 1) edges.push_back({from, 1, visit({node.q, node.a, node.b - 1})});
    // Sequential reads inherited from the automaton.
    if (node.a == 0 && on_a != kNoState) {
      edges.push_back({from, 0, visit({on_a, 0, node.b})});
    }
    if (node.b == 0 && on_b != kNoState) {
      edges.push_back({from, 1, visit({on_b, node.a, 0})});
    }
  }

  std::vector<std::string> names;
  names.reserve(nodes.size());
  for (const Node& node : nodes) {
    names.push_back("(" + m.state_name(node.q) + "," + std::to_string(node.a) + "," +
                    std::to_string(node.b) + ")");
  }
  Nfa out(m.letter_names(), std::move(names), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.finals[i] = nodes[i].a == 0 && nodes[i].b == 0 && m.is_final(nodes[i].q);
  }
  for (const Edge& e : edges) {
    if (e.letter == kNoLetter) {
      out.add_epsilon(e.from, e.to);
    } else {
      out.add_transition(e.from, e.letter, e.to);
    }
  }
  return out;
}

}  // namespace

Nfa build_counter_nfa(const DfaWtl& m) {
  require_binary(m);
  const DfaWtl trimmed = prune(m);
  for (LetterId x = 0; x < 2; ++x) {
    if (detect_jumping_cycle(trimmed, x)) {
      throw Error(ErrorKind::PreconditionViolated,
                  "automaton has a " + m.letter_name(x) + "-jumping cycle");
    }
  }
  return counter_nfa_of_trimmed(trimmed);
}

RegularityVerdict decide_regular(const DfaWtl& m) {
  require_binary(m);
  const DfaWtl trimmed = prune(m);
  RegularityVerdict verdict;
  for (LetterId x = 0; x < 2; ++x) {
    if (auto cycle = detect_jumping_cycle(trimmed, x)) {
      verdict.answer = Regularity::NonRegular;
      verdict.witness = synthesize_nonregular_witness(trimmed, *cycle);
      verdict.cycle = std::move(cycle);
      return verdict;
    }
  }
  verdict.answer = Regularity::Regular;
  verdict.counter_nfa = counter_nfa_of_trimmed(trimmed);
  return verdict;
}

}  // namespace wtl
