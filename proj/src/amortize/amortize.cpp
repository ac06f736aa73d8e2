#include "wtl/amortize.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "wtl/jumpcx.hpp"
#include "wtl/sim.hpp"

namespace wtl {

namespace {

std::string describe(const DfaWtl& m, const AmortState& s) {
  std::string name = m.state_name(s.base);
  if (s.pending.empty()) return name;
  name += "[";
  for (std::size_t i = 0; i < s.pending.size(); ++i) {
    if (i > 0) name += ";";
    name += m.letter_name(s.pending[i].letter) + "/";
    bool first = true;
    for (LetterId g : s.pending[i].guard.members()) {
      if (!first) name += "+";
      name += m.letter_name(g);
      first = false;
    }
  }
  return name + "]";
}

// Closure-based epsilon removal followed by pruning to states reachable by
// letters. `kept[i]` is the source state of result state i.
Nfa remove_epsilon(const Nfa& n, std::vector<StateId>* kept) {
  const std::size_t size = n.num_states();
  std::vector<std::vector<StateId>> closure(size);
  for (StateId q = 0; q < size; ++q) {
    std::vector<bool> in(size, false);
    std::vector<StateId> stack{q};
    in[q] = true;
    while (!stack.empty()) {
      StateId v = stack.back();
      stack.pop_back();
      closure[q].push_back(v);
      for (StateId p : n.epsilon[v]) {
        if (!in[p]) {
          in[p] = true;
          stack.push_back(p);
        }
      }
    }
    std::sort(closure[q].begin(), closure[q].end());
  }

  std::vector<StateId> renumber(size, kNoState);
  std::vector<StateId> order{n.initial};
  renumber[n.initial] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (StateId v : closure[order[i]]) {
      for (LetterId a = 0; a < n.num_letters(); ++a) {
        for (StateId p : n.targets(v, a)) {
          if (renumber[p] == kNoState) {
            renumber[p] = static_cast<StateId>(order.size());
            order.push_back(p);
          }
        }
      }
    }
  }

  std::vector<std::string> names;
  for (StateId q : order) names.push_back(n.states[q]);
  Nfa out(n.letters, std::move(names), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& cl = closure[order[i]];
    out.finals[i] = std::any_of(cl.begin(), cl.end(), [&](StateId v) { return n.finals[v]; });
    for (StateId v : cl) {
      for (LetterId a = 0; a < n.num_letters(); ++a) {
        for (StateId p : n.targets(v, a)) {
          out.add_transition(static_cast<StateId>(i), a, renumber[p]);
        }
      }
    }
  }
  if (kept) *kept = std::move(order);
  return out;
}

}  // namespace

Nfa eliminate_epsilon(const Nfa& n) { return remove_epsilon(n, nullptr); }

AmortizingNfa build_amortizing_nfa_unchecked(const DfaWtl& input, std::size_t bound) {
  const DfaWtl m = prune(input);
  std::map<AmortState, StateId> index;
  std::vector<AmortState> states;
  std::deque<StateId> queue;
  auto visit = [&](AmortState s) {
    auto [it, inserted] = index.emplace(s, static_cast<StateId>(states.size()));
    if (inserted) {
      states.push_back(std::move(s));
      queue.push_back(it->second);
    }
    return it->second;
  };

  struct Edge {
    StateId from;
    LetterId letter;  // kNoLetter for epsilon
    StateId to;
  };
  std::vector<Edge> edges;
  visit({m.initial(), {}});
  while (!queue.empty()) {
    const StateId from = queue.front();
    queue.pop_front();
    const AmortState s = states[from];
    const LetterSet translucent = deficiency(m, s.base);

    // Guess a jump: consume some readable letter ahead of the read position.
    if (!translucent.empty() && s.pending.size() < bound) {
      for (LetterId b = 0; b < m.num_letters(); ++b) {
        const StateId p = m.next(s.base, b);
        if (p == kNoState) continue;
        AmortState t{p, s.pending};
        t.pending.push_back({b, translucent});
        edges.push_back({from, kNoLetter, visit(std::move(t))});
      }
    }

    for (LetterId c = 0; c < m.num_letters(); ++c) {
      auto owed = std::find_if(s.pending.begin(), s.pending.end(),
                               [c](const OwedEntry& e) { return e.letter == c; });
      if (owed != s.pending.end()) {
        // Forced payoff of the oldest entry owing c. Older entries were
        // created while this occurrence was still ahead of them on the
        // tape, so c must have been translucent for their states.
        const bool skippable = std::all_of(s.pending.begin(), owed, [c](const OwedEntry& e) {
          return e.guard.contains(c);
        });
        if (!skippable) continue;
        AmortState t{s.base, s.pending};
        t.pending.erase(t.pending.begin() + (owed - s.pending.begin()));
        edges.push_back({from, c, visit(std::move(t))});
        continue;
      }
      const StateId p = m.next(s.base, c);
      if (p == kNoState) continue;
      const bool skippable = std::all_of(s.pending.begin(), s.pending.end(),
                                         [c](const OwedEntry& e) { return e.guard.contains(c); });
      if (!skippable) continue;
      edges.push_back({from, c, visit({p, s.pending})});
    }
  }

  std::vector<std::string> names;
  names.reserve(states.size());
  for (const auto& s : states) names.push_back(describe(m, s));
  Nfa eps(m.letter_names(), std::move(names), 0);
  for (std::size_t i = 0; i < states.size(); ++i) {
    eps.finals[i] = states[i].pending.empty() && m.is_final(states[i].base);
  }
  for (const Edge& e : edges) {
    if (e.letter == kNoLetter) {
      eps.add_epsilon(e.from, e.to);
    } else {
      eps.add_transition(e.from, e.letter, e.to);
    }
  }

  AmortizingNfa out;
  std::vector<StateId> kept;
  out.nfa = remove_epsilon(eps, &kept);
  out.bound = bound;
  for (StateId q : kept) out.states.push_back(states[q]);
  return out;
}

AmortizingNfa build_amortizing_nfa(const DfaWtl& m, std::optional<std::size_t> bound) {
  if (classify(m).cls != JumpClass::Constant) {
    throw Error(ErrorKind::NotConstant, "jump complexity is not bounded by a constant");
  }
  const std::size_t states = trim(m).num_states();
  return build_amortizing_nfa_unchecked(m, bound.value_or(states - 1));
}

bool ClassicalDfa::accepts(const Word& w) const {
  StateId q = initial;
  for (LetterId a : w) {
    if (a >= num_letters()) {
      throw Error(ErrorKind::LetterOutsideAlphabet, "letter index " + std::to_string(a));
    }
    q = next(q, a);
    if (q == kNoState) return false;
  }
  return finals[q];
}

ClassicalDfa subset_construction(const Nfa& n) {
  if (n.has_epsilon()) {
    throw Error(ErrorKind::PreconditionViolated, "subset construction expects an epsilon-free NFA");
  }
  ClassicalDfa d;
  d.letters = n.letters;
  std::map<std::vector<StateId>, StateId> index;
  std::vector<std::vector<StateId>> subsets{{n.initial}};
  index.emplace(subsets[0], 0);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const std::vector<StateId> current = subsets[i];
    d.finals.push_back(
        std::any_of(current.begin(), current.end(), [&](StateId q) { return n.finals[q]; }));
    for (LetterId a = 0; a < n.num_letters(); ++a) {
      std::vector<StateId> next;
      for (StateId q : current) {
        const auto& t = n.targets(q, a);
        next.insert(next.end(), t.begin(), t.end());
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) {
        d.table.push_back(kNoState);
        continue;
      }
      auto [it, inserted] = index.emplace(next, static_cast<StateId>(subsets.size()));
      if (inserted) subsets.push_back(next);
      d.table.push_back(it->second);
    }
  }
  return d;
}

ClassicalDfa classical_of(const DfaWtl& m) {
  ClassicalDfa d;
  d.letters = m.letter_names();
  d.initial = m.initial();
  for (StateId q = 0; q < m.num_states(); ++q) {
    d.finals.push_back(m.is_final(q));
    for (LetterId a = 0; a < m.num_letters(); ++a) d.table.push_back(m.next(q, a));
  }
  return d;
}

DfaComparison dfa_equivalence(const ClassicalDfa& d1, const ClassicalDfa& d2) {
  if (d1.letters != d2.letters) {
    throw Error(ErrorKind::AlphabetMismatch, "automata use different alphabets");
  }
  using Pair = std::pair<StateId, StateId>;
  auto accepting = [](const ClassicalDfa& d, StateId q) {
    return q != kNoState && d.finals[q];
  };
  struct Parent {
    Pair from;
    LetterId letter;
  };
  std::map<Pair, Parent> parent;
  std::deque<Pair> queue;
  const Pair start{d1.initial, d2.initial};
  parent.emplace(start, Parent{start, kNoLetter});
  queue.push_back(start);
  while (!queue.empty()) {
    const Pair cur = queue.front();
    queue.pop_front();
    if (accepting(d1, cur.first) != accepting(d2, cur.second)) {
      Word w;
      for (Pair v = cur; v != start; v = parent.at(v).from) w.push_back(parent.at(v).letter);
      std::reverse(w.begin(), w.end());
      return {false, std::move(w)};
    }
    if (cur.first == kNoState && cur.second == kNoState) continue;
    for (LetterId a = 0; a < d1.num_letters(); ++a) {
      const Pair nxt{cur.first == kNoState ? kNoState : d1.next(cur.first, a),
                     cur.second == kNoState ? kNoState : d2.next(cur.second, a)};
      if (parent.emplace(nxt, Parent{cur, a}).second) queue.push_back(nxt);
    }
  }
  return {true, std::nullopt};
}

namespace {

DfaWtl reorder_letters(const DfaWtl& b, const std::vector<std::string>& order) {
  DfaWtl out(order, b.state_names(), b.initial());
  for (StateId q = 0; q < b.num_states(); ++q) {
    out.set_final(q, b.is_final(q));
    for (LetterId a = 0; a < order.size(); ++a) {
      const LetterId src = *b.find_letter(order[a]);
      if (b.defined(q, src)) out.set_transition(q, a, b.next(q, src));
    }
  }
  return out;
}

}  // namespace

EquivalenceVerdict decide_equivalence(const DfaWtl& a, const DfaWtl& b_in) {
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(a.letter_names()) != sorted(b_in.letter_names())) {
    throw Error(ErrorKind::AlphabetMismatch, "automata use different alphabets");
  }
  const DfaWtl b = a.letter_names() == b_in.letter_names()
                       ? b_in
                       : reorder_letters(b_in, a.letter_names());

  EquivalenceVerdict verdict;
  if (classify(a).cls != JumpClass::Constant) {
    verdict.answer = Equivalence::NotApplicable;
    verdict.side = Side::Left;
    return verdict;
  }
  if (classify(b).cls != JumpClass::Constant) {
    verdict.answer = Equivalence::NotApplicable;
    verdict.side = Side::Right;
    return verdict;
  }

  const ClassicalDfa da = subset_construction(build_amortizing_nfa(a).nfa);
  const ClassicalDfa db = subset_construction(build_amortizing_nfa(b).nfa);
  DfaComparison cmp = dfa_equivalence(da, db);
  if (cmp.equal) {
    verdict.answer = Equivalence::Equal;
    return verdict;
  }
  const bool in_a = jc_word(a, *cmp.witness).has_value();
  const bool in_b = jc_word(b, *cmp.witness).has_value();
  if (in_a == in_b) {
    throw std::logic_error("distinguishing word is not confirmed by simulation");
  }
  verdict.answer = Equivalence::NotEqual;
  verdict.witness = std::move(cmp.witness);
  verdict.accepted_by = in_a ? Side::Left : Side::Right;
  return verdict;
}

}  // namespace wtl
