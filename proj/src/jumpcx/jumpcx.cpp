#include "wtl/jumpcx.hpp"

#include "wtl/sim.hpp"

namespace wtl {

Word LinearWitness::instance(std::size_t i) const {
  Word w = prefix;
  for (std::size_t k = 0; k < i; ++k) w.insert(w.end(), pump.begin(), pump.end());
  w.insert(w.end(), suffix.begin(), suffix.end());
  return w;
}

std::optional<T1Trigger> t1_trigger(const DfaWtl& m) {
  const Reachability reach = transitive_closure(digraph_of(m));
  for (StateId t = 0; t < m.num_states(); ++t) {
    for (LetterId jumped = 0; jumped < m.num_letters(); ++jumped) {
      if (m.defined(t, jumped)) continue;
      for (LetterId consumed = 0; consumed < m.num_letters(); ++consumed) {
        const StateId s = m.next(t, consumed);
        if (s == kNoState) continue;
        const StateId r = m.next(s, jumped);
        if (r == kNoState || !reach(r, t)) continue;
        auto back = shortest_path(m, r, [t](StateId q) { return q == t; });
        return T1Trigger{t, jumped, consumed, s, r, std::move(*back)};
      }
    }
  }
  return std::nullopt;
}

std::optional<T2Trigger> t2_trigger(const DfaWtl& m) {
  const std::size_t n = m.num_states();
  // The reader's a-successor must still reach a final state. This only
  // excludes the dead state that prune adds.
  const Reachability all = transitive_closure(digraph_of(m));
  std::vector<bool> live(n, false);
  for (StateId q = 0; q < n; ++q) {
    for (StateId f = 0; f < n && !live[q]; ++f) live[q] = m.is_final(f) && all(q, f);
  }
  auto reads = [&](StateId p, LetterId a) {
    const StateId r = m.next(p, a);
    return r != kNoState && live[r];
  };
  for (LetterId a = 0; a < m.num_letters(); ++a) {
    std::vector<bool> deficient(n);
    for (StateId q = 0; q < n; ++q) deficient[q] = !m.defined(q, a);

    Digraph restricted(n);
    for (StateId q = 0; q < n; ++q) {
      if (!deficient[q]) continue;
      for (LetterId c = 0; c < m.num_letters(); ++c) {
        StateId p = m.next(q, c);
        if (p != kNoState && deficient[p]) restricted.add_arc(q, p, c);
      }
    }
    const Reachability reach = transitive_closure(restricted);

    // Deficient states owning an arc into a state that reads `a`.
    std::vector<bool> exit(n, false);
    for (StateId q = 0; q < n; ++q) {
      if (!deficient[q]) continue;
      for (LetterId c = 0; c < m.num_letters(); ++c) {
        StateId p = m.next(q, c);
        if (p != kNoState && reads(p, a)) exit[q] = true;
      }
    }

    auto inside = [&](StateId from, LetterId, StateId to) {
      return deficient[from] && deficient[to];
    };

    for (StateId q = 0; q < n; ++q) {
      if (!deficient[q]) continue;
      bool on_cycle = false;
      for (const Arc& arc : restricted.arcs()) {
        if (arc.from == q && reach(arc.to, q)) on_cycle = true;
      }
      if (!on_cycle) continue;
      bool escapes = false;
      for (StateId s = 0; s < n && !escapes; ++s) escapes = exit[s] && reach(q, s);
      if (!escapes) continue;

      T2Trigger trigger;
      trigger.jumped = a;
      trigger.base = q;
      trigger.cycle = *shortest_path(m, q, [q](StateId v) { return v == q; }, inside, true);
      trigger.escape = *shortest_path(m, q, [&](StateId v) { return exit[v]; }, inside);
      const StateId last = trigger.escape.states.back();
      for (LetterId c = 0; c < m.num_letters(); ++c) {
        StateId p = m.next(last, c);
        if (p != kNoState && reads(p, a)) {
          trigger.exit_letter = c;
          trigger.reader = p;
          break;
        }
      }
      return trigger;
    }
  }
  return std::nullopt;
}

namespace {

Word path_to_final(const DfaWtl& m, StateId from) {
  auto path = shortest_path(m, from, [&](StateId q) { return m.is_final(q); });
  if (!path) throw Error(ErrorKind::PreconditionViolated, "automaton is not trimmed");
  return path->letters;
}

Word path_from_initial(const DfaWtl& m, StateId to) {
  auto path = shortest_path(m, m.initial(), [to](StateId q) { return q == to; });
  if (!path) throw Error(ErrorKind::PreconditionViolated, "automaton is not trimmed");
  return path->letters;
}

void append(Word& w, const Word& tail) { w.insert(w.end(), tail.begin(), tail.end()); }

}  // namespace

LinearWitness synthesize_linear_witness(const DfaWtl& m, const Trigger& trigger) {
  LinearWitness w;
  if (const auto* t1 = std::get_if<T1Trigger>(&trigger)) {
    // prefix (jumped consumed return)^i suffix: each round trip jumps once
    // over `jumped` and then reads it sequentially from s.
    w.prefix = path_from_initial(m, t1->t);
    w.pump = {t1->jumped, t1->consumed};
    append(w.pump, t1->return_path.letters);
    w.suffix = path_to_final(m, t1->t);
    w.jumps_per_iteration = 1;
    return w;
  }
  const auto& t2 = std::get<T2Trigger>(trigger);
  // prefix a cycle^i escape z: the single `a` placed up front blocks every
  // state of the cycle and the escape, so each of their letters is consumed
  // by a jump; the reader then takes `a` sequentially.
  w.prefix = path_from_initial(m, t2.base);
  w.prefix.push_back(t2.jumped);
  w.pump = t2.cycle.letters;
  w.suffix = t2.escape.letters;
  w.suffix.push_back(t2.exit_letter);
  append(w.suffix, path_to_final(m, m.next(t2.reader, t2.jumped)));
  w.jumps_per_iteration = w.pump.size();
  return w;
}

ComplexityVerdict classify(const DfaWtl& m) {
  const DfaWtl trimmed = prune(m);
  ComplexityVerdict verdict;
  std::optional<Trigger> trigger;
  if (auto t1 = t1_trigger(trimmed)) {
    trigger = std::move(*t1);
  } else if (auto t2 = t2_trigger(trimmed)) {
    trigger = std::move(*t2);
  }
  if (trigger) {
    verdict.cls = JumpClass::Linear;
    verdict.witness = synthesize_linear_witness(trimmed, *trigger);
    verdict.trigger = std::move(trigger);
  }
  return verdict;
}

WitnessCheck verify_witness(const DfaWtl& m, const LinearWitness& w, std::size_t depth,
                            std::size_t bound) {
  if (depth > bound) {
    throw Error(ErrorKind::BoundTooLarge, "verification depth " + std::to_string(depth) +
                                              " exceeds bound " + std::to_string(bound));
  }
  WitnessCheck check;
  for (std::size_t i = 1; i <= depth; ++i) {
    ++check.checked;
    auto jc = jc_word(m, w.instance(i));
    if (!jc || *jc < i * w.jumps_per_iteration) {
      check.passed = false;
      check.first_failure = i;
      break;
    }
  }
  return check;
}

}  // namespace wtl
