#include "wtl/sim.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <thread>

namespace wtl {

StepResult step(const DfaWtl& m, const Configuration& c) {
  if (c.remaining.empty()) {
    return Halt{m.is_final(c.state) ? Outcome::Accepted : Outcome::RejectedNonFinal};
  }
  // δ is deterministic, so the leftmost readable letter is the only move.
  for (std::size_t i = 0; i < c.remaining.size(); ++i) {
    const LetterId a = c.remaining[i];
    const StateId p = m.next(c.state, a);
    if (p == kNoState) continue;
    Moved moved;
    moved.next.state = p;
    moved.next.remaining.reserve(c.remaining.size() - 1);
    moved.next.remaining.insert(moved.next.remaining.end(), c.remaining.begin(),
                                c.remaining.begin() + static_cast<std::ptrdiff_t>(i));
    moved.next.remaining.insert(moved.next.remaining.end(),
                                c.remaining.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                c.remaining.end());
    moved.step = {i == 0 ? StepKind::Sequential : StepKind::Jump, a, i, c.state, p};
    return moved;
  }
  return Halt{Outcome::RejectedStuck};
}

namespace {

void check_letters(std::size_t num_letters, const Word& w) {
  for (LetterId a : w) {
    if (a >= num_letters) {
      throw Error(ErrorKind::LetterOutsideAlphabet, "letter index " + std::to_string(a));
    }
  }
}

// Same semantics as repeated `step`, without copying the configuration.
// Returns the jump count, or nullopt on rejection.
std::optional<std::size_t> fast_jc(const DfaWtl& m, Word tape) {
  StateId q = m.initial();
  std::size_t jumps = 0;
  while (!tape.empty()) {
    std::size_t i = 0;
    while (i < tape.size() && !m.defined(q, tape[i])) ++i;
    if (i == tape.size()) return std::nullopt;
    q = m.next(q, tape[i]);
    if (i > 0) ++jumps;
    tape.erase(tape.begin() + static_cast<std::ptrdiff_t>(i));
  }
  if (!m.is_final(q)) return std::nullopt;
  return jumps;
}

}  // namespace

Trace run(const DfaWtl& m, const Word& w) {
  check_letters(m.num_letters(), w);
  Trace trace;
  trace.input = w;
  Configuration c{m.initial(), w};
  while (true) {
    StepResult r = step(m, c);
    if (auto* halt = std::get_if<Halt>(&r)) {
      trace.outcome = halt->outcome;
      trace.last_state = c.state;
      return trace;
    }
    auto& moved = std::get<Moved>(r);
    if (moved.step.kind == StepKind::Jump) ++trace.jump_count;
    trace.steps.push_back(moved.step);
    c = std::move(moved.next);
  }
}

std::optional<std::size_t> jc_word(const DfaWtl& m, const Word& w) {
  check_letters(m.num_letters(), w);
  return fast_jc(m, w);
}

std::optional<std::size_t> min_jump_count(const Nfa& n, const Word& w) {
  if (n.has_epsilon()) {
    throw Error(ErrorKind::EpsilonArc, "jump semantics are defined for epsilon-free automata");
  }
  check_letters(n.num_letters(), w);

  using Key = std::pair<StateId, Word>;
  std::map<Key, std::size_t> dist;
  std::deque<std::pair<Key, std::size_t>> queue;
  Key start{n.initial, w};
  dist[start] = 0;
  queue.emplace_back(start, 0);

  auto relax = [&](Key key, std::size_t d, bool jump) {
    auto it = dist.find(key);
    if (it != dist.end() && it->second <= d) return;
    dist[key] = d;
    if (jump) {
      queue.emplace_back(std::move(key), d);
    } else {
      queue.emplace_front(std::move(key), d);
    }
  };

  while (!queue.empty()) {
    auto [key, d] = std::move(queue.front());
    queue.pop_front();
    if (dist[key] < d) continue;
    const auto& [q, rest] = key;
    if (rest.empty()) {
      if (n.finals[q]) return d;
      continue;
    }
    std::size_t i = 0;
    while (i < rest.size() && n.targets(q, rest[i]).empty()) ++i;
    if (i == rest.size()) continue;
    Word next = rest;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
    for (StateId p : n.targets(q, rest[i])) {
      relax({p, next}, d + (i > 0 ? 1 : 0), i > 0);
    }
  }
  return std::nullopt;
}

void for_each_word(std::size_t num_letters, std::size_t max_len,
                   const std::function<void(const Word&)>& visit) {
  Word w;
  visit(w);
  if (num_letters == 0) return;
  for (std::size_t len = 1; len <= max_len; ++len) {
    w.assign(len, 0);
    while (true) {
      visit(w);
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1 == num_letters) {
        w[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

LanguageSample enumerate_language(const DfaWtl& m, std::size_t max_len, std::size_t bound) {
  if (max_len > bound) {
    throw Error(ErrorKind::BoundTooLarge, "enumeration length " + std::to_string(max_len) +
                                              " exceeds bound " + std::to_string(bound));
  }
  LanguageSample out;
  for_each_word(m.num_letters(), max_len, [&](const Word& w) {
    if (auto jc = fast_jc(m, w)) out.emplace_back(w, *jc);
  });
  return out;
}

std::vector<std::optional<std::size_t>> jc_profile(const DfaWtl& m, std::size_t max_len,
                                                   std::size_t bound) {
  if (max_len > bound) {
    throw Error(ErrorKind::BoundTooLarge, "profile length " + std::to_string(max_len) +
                                              " exceeds bound " + std::to_string(bound));
  }
  std::vector<std::optional<std::size_t>> table(max_len + 1);
  // Lengths are independent; evaluate them on separate threads and write to
  // disjoint slots, so the result does not depend on scheduling.
  auto fill = [&](std::size_t len) {
    std::optional<std::size_t> best;
    if (len == 0) {
      if (m.is_final(m.initial())) best = 0;
      table[len] = best;
      return;
    }
    Word w(len, 0);
    while (true) {
      if (auto jc = fast_jc(m, w)) best = std::max(best.value_or(0), *jc);
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1 == m.num_letters()) {
        w[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
      ++w[i - 1];
    }
    table[len] = best;
  };
  if (m.num_letters() == 0) {
    fill(0);
    return table;
  }
  std::vector<std::thread> workers;
  for (std::size_t len = 0; len <= max_len; ++len) workers.emplace_back(fill, len);
  for (auto& t : workers) t.join();
  return table;
}

}  // namespace wtl
