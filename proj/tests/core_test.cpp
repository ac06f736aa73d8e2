#include <gtest/gtest.h>

#include <deque>
#include <random>

#include "support.hpp"
#include "wtl/sim.hpp"

using namespace wtl;
using namespace wtl::testing;

namespace {

AutomatonDoc doc_of(const std::string& text) {
  auto parsed = parse_automaton(text);
  EXPECT_TRUE(parsed.ok());
  return *parsed.value;
}

bool has_issue(const std::vector<Issue>& issues, ErrorKind kind) {
  return std::any_of(issues.begin(), issues.end(),
                     [kind](const Issue& i) { return i.kind == kind; });
}

}  // namespace

TEST(LetterSet, BasicOperations) {
  LetterSet s;
  EXPECT_TRUE(s.empty());
  s.insert(0);
  s.insert(5);
  s.insert(63);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(5));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.members(), (std::vector<LetterId>{0, 5, 63}));
  s.erase(5);
  EXPECT_FALSE(s.contains(5));
  EXPECT_EQ(LetterSet::all(3).bits(), 7u);
  EXPECT_EQ(LetterSet::all(64).size(), 64u);
}

TEST(Validate, Fig1IsValid) {
  const DfaWtl m = fixture("fig1.wtl");
  EXPECT_EQ(m.num_states(), 2u);
  EXPECT_EQ(m.num_letters(), 2u);
  EXPECT_EQ(m.state_name(m.initial()), "q0");
  EXPECT_TRUE(m.is_final(0));
  EXPECT_FALSE(m.is_final(1));
  EXPECT_EQ(m.next(0, 0), 1u);
  EXPECT_EQ(m.next(1, 1), 0u);
  EXPECT_FALSE(m.defined(0, 1));
  EXPECT_FALSE(m.defined(1, 0));
}

TEST(Validate, NondeterminismReported) {
  auto r = validate(doc_of(
      "alphabet: a\nstates: q0 q1 q2\ninitial: q0\nfinal: q2\nq0 a q1\nq0 a q2\n"));
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].kind, ErrorKind::Nondeterministic);
  EXPECT_NE(r.issues[0].message.find("q0"), std::string::npos);
  EXPECT_EQ(r.issues[0].line, 6);
}

TEST(Validate, DuplicateLineIsNotNondeterminism) {
  auto r = validate(doc_of("alphabet: a\nstates: q0\ninitial: q0\nfinal: q0\nq0 a q0\nq0 a q0\n"));
  EXPECT_TRUE(r.ok());
}

TEST(Validate, UndeclaredFinalState) {
  auto r = validate(doc_of("alphabet: a\nstates: q0\ninitial: q0\nfinal: q7\n"));
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_issue(r.issues, ErrorKind::UnknownState));
}

TEST(Validate, ReportsEveryProblem) {
  AutomatonDoc doc;
  doc.alphabet = {"a", "b"};
  doc.states = {"q0", "q1"};
  doc.finals = {"q1"};
  doc.transitions = {{"q0", "a", "q9", 5, {1, 4, 6}}, {"qx", "b", "q1", 6, {1, 4, 6}},
                     {"q0", "c", "q1", 7, {1, 4, 6}}};
  auto r = validate(doc);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_issue(r.issues, ErrorKind::MissingInitial));
  EXPECT_TRUE(has_issue(r.issues, ErrorKind::UnknownState));
  EXPECT_TRUE(has_issue(r.issues, ErrorKind::UnknownLetter));
  for (const auto& issue : r.issues) {
    if (issue.kind == ErrorKind::UnknownLetter) EXPECT_EQ(issue.line, 7);
  }
}

TEST(Validate, EpsilonArcRejectedForDeterministic) {
  auto r = validate(doc_of(
      "alphabet: a\nstates: q0 q1\ninitial: q0\nfinal: q1\nq0 epsilon q1\n"));
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_issue(r.issues, ErrorKind::EpsilonArc));
  auto n = validate_nfa(doc_of(
      "alphabet: a\nstates: q0 q1\ninitial: q0\nfinal: q1\nq0 epsilon q1\n"));
  ASSERT_TRUE(n.ok());
  EXPECT_TRUE(n.value->has_epsilon());
}

TEST(Validate, DuplicateNames) {
  auto r = validate(doc_of("alphabet: a a\nstates: q0\ninitial: q0\nfinal: q0\n"));
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_issue(r.issues, ErrorKind::DuplicateName));
}

TEST(Validate, TooManyLetters) {
  AutomatonDoc doc;
  for (int i = 0; i < 65; ++i) doc.alphabet.push_back("l" + std::to_string(i));
  doc.states = {"q0"};
  doc.initial = "q0";
  auto r = validate(doc);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_issue(r.issues, ErrorKind::TooManyLetters));
}

TEST(Nfa, RepeatedPairsAllowed) {
  auto n = validate_nfa(doc_of(
      "alphabet: a b\nstates: q0 q1 q2\ninitial: q0\nfinal: q2\nq0 a q1\nq0 a q2\n"));
  ASSERT_TRUE(n.ok());
  EXPECT_EQ(n.value->targets(0, 0), (std::vector<StateId>{1, 2}));
  EXPECT_TRUE(accepts_classically(*n.value, {0}));
  EXPECT_FALSE(accepts_classically(*n.value, {1}));
}

TEST(Nfa, FromDfaPreservesTransitions) {
  const DfaWtl m = fixture("complete1.wtl");
  const Nfa n = Nfa::from_dfa(m);
  EXPECT_EQ(n.num_transitions(), 3u);
  EXPECT_FALSE(n.has_epsilon());
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (LetterId a = 0; a < m.num_letters(); ++a) {
      if (m.defined(q, a)) {
        EXPECT_EQ(n.targets(q, a), std::vector<StateId>{m.next(q, a)});
      } else {
        EXPECT_TRUE(n.targets(q, a).empty());
      }
    }
  }
}

TEST(Deficiency, Examples) {
  const DfaWtl fig1 = fixture("fig1.wtl");
  EXPECT_EQ(deficiency(fig1, 0).members(), std::vector<LetterId>{1});
  const DfaWtl c1 = fixture("complete1.wtl");
  EXPECT_TRUE(deficiency(c1, 0).empty());
  const DfaWtl fig3 = fixture("fig3.wtl");
  EXPECT_EQ(deficiency(fig3, *fig3.find_state("q2")).members(),
            (std::vector<LetterId>{0, 1, 2}));
  EXPECT_THROW(deficiency(fig1, 7), Error);
}

TEST(Deficiency, PartitionsTheAlphabet) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const DfaWtl m = random_dfa(rng, 5, 3);
    for (StateId q = 0; q < m.num_states(); ++q) {
      LetterSet defined;
      for (LetterId a = 0; a < m.num_letters(); ++a) {
        if (m.defined(q, a)) defined.insert(a);
      }
      const LetterSet gamma = deficiency(m, q);
      EXPECT_TRUE((gamma & defined).empty());
      EXPECT_EQ(gamma | defined, LetterSet::all(m.num_letters()));
    }
  }
}

TEST(Closure, SmallExamples) {
  Digraph cycle(2);
  cycle.add_arc(0, 1);
  cycle.add_arc(1, 0);
  const Reachability r = transitive_closure(cycle);
  for (StateId p = 0; p < 2; ++p) {
    for (StateId q = 0; q < 2; ++q) EXPECT_TRUE(r(p, q));
  }

  const Reachability fig1 = transitive_closure(digraph_of(fixture("fig1.wtl")));
  for (StateId p = 0; p < 2; ++p) {
    for (StateId q = 0; q < 2; ++q) EXPECT_TRUE(fig1(p, q));
  }

  const Reachability empty = transitive_closure(Digraph(4));
  for (StateId p = 0; p < 4; ++p) {
    for (StateId q = 0; q < 4; ++q) EXPECT_EQ(empty(p, q), p == q);
  }
}

TEST(Closure, AgreesWithBreadthFirstSearch) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    Digraph g(n);
    std::uniform_int_distribution<StateId> v(0, static_cast<StateId>(n - 1));
    std::uniform_int_distribution<std::size_t> arcs(0, 2 * n);
    for (std::size_t i = arcs(rng); i > 0; --i) g.add_arc(v(rng), v(rng));
    const auto adj = g.adjacency();
    const Reachability r = transitive_closure(g);
    for (StateId s = 0; s < n; ++s) {
      std::vector<bool> seen(n, false);
      std::deque<StateId> queue{s};
      seen[s] = true;
      while (!queue.empty()) {
        StateId u = queue.front();
        queue.pop_front();
        for (const Arc& a : adj[u]) {
          if (!seen[a.to]) {
            seen[a.to] = true;
            queue.push_back(a.to);
          }
        }
      }
      for (StateId t = 0; t < n; ++t) ASSERT_EQ(r(s, t), seen[t]) << trial << " " << s << " " << t;
    }
  }
}

TEST(Closure, TransitiveAndReflexive) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const DfaWtl m = random_dfa(rng, 7, 2);
    const Reachability r = transitive_closure(digraph_of(m));
    for (StateId p = 0; p < 7; ++p) {
      EXPECT_TRUE(r(p, p));
      for (StateId q = 0; q < 7; ++q) {
        for (StateId s = 0; s < 7; ++s) {
          if (r(p, q) && r(q, s)) EXPECT_TRUE(r(p, s));
        }
      }
    }
  }
}

TEST(Trim, Fig1Unchanged) {
  const DfaWtl m = fixture("fig1.wtl");
  EXPECT_EQ(trim(m), m);
}

TEST(Trim, IsolatedStateRemoved) {
  const DfaWtl m = dfa_from_text(
      "alphabet: a b\nstates: q0 q1 q9\ninitial: q0\nfinal: q0\nq0 a q1\nq1 b q0\n");
  const DfaWtl t = trim(m);
  EXPECT_EQ(t.num_states(), 2u);
  EXPECT_FALSE(t.find_state("q9").has_value());
  EXPECT_EQ(t, fixture("fig1.wtl"));
}

TEST(Trim, TrapRemovalCanEnlargeLanguage) {
  // q0 reads b sequentially into the trap. Once the trap is gone, b is
  // translucent at q0 and "baa" style words jump instead.
  const DfaWtl m = dfa_from_text(
      "alphabet: a b\nstates: q0 q1 trap\ninitial: q0\nfinal: q1\n"
      "q0 a q1\nq0 b trap\ntrap a trap\nq1 b q0\n");
  const DfaWtl t = trim(m);
  EXPECT_FALSE(t.find_state("trap").has_value());
  EXPECT_FALSE(trim_is_exact(m));
  EXPECT_FALSE(run(m, {1, 0, 0}).accepted());
  EXPECT_TRUE(run(t, {1, 0, 0}).accepted());
  const auto before = enumerate_language(m, 8);
  const auto after = enumerate_language(t, 8);
  EXPECT_LT(before.size(), after.size());
  for (const auto& entry : before) EXPECT_NE(std::find(after.begin(), after.end(), entry), after.end());
}

TEST(Prune, TrapBecomesDeadState) {
  const DfaWtl m = dfa_from_text(
      "alphabet: a b\nstates: q0 q1 trap\ninitial: q0\nfinal: q1\n"
      "q0 a q1\nq0 b trap\ntrap a trap\nq1 b q0\n");
  const DfaWtl p = prune(m);
  ASSERT_EQ(p.num_states(), 3u);
  EXPECT_EQ(p.state_name(2), "dead");
  EXPECT_FALSE(p.is_final(2));
  for (LetterId a = 0; a < 2; ++a) EXPECT_FALSE(p.defined(2, a));
  EXPECT_EQ(p.next(0, 1), 2u);
  EXPECT_EQ(enumerate_language(m, 8), enumerate_language(p, 8));
}

TEST(Prune, DeadNameAvoidsClashes) {
  const DfaWtl m = dfa_from_text(
      "alphabet: a\nstates: dead x\ninitial: dead\nfinal: dead\ndead a x\n");
  const DfaWtl p = prune(m);
  ASSERT_EQ(p.num_states(), 2u);
  EXPECT_EQ(p.state_name(1), "dead'");
}

TEST(Trim, EmptyLanguageGivesOneState) {
  const DfaWtl m = dfa_from_text(
      "alphabet: a\nstates: q0 q1\ninitial: q0\nfinal: \nq0 a q1\n");
  const DfaWtl t = trim(m);
  EXPECT_EQ(t.num_states(), 1u);
  EXPECT_FALSE(t.is_final(0));
  EXPECT_FALSE(t.defined(0, 0));
  EXPECT_EQ(serialize_automaton(to_doc(t)),
            "alphabet: a\nstates: q0\ninitial: q0\nfinal:\n");
}

TEST(Trim, IdempotentAndOutcomePreservingWhenExact) {
  std::mt19937_64 rng(77);
  int exact = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const DfaWtl m = random_dfa(rng, 6, 2, 0.5);
    const DfaWtl t = trim(m);
    EXPECT_EQ(trim(t), t);
    EXPECT_TRUE(trim_is_exact(t));
    const bool same = trim_is_exact(m);
    exact += same;
    for (const Word& w : all_words(2, 8)) {
      const auto before = reference_jc(m, w);
      const auto after = reference_jc(t, w);
      // Every accepting run of m survives trimming with the same jumps.
      if (before) ASSERT_EQ(after, before) << trial;
      if (same) ASSERT_EQ(run(m, w).accepted(), run(t, w).accepted()) << trial;
    }
  }
  EXPECT_GT(exact, 30);
}

TEST(Prune, PreservesEveryJumpCount) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    const DfaWtl m = random_dfa(rng, 6, 2 + trial % 2, 0.5);
    const DfaWtl p = prune(m);
    EXPECT_EQ(prune(p), p);
    if (trim_is_exact(m)) EXPECT_EQ(p, trim(m));
    for (const Word& w : all_words(m.num_letters(), m.num_letters() == 2 ? 8 : 6)) {
      ASSERT_EQ(reference_jc(m, w), reference_jc(p, w)) << trial;
      ASSERT_EQ(run(m, w).accepted(), run(p, w).accepted()) << trial;
    }
  }
}

TEST(ShortestPath, LeastLabelAmongShortest) {
  const DfaWtl m = dfa_from_text(
      "alphabet: a b\nstates: s x y t\ninitial: s\nfinal: t\n"
      "s b x\ns a y\nx a t\ny b t\n");
  const auto p = shortest_path(m, 0, [&](StateId q) { return m.is_final(q); });
  ASSERT_TRUE(p);
  EXPECT_EQ(render_word(m.letter_names(), p->letters), "ab");
  EXPECT_EQ(p->states.size(), 3u);

  const auto self = shortest_path(m, 0, [](StateId q) { return q == 0; });
  ASSERT_TRUE(self);
  EXPECT_TRUE(self->letters.empty());
  EXPECT_FALSE(shortest_path(m, 0, [](StateId q) { return q == 0; }, {}, true));
}
