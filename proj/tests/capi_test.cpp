#include <gtest/gtest.h>

#include <string>
#include <thread>

#include "json.hpp"
#include "wtl/wtl.h"

namespace {

std::string corpus(const char* name) { return std::string(WTL_CORPUS_DIR) + "/" + name; }

struct Automaton {
  wtl_automaton* m = nullptr;
  ~Automaton() { wtl_automaton_free(m); }
};

struct Report {
  wtl_report* r;
  ~Report() { wtl_report_free(r); }
};

const char* kFig1 =
    "alphabet: a b\nstates: q0 q1\ninitial: q0\nfinal: q0\nq0 a q1\nq1 b q0\n";

}  // namespace

TEST(CApi, LoadAndQuery) {
  Automaton a;
  ASSERT_EQ(wtl_automaton_from_text(kFig1, &a.m), WTL_OK);
  EXPECT_EQ(wtl_automaton_num_states(a.m), 2u);
  EXPECT_EQ(wtl_automaton_num_letters(a.m), 2u);

  int accepted = 0;
  size_t jumps = 99;
  ASSERT_EQ(wtl_accepts(a.m, "bbaa", &accepted, &jumps), WTL_OK);
  EXPECT_EQ(accepted, 1);
  EXPECT_EQ(jumps, 2u);
  ASSERT_EQ(wtl_accepts(a.m, "aab", &accepted, nullptr), WTL_OK);
  EXPECT_EQ(accepted, 0);
  ASSERT_EQ(wtl_accepts(a.m, "-", &accepted, &jumps), WTL_OK);
  EXPECT_EQ(accepted, 1);
  EXPECT_EQ(jumps, 0u);

  EXPECT_EQ(wtl_accepts(a.m, "abc", &accepted, nullptr), WTL_ERR_ARGUMENT);
  EXPECT_NE(std::string(wtl_last_error()).find("'c'"), std::string::npos);

  char* text = nullptr;
  ASSERT_EQ(wtl_automaton_to_text(a.m, &text), WTL_OK);
  EXPECT_STREQ(text, kFig1);
  wtl_string_free(text);
}

TEST(CApi, Analyses) {
  Automaton fig1;
  Automaton astar;
  Automaton twoword;
  ASSERT_EQ(wtl_automaton_from_file(corpus("fig1.wtl").c_str(), &fig1.m), WTL_OK);
  ASSERT_EQ(wtl_automaton_from_file(corpus("astar.wtl").c_str(), &astar.m), WTL_OK);
  ASSERT_EQ(wtl_automaton_from_file(corpus("twoword.wtl").c_str(), &twoword.m), WTL_OK);

  wtl_jump_class cls;
  ASSERT_EQ(wtl_classify(fig1.m, &cls), WTL_OK);
  EXPECT_EQ(cls, WTL_LINEAR);
  ASSERT_EQ(wtl_classify(astar.m, &cls), WTL_OK);
  EXPECT_EQ(cls, WTL_CONSTANT);

  int regular = -1;
  ASSERT_EQ(wtl_is_regular(fig1.m, &regular), WTL_OK);
  EXPECT_EQ(regular, 0);
  ASSERT_EQ(wtl_is_regular(astar.m, &regular), WTL_OK);
  EXPECT_EQ(regular, 1);

  wtl_equivalence eq;
  char* witness = nullptr;
  ASSERT_EQ(wtl_equivalent(twoword.m, astar.m, &eq, &witness), WTL_OK);
  EXPECT_EQ(eq, WTL_NOT_EQUAL);
  EXPECT_STREQ(witness, "ε");
  wtl_string_free(witness);
  ASSERT_EQ(wtl_equivalent(fig1.m, fig1.m, &eq, nullptr), WTL_OK);
  EXPECT_EQ(eq, WTL_NOT_APPLICABLE);
}

TEST(CApi, ErrorStatuses) {
  wtl_automaton* m = nullptr;
  EXPECT_EQ(wtl_automaton_from_text("alphabet: a\nstates: q0\nfinal: q0\n", &m), WTL_ERR_PARSE);
  EXPECT_EQ(m, nullptr);
  EXPECT_NE(std::string(wtl_last_error()).find("MissingSection"), std::string::npos);
  EXPECT_EQ(wtl_automaton_from_file("/nonexistent/file.wtl", &m), WTL_ERR_IO);
  EXPECT_EQ(wtl_automaton_from_text(nullptr, &m), WTL_ERR_ARGUMENT);

  Automaton fig3;
  ASSERT_EQ(wtl_automaton_from_file(corpus("fig3.wtl").c_str(), &fig3.m), WTL_OK);
  int regular = 0;
  EXPECT_EQ(wtl_is_regular(fig3.m, &regular), WTL_ERR_PRECONDITION);
  EXPECT_STREQ(wtl_status_string(WTL_ERR_PRECONDITION), "precondition violated");
}

TEST(CApi, LastErrorIsThreadLocal) {
  wtl_automaton* m = nullptr;
  EXPECT_EQ(wtl_automaton_from_file("/nonexistent/a.wtl", &m), WTL_ERR_IO);
  const std::string mine = wtl_last_error();
  std::thread([] {
    Automaton ok;
    EXPECT_EQ(wtl_automaton_from_text(kFig1, &ok.m), WTL_OK);
    EXPECT_STREQ(wtl_last_error(), "");
  }).join();
  EXPECT_EQ(std::string(wtl_last_error()), mine);
}

TEST(CApi, Reports) {
  wtl_options opts;
  wtl_options_init(&opts);
  EXPECT_EQ(opts.max_len, 12u);
  EXPECT_EQ(opts.verify_depth, 8u);

  Report classify{wtl_cmd_classify(corpus("fig1.wtl").c_str(), &opts)};
  ASSERT_NE(classify.r, nullptr);
  EXPECT_STREQ(wtl_report_verdict(classify.r), "Linear");
  EXPECT_EQ(wtl_report_exit_code(classify.r), 0);
  const std::string text = wtl_report_text(classify.r);
  EXPECT_NE(text.find("Linear, witness: (ε, ba, ε)\n"), std::string::npos);
  const auto json = nlohmann::json::parse(wtl_report_json(classify.r));
  EXPECT_EQ(json["command"], "classify");
  EXPECT_EQ(json["witness"]["pump"], "ba");
  EXPECT_EQ(wtl_report_artifact(classify.r), nullptr);

  Report regular{wtl_cmd_regular(corpus("astar.wtl").c_str(), nullptr)};
  EXPECT_STREQ(wtl_report_verdict(regular.r), "Regular");
  ASSERT_NE(wtl_report_artifact(regular.r), nullptr);
  Automaton nfa_as_dfa;
  EXPECT_EQ(wtl_automaton_from_text(wtl_report_artifact(regular.r), &nfa_as_dfa.m), WTL_OK);

  Report missing{wtl_cmd_classify("/nonexistent.wtl", nullptr)};
  EXPECT_EQ(wtl_report_exit_code(missing.r), 2);
  EXPECT_STREQ(wtl_report_verdict(missing.r), "Error");

  Report custom{wtl_report_error("usage", 2, "bad flag")};
  EXPECT_EQ(wtl_report_exit_code(custom.r), 2);
  EXPECT_EQ(nlohmann::json::parse(wtl_report_json(custom.r))["evidence"]["message"], "bad flag");
}
