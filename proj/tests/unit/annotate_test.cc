// Copyright 2026 The amongus-sim Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "amongus/annotate/classifier.h"
#include "amongus/annotate/labels.h"
#include "amongus/annotate/prompts.h"
#include "amongus/annotate/reliability.h"
#include "amongus/core/json_io.h"
#include "support.h"

namespace amongus {
namespace {

// Variants a model reply may take; every one must map to the canonical name.
std::vector<std::string> variants(const std::string& name) {
  std::string lower = name, upper = name;
  for (auto& c : lower) c = static_cast<char>(std::tolower(c));
  for (auto& c : upper) c = static_cast<char>(std::toupper(c));
  const std::string singular = name.substr(0, name.size() - (name.back() == 's' ? 1 : 0));
  std::string singular_lower = singular;
  for (auto& c : singular_lower) c = static_cast<char>(std::tolower(c));
  std::vector<std::string> out;
  for (const auto& base : {name, lower, upper, singular, singular_lower}) {
    for (const auto& wrap :
         std::vector<std::pair<std::string, std::string>>{
             {"", ""}, {"", " "}, {" ", ""}, {"\n", "\n"}, {"", "."}, {"", "!"},
             {"", ","}, {"", ":"}, {"\"", "\""}, {"'", "'"}, {"**", "**"}, {"`", "`"},
             {"", " (gloss)"}, {"  \"", ".\"\n"}}) {
      out.push_back(wrap.first + base + wrap.second);
    }
  }
  return out;
}

TEST(Normalize, EveryDocumentedVariantOfEveryLabel) {
  int checked = 0;
  for (auto label : kAllSpeechActs) {
    for (const auto& v : variants(label_name(label))) {
      EXPECT_EQ(parse_speech_act(v), label) << "[" << v << "]";
      EXPECT_EQ(normalize_label(v), label_name(label)) << "[" << v << "]";
      ++checked;
    }
  }
  for (auto label : {DeceptionLabel::kFalsification, DeceptionLabel::kConcealment,
                     DeceptionLabel::kEquivocation}) {
    for (const auto& v : variants(label_name(label))) {
      EXPECT_EQ(parse_deception(v), label) << "[" << v << "]";
      EXPECT_EQ(normalize_label(v), label_name(label)) << "[" << v << "]";
      ++checked;
    }
  }
  EXPECT_EQ(checked, 8 * 5 * 14);
}

TEST(Normalize, SpecVariants) {
  for (const char* v : {"directive", "Directives", "DIRECTIVE "}) {
    EXPECT_EQ(normalize_label(v), "Directives") << v;
  }
}

TEST(Normalize, NonLabelsDoNotMatch) {
  for (const char* v : {"", "banana", "Directives and Representatives", "Not a directive",
                        "Direct", "Representative of the crew", "Lying", "s"}) {
    EXPECT_EQ(parse_speech_act(v), std::nullopt) << v;
    EXPECT_EQ(parse_deception(v), DeceptionLabel::kMissing) << v;
    EXPECT_EQ(normalize_label(v), "") << v;
  }
}

TEST(Normalize, Idempotent) {
  std::mt19937_64 rng(31);
  const std::string alphabet = "DirectvsRpnamoqulfEFC .!*'\"()";
  std::vector<std::string> inputs;
  for (auto l : kAllSpeechActs) {
    for (const auto& v : variants(label_name(l))) inputs.push_back(v);
  }
  for (int i = 0; i < 2000; ++i) {
    std::string s(rng() % 16, ' ');
    for (auto& c : s) c = alphabet[rng() % alphabet.size()];
    inputs.push_back(s);
  }
  for (const auto& s : inputs) {
    const auto once = normalize_label(s);
    EXPECT_EQ(normalize_label(once), once) << s;
  }
}

TEST(RuleBackend, SpecExamples) {
  RuleClassifier rules;
  auto act = [&](const char* text) {
    auto r = classify_speech_act(text, rules);
    return r.label ? std::string(label_name(*r.label)) : std::string("none");
  };
  EXPECT_EQ(act("Let's all check Electrical next."), "Directives");
  EXPECT_EQ(act("I saw Red in Storage right before the report."), "Representatives");
  EXPECT_EQ(act("Let's vote Blue."), "Directives");
  EXPECT_EQ(act("I'll finish my tasks after this meeting."), "Commissives");
  EXPECT_EQ(act("Sorry, I didn't notice the body."), "Expressives");
  EXPECT_EQ(act("I hereby declare this meeting open."), "Declarations");
  EXPECT_EQ(act("Hmm."), "Directives");
  auto dec = [&](const char* text) {
    return std::string(label_name(classify_deception(text, "", rules)));
  };
  EXPECT_EQ(dec("I was in Medbay the whole time"), "Falsification");
  EXPECT_EQ(dec("I was near Storage earlier, but I didn't really see what happened."),
            "Equivocation");
  EXPECT_EQ(dec("Nothing to report from me."), "Concealment");
}

TEST(RuleBackend, ExpressiveWordsMatchWholeWords) {
  RuleClassifier rules;
  auto r = classify_speech_act("I saw Blue, though, in Admin.", rules);
  ASSERT_TRUE(r.label);
  EXPECT_EQ(*r.label, SpeechActLabel::kRepresentatives);
}

// Replies with whatever the test says, so backend failures can be staged.
class StubBackend : public ClassifierBackend {
 public:
  explicit StubBackend(std::function<std::optional<std::string>(const ClassificationItem&)> f)
      : f_(std::move(f)) {}
  std::string name() const override { return "stub"; }
  bool thread_safe() const override { return true; }
  std::optional<std::string> reply(AnnotationTask, const ClassificationItem& item,
                                   int) override {
    return f_(item);
  }

 private:
  std::function<std::optional<std::string>(const ClassificationItem&)> f_;
};

TEST(Classify, BadOrMissingRepliesMapToMarkers) {
  StubBackend banana([](const ClassificationItem&) { return std::string("banana"); });
  EXPECT_FALSE(classify_speech_act("Let's go.", banana).label);
  EXPECT_EQ(classify_deception("I was there", "", banana), DeceptionLabel::kMissing);
  StubBackend empty([](const ClassificationItem&) { return std::string(); });
  EXPECT_EQ(classify_deception("I was there", "", empty), DeceptionLabel::kMissing);
  StubBackend down([](const ClassificationItem&) { return std::nullopt; });
  EXPECT_FALSE(classify_speech_act("Let's go.", down).label);
  EXPECT_FALSE(classify_speech_act("Let's go.", down).raw);
}

TEST(Classify, NeverInventsLabels) {
  std::mt19937_64 rng(37);
  const std::vector<std::string> replies = {"Directives", "directive.", "Commissive",
                                            "foo", "", "Falsification (lying)",
                                            "Equivocation", "Missing", "Declaration!"};
  StubBackend b([&](const ClassificationItem&) { return replies[rng() % replies.size()]; });
  std::vector<ClassificationItem> items;
  for (int i = 0; i < 200; ++i) items.push_back({"k" + std::to_string(i), "text", ""});
  for (auto task : {AnnotationTask::kSpeechAct, AnnotationTask::kDeception}) {
    auto run = annotate_items(items, b, task, 1);
    EXPECT_EQ(run.labels.size(), items.size());
    for (const auto& [k, l] : run.labels) {
      if (task == AnnotationTask::kSpeechAct) {
        EXPECT_TRUE(l == kUnclassifiable || parse_speech_act(l)) << l;
      } else {
        EXPECT_TRUE(l == "Missing" || parse_deception(l) != DeceptionLabel::kMissing) << l;
      }
    }
  }
}

TEST(Prompts, PlaceholdersAreFilled) {
  const auto sa = fill_speech_act_prompt("Let's go.");
  EXPECT_NE(sa.find("Text: Let's go."), std::string::npos);
  EXPECT_EQ(sa.find("[TEXT]"), std::string::npos);
  const auto de = fill_deception_prompt("Red: hi\nBlue: hello", "I was in Admin.");
  EXPECT_NE(de.find("Discussion: Red: hi\nBlue: hello"), std::string::npos);
  EXPECT_NE(de.find("Text: I was in Admin."), std::string::npos);
  EXPECT_EQ(de.find("[DISCUSSION]"), std::string::npos);
  // Placeholder-looking text inside the utterance is not expanded again.
  const auto tricky = fill_deception_prompt("ctx", "say [DISCUSSION] please");
  EXPECT_NE(tricky.find("say [DISCUSSION] please"), std::string::npos);
}

TEST(Prompts, EmbeddedBytesMatchDataFiles) {
  EXPECT_EQ(speech_act_template(), read_text_file("data/prompts/speech_act.txt"));
  EXPECT_EQ(deception_template(), read_text_file("data/prompts/deception.txt"));
  EXPECT_NE(speech_act_template().find("Only output one word."), std::string::npos);
}

TEST(Agreement, SpecExamples) {
  auto same = agreement({"A", "B", "C"}, {"A", "B", "C"});
  EXPECT_DOUBLE_EQ(same.percent, 1.0);
  ASSERT_TRUE(same.kappa);
  EXPECT_DOUBLE_EQ(*same.kappa, 1.0);
  auto hand = agreement({"A", "A", "B", "B"}, {"A", "B", "B", "B"});
  EXPECT_DOUBLE_EQ(hand.percent, 0.75);
  ASSERT_TRUE(hand.kappa);
  EXPECT_NEAR(*hand.kappa, 0.5, 1e-12);
  auto flat = agreement({"A", "A"}, {"A", "A"});
  EXPECT_DOUBLE_EQ(flat.percent, 1.0);
  EXPECT_FALSE(flat.kappa);
  EXPECT_THROW(agreement({"A"}, {"A", "B"}), std::invalid_argument);
  EXPECT_THROW(agreement({}, {}), std::invalid_argument);
}

TEST(Agreement, SymmetricAndBounded) {
  std::mt19937_64 rng(41);
  const char* labels[] = {"A", "B", "C", "D"};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    std::vector<std::string> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = labels[rng() % 4];
      b[i] = rng() % 3 ? a[i] : labels[rng() % 4];
    }
    auto ab = agreement(a, b), ba = agreement(b, a);
    EXPECT_DOUBLE_EQ(ab.percent, ba.percent);
    EXPECT_EQ(ab.kappa.has_value(), ba.kappa.has_value());
    if (ab.kappa) {
      EXPECT_NEAR(*ab.kappa, *ba.kappa, 1e-12);
      EXPECT_GE(*ab.kappa, -1.0);
      EXPECT_LE(*ab.kappa, 1.0);
    }
    auto aa = agreement(a, a);
    EXPECT_DOUBLE_EQ(aa.percent, 1.0);
    if (aa.kappa) EXPECT_DOUBLE_EQ(*aa.kappa, 1.0);
  }
}

std::array<AnnotationRun, 3> fixture_runs(AnnotationTask task) {
  auto replay = load_replay_classifier("data/fixtures/stability_labels.jsonl");
  auto items = collect_items(testing::fixture_record());
  return {annotate_items(items, *replay, task, 1), annotate_items(items, *replay, task, 2),
          annotate_items(items, *replay, task, 3)};
}

TEST(Stability, TenItemFixture) {
  for (auto task : {AnnotationTask::kSpeechAct, AnnotationTask::kDeception}) {
    auto s = stability(fixture_runs(task));
    EXPECT_EQ(s.items, 10u);
    EXPECT_EQ(s.identical_fraction, 0.4);
    EXPECT_EQ(s.two_of_three_fraction, 0.5);
    EXPECT_EQ(s.all_differ_fraction, 0.1);
  }
}

TEST(Stability, IdenticalRuns) {
  AnnotationRun r;
  r.labels = {{"a", "Directives"}, {"b", "Expressives"}};
  auto s = stability({r, r, r});
  EXPECT_EQ(s.identical_fraction, 1.0);
  EXPECT_EQ(s.two_of_three_fraction, 0.0);
  EXPECT_EQ(s.all_differ_fraction, 0.0);
  for (double p : s.pairwise_agreement) EXPECT_EQ(p, 1.0);
}

TEST(Stability, DisjointKeysAreACoverageError) {
  AnnotationRun a, b, c;
  a.labels = {{"x", "Directives"}};
  b.labels = {{"y", "Directives"}};
  c.labels = {{"x", "Directives"}};
  try {
    stability({a, b, c});
    FAIL() << "expected CoverageError";
  } catch (const CoverageError& e) {
    EXPECT_EQ(e.missing(), (std::vector<std::string>{"x", "y"}));
  }
}

TEST(Stability, FractionsSumToOne) {
  std::mt19937_64 rng(43);
  const char* labels[] = {"A", "B", "C"};
  for (int trial = 0; trial < 200; ++trial) {
    std::array<AnnotationRun, 3> runs;
    const int n = 1 + static_cast<int>(rng() % 25);
    for (int i = 0; i < n; ++i) {
      for (auto& r : runs) r.labels["k" + std::to_string(i)] = labels[rng() % 3];
    }
    auto s = stability(runs);
    EXPECT_NEAR(s.identical_fraction + s.two_of_three_fraction + s.all_differ_fraction, 1.0,
                1e-12);
    for (double f : {s.identical_fraction, s.two_of_three_fraction, s.all_differ_fraction}) {
      EXPECT_GE(f, 0.0);
      EXPECT_LE(f, 1.0);
    }
    for (const auto& k : s.kappa) {
      if (k) {
        EXPECT_GE(*k, -1.0);
        EXPECT_LE(*k, 1.0);
      }
    }
  }
}

TEST(CollectItems, SkipsAbstentionsAndUsesMeetingContext) {
  GameConfig c;
  c.seed = 5;
  auto r = testing::play_scripted(c, {TaskPolicy::kRandomWalker, MeetingScript::kAccuser},
                                  {TaskPolicy::kHunter, MeetingScript::kSilent});
  auto items = collect_items(r);
  std::size_t spoken = 0;
  for (const auto& u : r.utterances()) spoken += !u.abstention();
  EXPECT_EQ(items.size(), spoken);
  for (const auto& item : items) EXPECT_FALSE(item.text.empty());
  auto whole = collect_items(r, DiscussionWindow::kGame);
  ASSERT_EQ(whole.size(), items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    EXPECT_GE(whole[i].discussion.size(), items[i].discussion.size());
  }
}

}  // namespace
}  // namespace amongus
