// Copyright 2026 The ArabKit Authors.
//
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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "arabkit/error.h"
#include "arabkit/morphology.h"
#include "arabkit/script.h"
#include "doctest.h"
#include "error_helpers.h"
#include "support.h"

using namespace arabkit;
using namespace arabkit::morph;
using arabkit::testing::CodeOf;

namespace {

MorphDictionary FromText(const std::string &text, const TagSet *tags = nullptr) {
  std::istringstream in(text);
  return MorphDictionary::Parse(in, tags);
}

const char kSmallDict[] =
    "# version: t-1\n"
    "ذهب\tذَهَبَ\tverb_perf\tذهب\t900\n"
    "ذهب\tذَهَب\tnoun\tذهب\t100\n"
    "كتب\tكَتَبَ\tverb_perf\tكتب\t50\n"
    "كتب\tكُتُب\tnoun\tكتب\t50\n";

}  // namespace

TEST_CASE("analyze picks the most frequent solution") {
  MorphDictionary dict = FromText(kSmallDict);
  CHECK(dict.version() == "t-1");
  CHECK(dict.entry_count() == 2);
  CHECK(dict.solution_count() == 4);

  TaggedToken t = Analyze("ذهب", dict);
  REQUIRE(t.solution.has_value());
  CHECK(t.solution->pos == "verb_perf");
  CHECK(t.source == Source::kExact);
  CHECK(FormatToken(t, Task::kLemma) == "ذهب\tذَهَبَ");
  CHECK(FormatToken(t, Task::kPos) == "ذهب\tverb_perf");
  CHECK(FormatToken(t, Task::kRoot) == "ذهب\tذهب");
  CHECK(FormatToken(t, Task::kFull) == "ذهب\tذَهَبَ\tverb_perf\tذهب\t900");
}

TEST_CASE("diacritized input falls back to the stripped form") {
  MorphDictionary dict = FromText(kSmallDict);
  TaggedToken t = Analyze("ذَهَبَ", dict);
  CHECK(t.source == Source::kStripped);
  CHECK(t.solution->pos == "verb_perf");
  CHECK(t.surface == "ذَهَبَ");
}

TEST_CASE("unknown words are OOV unless a fallback answers") {
  MorphDictionary dict = FromText(kSmallDict);
  TaggedToken t = Analyze("قق", dict);
  CHECK(t.source == Source::kOov);
  CHECK_FALSE(t.solution.has_value());
  CHECK(FormatToken(t, Task::kFull) == "قق\tOOV");

  struct Echo : OovFallback {
    std::optional<MorphSolution> Analyze(std::string_view word) const override {
      return MorphSolution{std::string(word), "noun", "", 0};
    }
  } echo;
  TaggedToken f = Analyze("قق", dict, &echo);
  CHECK(f.source == Source::kFallback);
  CHECK(f.solution->lemma == "قق");
  CHECK(Analyze("ذهب", dict, &echo).source == Source::kExact);
}

TEST_CASE("equal frequencies are ordered by lemma, pos and root") {
  MorphDictionary dict = FromText(kSmallDict);
  auto all = AllSolutions("كتب", dict);
  REQUIRE(all.size() == 2);
  CHECK(all[0].lemma < all[1].lemma);
  CHECK(AllSolutions("قق", dict).empty());
}

TEST_CASE("dictionary parse errors") {
  CHECK(CodeOf([] { FromText("# only a comment\n"); }) == ErrorCode::kEmptyDictionary);
  CHECK(CodeOf([] { FromText("ذهب\tذَهَبَ\tverb_perf\tذهب\n"); }) == ErrorCode::kMalformedRow);
  CHECK(CodeOf([] { FromText("ذهب\tذَهَبَ\tverb_perf\tذهب\t-3\n"); }) ==
        ErrorCode::kMalformedRow);
  CHECK(CodeOf([] { FromText("ذهب\tذَهَبَ\tverb_perf\tذهب\t9\nذهب\tذَهَبَ\tverb_perf\tذهب\t9\n"); }) ==
        ErrorCode::kDuplicateExactRow);
  CHECK(CodeOf([] { FromText("ذهب\tذَهَبَ\tnot_a_tag\tذهب\t9\n", &TagSet::Default()); }) ==
        ErrorCode::kUnknownTag);
  CHECK(CodeOf([] { MorphDictionary::Load("/nonexistent/dict.tsv"); }) ==
        ErrorCode::kResourceNotFound);
}

TEST_CASE("tag set") {
  const TagSet &tags = TagSet::Default();
  CHECK(tags.tags().size() == 40);
  CHECK(tags.CoarseTags().size() == 18);
  CHECK(tags.Contains("verb_perf"));
  CHECK(tags.Coarse("verb_imperf") == "verb");
  CHECK(CodeOf([] { TagSet::Parse("a\tb\na\tc\n"); }) == ErrorCode::kMalformedRow);
  CHECK(CodeOf([] { TagSet::Parse("# nothing\n"); }) == ErrorCode::kEmptyInput);
}

TEST_CASE("fixture dictionary loads against the default tag set") {
  auto dict = MorphDictionary::Load(testing::FixturePath("resources/morph/dictionary.tsv"),
                                    &TagSet::Default());
  CHECK(dict.version() == "fixture-1");
  auto tokens = AnalyzeText("وزارة الاقتصاد تقوم بتخفيض ضريبة الدخل في مصر", dict);
  REQUIRE(tokens.size() == 8);
  CHECK(tokens[2].solution->lemma == script::Normalize("قامَ"));
  for (const auto &t : tokens) CHECK(t.source == Source::kExact);
}

TEST_CASE("analysis agrees with a linear-scan oracle") {
  // Random dictionary over a tiny alphabet so that lookups hit often.
  std::mt19937_64 rng(31);
  const std::vector<char32_t> letters = {U'ك', U'ت', U'ب'};
  const std::vector<std::string> pos = {"noun", "verb_perf", "adj"};
  std::uniform_int_distribution<int> freq(0, 5), pick_pos(0, 2);

  struct Row {
    std::string form, lemma, pos, root;
    uint64_t freq;
  };
  std::vector<Row> rows;
  std::string text;
  std::set<std::tuple<std::string, std::string, std::string, std::string, uint64_t>> seen;
  for (int i = 0; i < 300; ++i) {
    Row r{testing::MakeRandomWord(rng, 1, 3, letters, 0.0).Text(),
          testing::MakeRandomWord(rng, 1, 3, letters, 0.0).Text(), pos[pick_pos(rng)], "ر",
          static_cast<uint64_t>(freq(rng))};
    if (!seen.insert({r.form, r.lemma, r.pos, r.root, r.freq}).second) continue;
    rows.push_back(r);
    text += r.form + "\t" + r.lemma + "\t" + r.pos + "\t" + r.root + "\t" +
            std::to_string(r.freq) + "\n";
  }
  MorphDictionary dict = FromText(text);

  for (int q = 0; q < 500; ++q) {
    auto word = testing::MakeRandomWord(rng, 1, 3, letters, 0.3);
    std::string query = word.Text();
    std::string bare = script::StripDiacritics(query);
    std::string key = query;
    bool any = std::any_of(rows.begin(), rows.end(), [&](const Row &r) { return r.form == key; });
    Source expected_source = Source::kExact;
    if (!any && bare != query) {
      key = bare;
      any = std::any_of(rows.begin(), rows.end(), [&](const Row &r) { return r.form == key; });
      expected_source = Source::kStripped;
    }
    TaggedToken t = Analyze(query, dict);
    if (!any) {
      CHECK(t.source == Source::kOov);
      continue;
    }
    // Oracle: max frequency, then lexicographically smallest (lemma, pos, root).
    const Row *best = nullptr;
    for (const auto &r : rows) {
      if (r.form != key) continue;
      if (best == nullptr || r.freq > best->freq ||
          (r.freq == best->freq &&
           std::tie(r.lemma, r.pos, r.root) < std::tie(best->lemma, best->pos, best->root))) {
        best = &r;
      }
    }
    CHECK(t.source == expected_source);
    REQUIRE(t.solution.has_value());
    CHECK(t.solution->lemma == best->lemma);
    CHECK(t.solution->pos == best->pos);
    CHECK(t.solution->frequency == best->freq);
  }
}

TEST_CASE("analyze_text yields one token per whitespace-separated word") {
  MorphDictionary dict = FromText(kSmallDict);
  CHECK(AnalyzeText("", dict).empty());
  CHECK(AnalyzeText("  ذهب \t كتب\nقق ", dict).size() == 3);
  CHECK(ParseTask("root") == Task::kRoot);
  CHECK_FALSE(ParseTask("stem").has_value());
  CHECK(SourceName(Source::kStripped) == "stripped");
}
