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
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arabkit/error.h"
#include "arabkit/script.h"
#include "arabkit/text_utils.h"
#include "arabkit/utf8.h"
#include "doctest.h"
#include "support.h"

using namespace arabkit;
using namespace arabkit::text;

namespace {

SplitConfig Config(bool period, bool question, bool exclamation = false) {
  SplitConfig c;
  c.period = period;
  c.question = question;
  c.exclamation = exclamation;
  return c;
}

}  // namespace

TEST_CASE("split_sentences examples") {
  CHECK(SplitSentences("أهلا. كيف حالك؟", Config(true, true)) ==
        std::vector<std::string>{"أهلا.", "كيف حالك؟"});
  CHECK(SplitSentences("أهلا! مرحبا", Config(true, false)) ==
        std::vector<std::string>{"أهلا! مرحبا"});
  CHECK(SplitSentences("", Config(true, true)).empty());
}

TEST_CASE("split_sentences options") {
  SplitConfig detached = Config(true, true);
  detached.attach_separator = false;
  CHECK(SplitSentences("أهلا. كيف حالك؟", detached) ==
        std::vector<std::string>{"أهلا", "كيف حالك"});

  SplitConfig lines;
  lines.line_break = true;
  CHECK(SplitSentences("سطر أول\nسطر ثان\r\n\nثالث", lines) ==
        std::vector<std::string>{"سطر أول", "سطر ثان", "ثالث"});

  SplitConfig custom;
  custom.custom = U"؛";
  CHECK(SplitSentences("أ؛ ب؛ ج", custom) == std::vector<std::string>{"أ؛", "ب؛", "ج"});

  // A run of separators stays with its sentence.
  CHECK(SplitSentences("ماذا؟! حقا", Config(false, true, true)) ==
        std::vector<std::string>{"ماذا؟!", "حقا"});
  CHECK_THROWS_AS(SplitSentences("x", SplitConfig{}), Error);
}

TEST_CASE("split_sentences reconstructs the text up to whitespace") {
  std::mt19937_64 rng(3);
  const std::u32string alphabet = U"ابت ثج.؟!\n";
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 500; ++i) {
    std::u32string s;
    for (int k = 0; k < 30; ++k) s += alphabet[pick(rng)];
    std::string text = utf8::Encode(s);
    auto parts = SplitSentences(text, Config(true, true, true));
    std::string joined, squeezed;
    for (const auto &p : parts) {
      for (char32_t cp : utf8::Decode(p)) {
        if (!utf8::IsSpace(cp)) utf8::Append(&joined, cp);
      }
    }
    for (char32_t cp : s) {
      if (!utf8::IsSpace(cp)) utf8::Append(&squeezed, cp);
    }
    CHECK(joined == squeezed);
    for (const auto &p : parts) CHECK_FALSE(utf8::Trim(p).empty());
  }
}

TEST_CASE("match_words reference examples") {
  CHECK(MatchWords("فَعلَ", "فعَل").relation == Relation::kCompatible);
  MatchVerdict bad = MatchWords("فَعلَ", "فِعلَ");
  CHECK(bad.relation == Relation::kIncompatible);
  REQUIRE(bad.first_conflict.has_value());
  CHECK(*bad.first_conflict == 0);
  MatchVerdict same = MatchWords("فعل", "فعل");
  CHECK(same.relation == Relation::kIdentical);
  CHECK_FALSE(same.first_conflict.has_value());
}

TEST_CASE("match_words edge cases") {
  CHECK(MatchWords("كتب", "كتاب").relation == Relation::kIncompatible);
  CHECK(*MatchWords("كتب", "كتاب").first_conflict == 2);
  CHECK(*MatchWords("كتب", "كتبت").first_conflict == 3);
  // shaddah with a vowel against the vowel alone, and shaddah against a vowel
  CHECK(MatchWords("شَدَّ", "شَدَ").relation == Relation::kCompatible);
  CHECK(MatchWords("شدّ", "شدَ").relation == Relation::kCompatible);
  CHECK(MatchWords("شدّ", "شدّ").relation == Relation::kIdentical);
  CHECK_THROWS_AS(MatchWords("abc", "فعل"), Error);
  CHECK(RelationName(Relation::kCompatible) == "compatible");
}

TEST_CASE("match_words symmetry, reflexivity and stripping") {
  std::mt19937_64 rng(21);
  const std::vector<char32_t> small = {U'ف', U'ع', U'ل'};
  for (int i = 0; i < 3000; ++i) {
    auto a = testing::MakeRandomWord(rng, 1, 4, small, 0.5).Text();
    auto b = testing::MakeRandomWord(rng, 1, 4, small, 0.5).Text();
    MatchVerdict ab = MatchWords(a, b), ba = MatchWords(b, a);
    CHECK(ab.relation == ba.relation);
    CHECK(ab.first_conflict == ba.first_conflict);
    CHECK((ab.relation == Relation::kIdentical) == (a == b));
    CHECK(MatchWords(a, a).relation == Relation::kIdentical);
    Relation stripped = MatchWords(a, script::StripDiacritics(a)).relation;
    CHECK(stripped != Relation::kIncompatible);
    if (ab.relation == Relation::kIncompatible) CHECK(ab.first_conflict.has_value());
    if (ab.relation == Relation::kIdentical) CHECK_FALSE(ab.first_conflict.has_value());
  }
}

TEST_CASE("jaccard examples") {
  JaccardReport r = Jaccard({"فَعلَ"}, {"فعَل"}, JaccardMode::kDiacriticAware);
  CHECK(r.intersection_size == 1);
  CHECK(r.union_size == 1);
  CHECK(r.similarity == 1.0);

  JaccardReport disjoint = Jaccard({"كتب"}, {"ذهب"}, JaccardMode::kExact);
  CHECK(disjoint.intersection_size == 0);
  CHECK(disjoint.similarity == 0.0);

  std::vector<std::string> s = {"كتب", "ذهب", "قرأ"};
  CHECK(Jaccard(s, s, JaccardMode::kExact).similarity == 1.0);
  CHECK(Jaccard({}, {}, JaccardMode::kExact).similarity == 1.0);
  CHECK(Jaccard({"فَعلَ"}, {"فعَل"}, JaccardMode::kExact).similarity == 0.0);
}

TEST_CASE("jaccard exact mode matches set arithmetic") {
  std::mt19937_64 rng(8);
  const std::vector<char32_t> small = {U'ك', U'ت', U'ب'};
  for (int i = 0; i < 500; ++i) {
    std::vector<std::string> a, b;
    for (int k = 0; k < 5; ++k) a.push_back(testing::MakeRandomWord(rng, 1, 2, small, 0.0).Text());
    for (int k = 0; k < 5; ++k) b.push_back(testing::MakeRandomWord(rng, 1, 2, small, 0.0).Text());
    std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end()), inter, uni;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::inserter(inter, inter.begin()));
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(uni, uni.begin()));
    JaccardReport r = Jaccard(a, b, JaccardMode::kExact);
    CHECK(r.intersection_size == inter.size());
    CHECK(r.union_size == uni.size());
  }
}

TEST_CASE("jaccard diacritic-aware properties") {
  std::mt19937_64 rng(9);
  const std::vector<char32_t> small = {U'ف', U'ع'};
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::string> a, b;
    for (int k = 0; k < 4; ++k) a.push_back(testing::MakeRandomWord(rng, 2, 2, small, 0.4).Text());
    for (int k = 0; k < 4; ++k) b.push_back(testing::MakeRandomWord(rng, 2, 2, small, 0.4).Text());
    JaccardReport ab = Jaccard(a, b, JaccardMode::kDiacriticAware);
    JaccardReport ba = Jaccard(b, a, JaccardMode::kDiacriticAware);
    CHECK(ab.similarity == ba.similarity);
    CHECK(ab.union_size == ba.union_size);
    CHECK(ab.intersection_size <= ab.union_size);
    CHECK(ab.similarity >= 0.0);
    CHECK(ab.similarity <= 1.0);
    if (ab.union_size > 0) {
      CHECK(ab.similarity == static_cast<double>(ab.intersection_size) / ab.union_size);
    }
    CHECK(Jaccard(a, a, JaccardMode::kDiacriticAware).similarity == 1.0);
  }
}

TEST_CASE("sentence cosine against an independent count-vector oracle") {
  std::mt19937_64 rng(4);
  const std::vector<std::string> vocab = {"كتب", "ذهب", "قرأ", "ولد", "بيت", "كَتَبَ"};
  std::uniform_int_distribution<size_t> pick(0, vocab.size() - 1);
  std::uniform_int_distribution<int> len(1, 8);
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::string> a, b;
    std::string sa, sb;
    for (int k = len(rng); k > 0; --k) {
      const std::string &w = vocab[pick(rng)];
      sa += w + " ";
      a.push_back(script::StripDiacritics(w));
    }
    for (int k = len(rng); k > 0; --k) {
      const std::string &w = vocab[pick(rng)];
      sb += w + " ";
      b.push_back(script::StripDiacritics(w));
    }
    CHECK(SentenceCosine(sa, sb) == doctest::Approx(testing::TfCosine(a, b)).epsilon(1e-12));
  }
  CHECK(SentenceCosine("أ ب ج", "أ ب ج") == 1.0);
  CHECK(SentenceCosine("", "أ") == 0.0);
}

TEST_CASE("remove_duplicates examples") {
  CHECK(RemoveDuplicates({"A B", "A B", "C"}, 0.99) == std::vector<std::string>{"A B", "C"});
  CHECK(RemoveDuplicates({"A B", "C D"}, 0.5) == std::vector<std::string>{"A B", "C D"});
  CHECK(RemoveDuplicates({"A B C", "A B D"}, 0.6) == std::vector<std::string>{"A B C"});
  CHECK(RemoveDuplicates({"A B C", "A B D"}, 0.7) == std::vector<std::string>{"A B C", "A B D"});
  CHECK(RemoveDuplicates({"ذَهَبَ الولد", "ذهب الولد"}, 0.99).size() == 1);
}

TEST_CASE("remove_duplicates threshold bounds") {
  std::vector<std::string> s = {"أ ب", "ج د", "أ ب", "ه"};
  CHECK(RemoveDuplicates(s, 0.0) == std::vector<std::string>{"أ ب"});
  CHECK(RemoveDuplicates(s, 1.0000001) == s);
  CHECK(RemoveDuplicates(s, 1.5) == s);
  CHECK_THROWS_AS(RemoveDuplicates(s, -0.1), Error);
  CHECK_THROWS_AS(RemoveDuplicates(s, std::nan("")), Error);
  CHECK(kDefaultDedupThreshold == 0.8);
}

TEST_CASE("remove_duplicates is not monotone on arbitrary corpora") {
  // Dropping "a c c d d" at the lower threshold lets "c" and "d" through;
  // keeping it at the higher threshold blocks both.
  std::vector<std::string> s = {"a", "a c c d d", "c", "d"};
  CHECK(RemoveDuplicates(s, 0.3).size() == 3);
  CHECK(RemoveDuplicates(s, 0.5).size() == 2);
}
