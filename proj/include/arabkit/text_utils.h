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

#ifndef ARABKIT_TEXT_UTILS_H_
#define ARABKIT_TEXT_UTILS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arabkit::text {

// Sentence splitting.

struct SplitConfig {
  bool period = false;        // . and ۔
  bool question = false;      // ? and ؟
  bool exclamation = false;   // !
  bool line_break = false;    // \n and \r
  std::u32string custom;      // any further separator codepoints
  bool attach_separator = true;

  bool empty() const {
    return !period && !question && !exclamation && !line_break && custom.empty();
  }
  bool IsSeparator(char32_t cp) const;
};

// Splits at the selected separators only. A run of consecutive separators
// stays with the sentence it ends. Segments are whitespace-trimmed and empty
// segments are dropped. Throws Error(kEmptySeparatorSet).
std::vector<std::string> SplitSentences(std::string_view text,
                                        const SplitConfig &config);

// Diacritic-aware word matching.

enum class Relation { kIdentical, kCompatible, kIncompatible };

std::string_view RelationName(Relation relation);

struct MatchVerdict {
  Relation relation = Relation::kIdentical;
  std::optional<size_t> first_conflict;
};

// Two words are compatible when their base-letter skeletons agree and at
// every position the vowel marks unify (either side unmarked, or the same
// mark). Shaddah never conflicts on its own.
MatchVerdict MatchWords(std::string_view first, std::string_view second);

// Jaccard over word sets.

enum class JaccardMode { kExact, kDiacriticAware };

struct JaccardReport {
  size_t union_size = 0;
  size_t intersection_size = 0;
  double similarity = 0.0;
};

// In diacritic-aware mode the distinct words of both sets are clustered
// greedily: words are visited in byte order of their normalized form and each
// joins the first cluster whose founding word it does not contradict. Union
// counts clusters; intersection counts clusters holding words from both sets.
// Two empty sets have similarity 1.
JaccardReport Jaccard(const std::vector<std::string> &first,
                      const std::vector<std::string> &second, JaccardMode mode);

// Duplicate removal.

inline constexpr double kDefaultDedupThreshold = 0.8;

// Cosine of whitespace-token count vectors, after diacritics are stripped.
// A sentence with no tokens has cosine 0 with everything.
double SentenceCosine(std::string_view first, std::string_view second);

// Keeps a sentence unless its cosine with some already-kept sentence is at
// least `threshold`. Thresholds above 1 keep everything.
// Throws Error(kInvalidThreshold) for negative or NaN thresholds.
std::vector<std::string> RemoveDuplicates(const std::vector<std::string> &sentences,
                                          double threshold);

}  // namespace arabkit::text

#endif  // ARABKIT_TEXT_UTILS_H_
