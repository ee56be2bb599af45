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

#ifndef ARABKIT_MORPHOLOGY_H_
#define ARABKIT_MORPHOLOGY_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace arabkit::morph {

struct MorphSolution {
  std::string lemma;
  std::string pos;
  std::string root;
  uint64_t frequency = 0;

  bool operator==(const MorphSolution &) const = default;
};

// Fine-grained POS inventory with a surjective mapping onto a coarse set.
// Parsed from `tag<TAB>coarse_tag` lines.
class TagSet {
 public:
  static TagSet Parse(std::string_view tsv);
  // The 40-tag inventory with its 18-tag reduction, compiled in.
  static const TagSet &Default();

  bool Contains(std::string_view tag) const;
  // Coarse tag for a fine tag; empty when the tag is unknown.
  std::string_view Coarse(std::string_view tag) const;

  const std::vector<std::string> &tags() const { return tags_; }
  std::vector<std::string> CoarseTags() const;

 private:
  std::vector<std::string> tags_;
  std::unordered_map<std::string, std::string> coarse_;
};

struct TransparentHash {
  using is_transparent = void;
  size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
};

// Wordform -> solutions, most frequent first. Ties are ordered by
// (lemma, pos, root). Immutable once built.
class MorphDictionary {
 public:
  // Reads `wordform<TAB>lemma<TAB>pos<TAB>root<TAB>frequency` rows. Lines
  // starting with '#' are comments; "# version: X" sets the version.
  // When `tags` is given every POS must belong to it.
  // Throws Error(kMalformedRow | kDuplicateExactRow | kEmptyDictionary |
  // kUnknownTag).
  static MorphDictionary Parse(std::istream &in, const TagSet *tags = nullptr);
  static MorphDictionary Load(const std::filesystem::path &path,
                              const TagSet *tags = nullptr);

  // Exact lookup of a normalized wordform; nullptr when absent.
  const std::vector<MorphSolution> *Find(std::string_view wordform) const;

  const std::string &version() const { return version_; }
  size_t entry_count() const { return entries_.size(); }
  size_t solution_count() const { return solution_count_; }

 private:
  std::unordered_map<std::string, std::vector<MorphSolution>, TransparentHash,
                     std::equal_to<>>
      entries_;
  std::string version_;
  size_t solution_count_ = 0;
};

enum class Task { kLemma, kPos, kRoot, kFull };
enum class Source { kExact, kStripped, kFallback, kOov };

std::string_view SourceName(Source source);
std::optional<Task> ParseTask(std::string_view name);

struct TaggedToken {
  std::string surface;
  std::optional<MorphSolution> solution;
  Source source = Source::kOov;
};

// Seam for resolving out-of-vocabulary words, e.g. with a trained tagger.
class OovFallback {
 public:
  virtual ~OovFallback() = default;
  virtual std::optional<MorphSolution> Analyze(std::string_view word) const = 0;
};

// Exact lookup, then lookup of the diacritic-stripped form, then the optional
// fallback. Always returns the head (default) solution.
TaggedToken Analyze(std::string_view word, const MorphDictionary &dict,
                    const OovFallback *fallback = nullptr);

// Whitespace tokenization followed by Analyze; one result per token.
std::vector<TaggedToken> AnalyzeText(std::string_view text, const MorphDictionary &dict,
                                     const OovFallback *fallback = nullptr);

// Every ranked solution found by the same two-step lookup; empty when OOV.
std::vector<MorphSolution> AllSolutions(std::string_view word, const MorphDictionary &dict);

// `surface<TAB>value` where value is the requested field, or
// `lemma<TAB>pos<TAB>root<TAB>frequency` for kFull; "OOV" when unresolved.
std::string FormatToken(const TaggedToken &token, Task task);

}  // namespace arabkit::morph

#endif  // ARABKIT_MORPHOLOGY_H_
