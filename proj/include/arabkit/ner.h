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

#ifndef ARABKIT_NER_H_
#define ARABKIT_NER_H_

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arabkit/evaluation.h"

namespace arabkit::ner {

enum class Iob : std::uint8_t { kB, kI, kO };

char IobChar(Iob label);

// Ordered, duplicate-free list of entity type names. The order doubles as the
// tie-break order for flat projection.
class EntityTypeSet {
 public:
  // One type name per line; '#' starts a comment line. Throws
  // Error(kMalformedRow) on duplicates and Error(kEmptyInput) when empty.
  static EntityTypeSet Parse(std::string_view text);
  explicit EntityTypeSet(std::vector<std::string> names);

  // The 21-type pack compiled into the library.
  static const EntityTypeSet &Default();

  std::optional<size_t> IndexOf(std::string_view name) const;
  bool Contains(std::string_view name) const { return IndexOf(name).has_value(); }
  const std::vector<std::string> &names() const { return names_; }
  size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
};

// One IOB row per entity type, each as long as the token list.
struct LabelMatrix {
  std::vector<std::string> tokens;
  std::vector<std::string> types;
  std::vector<std::vector<Iob>> labels;  // labels[type][token]

  // An all-O matrix.
  static LabelMatrix Empty(std::vector<std::string> tokens, std::vector<std::string> types);
  bool Valid() const;
};

struct EntitySpan {
  size_t start = 0;  // inclusive token index
  size_t end = 0;    // exclusive token index
  std::string type;

  size_t length() const { return end - start; }
  bool Overlaps(const EntitySpan &other) const {
    return start < other.end && other.start < end;
  }
  auto operator<=>(const EntitySpan &) const = default;
};

using TokenRange = std::pair<size_t, size_t>;

// Maximal B I* runs. An I that opens no span is read as B.
std::vector<TokenRange> DecodeIob(std::span<const Iob> row);

// Per-type decoding; spans of different types may overlap. Sorted by
// (start, end, type).
std::vector<EntitySpan> DecodeMatrix(const LabelMatrix &matrix);

// Greedy non-overlapping subset: longer spans first, then earlier start, then
// type order (types missing from `order` come last, by name). Sorted by start.
std::vector<EntitySpan> ProjectFlat(std::vector<EntitySpan> spans,
                                    const EntityTypeSet &order = EntityTypeSet::Default());

inline constexpr size_t kMaxGazetteerNgram = 5;

// Surface n-gram (1..5 whitespace tokens) -> entity types.
class Gazetteer {
 public:
  // Reads `surface n-gram<TAB>type` lines. When `types` is given every type
  // must belong to it. Throws Error(kMalformedRow | kUnknownTag).
  static Gazetteer Parse(std::istream &in, const EntityTypeSet *types = nullptr);

  void Add(std::string_view surface, std::string_view type);

  bool Contains(std::span<const std::string> ngram, std::string_view type) const;
  std::vector<std::string> Types() const;
  size_t size() const { return size_; }

 private:
  // type -> set of normalized token sequences
  std::map<std::string, std::set<std::vector<std::string>>, std::less<>> entries_;
  size_t size_ = 0;
};

// Greedy longest-match, left to right, independently for every type in
// `types`. Matched n-grams are labelled B I ...; everything else O.
LabelMatrix TagGazetteer(const std::vector<std::string> &tokens, const Gazetteer &gazetteer,
                         const EntityTypeSet &types = EntityTypeSet::Default());

// Classifier seam: one IOB row per type for a token sequence. Failures are
// reported as Error(kTaggerFailure).
class EntityTagger {
 public:
  virtual ~EntityTagger() = default;
  virtual LabelMatrix Classify(const std::vector<std::string> &tokens) const = 0;
};

class GazetteerTagger : public EntityTagger {
 public:
  GazetteerTagger(Gazetteer gazetteer, EntityTypeSet types = EntityTypeSet::Default());
  LabelMatrix Classify(const std::vector<std::string> &tokens) const override;

 private:
  Gazetteer gazetteer_;
  EntityTypeSet types_;
};

// Per-layer argmax over (B, I, O) scores; distributions[type][token]. Ties
// prefer O, then B, then I.
using LabelScores = std::array<double, 3>;
LabelMatrix ReduceArgmax(std::vector<std::string> tokens, std::vector<std::string> types,
                         const std::vector<std::vector<LabelScores>> &distributions);

struct SpanCounts {
  size_t gold = 0;
  size_t predicted = 0;
  size_t correct = 0;

  SpanCounts &operator+=(const SpanCounts &other);
};

// Exact (start, end, type) matching, counted as a multiset intersection.
SpanCounts CountSpanMatches(std::span<const EntitySpan> gold,
                            std::span<const EntitySpan> predicted);

eval::PrfScores SpanF1(std::span<const EntitySpan> gold, std::span<const EntitySpan> predicted);

// Span files: `start<TAB>end<TAB>type` per line; every blank line ends a
// sentence block (so an empty sentence is a lone blank line).
std::vector<std::vector<EntitySpan>> ReadSpanBlocks(std::istream &in);
void WriteSpanBlock(std::ostream &out, std::span<const EntitySpan> spans);

// Label files: `token<TAB>tags` per line, tags being space-separated B-TYPE /
// I-TYPE items or O; every blank line ends a sentence.
std::vector<LabelMatrix> ReadLabelBlocks(std::istream &in, const EntityTypeSet &types);
void WriteLabelBlock(std::ostream &out, const LabelMatrix &matrix);

}  // namespace arabkit::ner

#endif  // ARABKIT_NER_H_
