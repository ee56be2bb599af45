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

#ifndef ARABKIT_WSD_H_
#define ARABKIT_WSD_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "arabkit/evaluation.h"
#include "arabkit/morphology.h"
#include "arabkit/ner.h"

namespace arabkit::wsd {

inline constexpr size_t kMinNgram = 2;
inline constexpr size_t kMaxNgram = 5;

struct Gloss {
  std::string id;
  std::string text;

  bool operator==(const Gloss &) const = default;
};

// Multi-word (2..5 lemmas) and single-word sense inventories. Keys are
// lemma sequences compared with diacritics, shaddah and tatweel removed.
class SenseInventory {
 public:
  enum class Kind { kMultiword, kSingleword };

  // Reads `MW|SW<TAB>lemma n-gram<TAB>gloss_id<TAB>gloss text` lines.
  // Throws Error(kMalformedRow) with the line number.
  static SenseInventory Parse(std::istream &in);
  static SenseInventory Load(const std::filesystem::path &path);

  void Add(Kind kind, std::string_view lemmas, Gloss gloss);

  // nullptr when the key is absent.
  const std::vector<Gloss> *FindMultiword(std::span<const std::string> lemmas) const;
  const std::vector<Gloss> *FindSingleword(std::string_view lemma) const;

  size_t multiword_count() const { return multiword_.size(); }
  size_t singleword_count() const { return singleword_.size(); }

  static std::string Key(std::span<const std::string> lemmas);

 private:
  std::unordered_map<std::string, std::vector<Gloss>> multiword_;
  std::unordered_map<std::string, std::vector<Gloss>> singleword_;
};

struct TokenSpan {
  size_t start = 0;
  size_t end = 0;

  size_t length() const { return end - start; }
  auto operator<=>(const TokenSpan &) const = default;
};

struct NgramSpan {
  TokenSpan span;
  std::vector<std::string> lemmas;

  size_t n() const { return span.length(); }
};

// Every contiguous span with kMinNgram <= n <= min(kMaxNgram, T), ordered by
// n, then start.
std::vector<NgramSpan> GenerateNgrams(std::span<const std::string> lemmas);

struct MultiwordMatch {
  NgramSpan ngram;
  std::vector<Gloss> glosses;
};

// Longest n first, left to right within one n. A span is accepted when its
// lemma key is in the multi-word inventory and it overlaps no accepted span.
// Result is sorted by start.
std::vector<MultiwordMatch> LookupMultiword(std::span<const NgramSpan> spans,
                                            const SenseInventory &inventory);

// Target sense verification.

struct VerificationPair {
  std::string context;
  Gloss gloss;
  double positive = 0.0;
  double negative = 1.0;
};

class SenseVerifier {
 public:
  virtual ~SenseVerifier() = default;
  // Probability that `gloss` is the sense of the tokens at `target` in
  // `context`.
  virtual double PositiveProbability(std::string_view context, TokenSpan target,
                                     const Gloss &gloss) const = 0;
};

// Throws Error(kVerifierFailure) when the verifier fails or returns a value
// outside [0, 1].
VerificationPair Verify(std::string_view context, const Gloss &gloss,
                        const SenseVerifier &verifier, TokenSpan target = {});

// Lesk-style baseline: the share of the gloss's distinct lemmas that also
// occur in the context, mapped onto [epsilon, 1 - epsilon].
class OverlapVerifier : public SenseVerifier {
 public:
  static constexpr double kDefaultEpsilon = 0.01;

  explicit OverlapVerifier(const morph::MorphDictionary *dict = nullptr,
                           double epsilon = kDefaultEpsilon);
  double PositiveProbability(std::string_view context, TokenSpan target,
                             const Gloss &gloss) const override;

  std::set<std::string> LemmaSet(std::string_view text) const;

 private:
  const morph::MorphDictionary *dict_;
  double epsilon_;
};

// Scores 1 for the gloss ids recorded as gold for (context, target) and 0
// for everything else.
class OracleVerifier : public SenseVerifier {
 public:
  void AddGold(std::string_view context, TokenSpan target, std::vector<std::string> gloss_ids);
  double PositiveProbability(std::string_view context, TokenSpan target,
                             const Gloss &gloss) const override;

 private:
  std::map<std::tuple<std::string, size_t, size_t>, std::set<std::string>> gold_;
};

// Highest positive probability; ties go to the smallest gloss id.
// Throws Error(kEmptyCandidates).
Gloss SelectSense(std::span<const VerificationPair> pairs);

// Pipeline.

enum class SpanKind { kNamedEntity, kMultiWordSense, kSingleWordSense };

std::string_view SpanKindCode(SpanKind kind);  // NE, MW, SW
std::optional<SpanKind> ParseSpanKind(std::string_view code);

struct AnnotatedSpan {
  TokenSpan span;
  SpanKind kind = SpanKind::kSingleWordSense;
  std::string payload;  // entity type or selected gloss id

  auto operator<=>(const AnnotatedSpan &) const = default;
};

struct PipelineResources {
  const SenseInventory *inventory = nullptr;
  const SenseVerifier *verifier = nullptr;
  const ner::EntityTagger *tagger = nullptr;         // optional
  const morph::MorphDictionary *dictionary = nullptr;  // optional
  const ner::EntityTypeSet *entity_types = nullptr;  // flat projection order
};

// Steps: lemmatization, n-grams, multi-word lookup, NER on the remaining
// tokens, single-word lookup for whatever is left, then verification. Tokens
// with no gloss and no entity are omitted. Sorted by start.
// Throws Error(kResourceNotFound) when the inventory or verifier is missing.
std::vector<AnnotatedSpan> Disambiguate(std::string_view sentence,
                                        const PipelineResources &resources);

// Evaluation.

struct GoldSpan {
  TokenSpan span;
  SpanKind kind = SpanKind::kSingleWordSense;
  std::vector<std::string> accepted;  // any of these payloads is correct
};

struct AnnotatedSentence {
  std::string text;
  std::vector<GoldSpan> spans;

  size_t token_count() const;
};

enum class Category { kNer, kMultiword, kSingleword, kOverall };

// Per-category accuracy. NE and MW are scored per span (exact range plus an
// accepted payload) and weighted by the tokens they cover; SW is scored per
// token. The overall row is the token-weighted micro average.
// Throws Error(kMisalignedCorpus).
eval::EvalReport EvaluateWsd(std::span<const AnnotatedSentence> gold,
                             std::span<const AnnotatedSentence> predicted);
double WsdAccuracy(std::span<const AnnotatedSentence> gold,
                   std::span<const AnnotatedSentence> predicted, Category category);

AnnotatedSentence ToAnnotatedSentence(std::string text, std::span<const AnnotatedSpan> spans);

// Annotation files: per sentence a `# text` line, then
// `start<TAB>end<TAB>NE|MW|SW<TAB>payload[|payload...]` lines; a blank line
// ends the block.
std::vector<AnnotatedSentence> ReadAnnotations(std::istream &in);
void WriteAnnotation(std::ostream &out, const AnnotatedSentence &sentence);

// Registers every MW/SW gold span of `gold` with the oracle.
void AddGoldToOracle(OracleVerifier *oracle, std::span<const AnnotatedSentence> gold);

}  // namespace arabkit::wsd

#endif  // ARABKIT_WSD_H_
