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

#ifndef ARABKIT_RELATEDNESS_H_
#define ARABKIT_RELATEDNESS_H_

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arabkit::relatedness {

using Vector = std::vector<double>;

// Produces one vector per token of a sentence. Implementations must be
// deterministic and safe for concurrent Embed calls.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual size_t dimension() const = 0;
  virtual std::vector<Vector> Embed(std::string_view sentence) const = 0;
};

// Default provider: each whitespace token (diacritics stripped, wrapped in
// '<' '>') contributes its character trigrams, hashed with 64-bit FNV-1a into
// `dimension` buckets. The top hash bit picks the sign.
class HashedNgramProvider : public EmbeddingProvider {
 public:
  static constexpr size_t kDefaultDimension = 256;
  static constexpr size_t kNgramOrder = 3;

  explicit HashedNgramProvider(size_t dimension = kDefaultDimension);

  size_t dimension() const override { return dimension_; }
  std::vector<Vector> Embed(std::string_view sentence) const override;

 private:
  size_t dimension_;
};

// Componentwise mean. Throws Error(kEmptyInput | kDimensionMismatch).
Vector MeanPool(std::span<const Vector> vectors);

// dot(a, b) / (|a| |b|), clamped to [-1, 1].
// Throws Error(kZeroVector | kDimensionMismatch).
double Cosine(std::span<const double> a, std::span<const double> b);

struct SentencePair {
  std::string first;
  std::string second;
  std::optional<double> gold;
};

// Raw cosine of the mean-pooled sentence embeddings, in [-1, 1].
// Throws Error(kEmptySentence) when a sentence has no tokens.
double Relatedness(const SentencePair &pair, const EmbeddingProvider &provider);

// Maps a raw cosine in [-1, 1] onto [0, 1].
inline double Rescale(double cosine) { return (cosine + 1.0) / 2.0; }

// 1-based ranks; tied values share the mean of their positions.
std::vector<double> AverageRanks(std::span<const double> values);

// Pearson correlation of average ranks.
// Throws Error(kLengthMismatch | kDegenerateConstantInput | kInvalidArgument).
double Spearman(std::span<const double> gold, std::span<const double> predicted);

// Reads `s1<TAB>s2[<TAB>gold]` lines. Blank lines are skipped.
// Throws Error(kMalformedRow) with the line number.
std::vector<SentencePair> ReadPairs(std::istream &in);

}  // namespace arabkit::relatedness

#endif  // ARABKIT_RELATEDNESS_H_
