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

#include "arabkit/relatedness.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "arabkit/error.h"
#include "arabkit/script.h"
#include "arabkit/utf8.h"
#include "arabkit/vector_kernels.h"

namespace arabkit::relatedness {

namespace {

uint64_t Fnv1a(std::string_view bytes) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace

HashedNgramProvider::HashedNgramProvider(size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "embedding dimension must be positive");
  }
}

std::vector<Vector> HashedNgramProvider::Embed(std::string_view sentence) const {
  std::vector<Vector> vectors;
  for (const std::string &token : utf8::SplitWhitespace(script::StripDiacritics(sentence))) {
    std::u32string padded = U"<" + utf8::Decode(token) + U">";
    Vector v(dimension_, 0.0);
    for (size_t i = 0; i + kNgramOrder <= padded.size(); ++i) {
      uint64_t h = Fnv1a(utf8::Encode(std::u32string_view(padded).substr(i, kNgramOrder)));
      v[h % dimension_] += (h >> 63) ? -1.0 : 1.0;
    }
    vectors.push_back(std::move(v));
  }
  return vectors;
}

Vector MeanPool(std::span<const Vector> vectors) {
  if (vectors.empty()) throw Error(ErrorCode::kEmptyInput, "mean of no vectors");
  const size_t dim = vectors.front().size();
  Vector mean(dim, 0.0);
  for (const Vector &v : vectors) {
    if (v.size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "expected dimension " + std::to_string(dim) + ", got " +
                      std::to_string(v.size()));
    }
    kernels::Accumulate(mean, v);
  }
  kernels::Divide(mean, static_cast<double>(vectors.size()));
  return mean;
}

double Cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  double aa = kernels::SquaredNorm(a);
  double bb = kernels::SquaredNorm(b);
  if (aa == 0.0 || bb == 0.0) throw Error(ErrorCode::kZeroVector, "cosine of a zero vector");
  double cosine = kernels::Dot(a, b) / (std::sqrt(aa) * std::sqrt(bb));
  return std::clamp(cosine, -1.0, 1.0);
}

double Relatedness(const SentencePair &pair, const EmbeddingProvider &provider) {
  std::vector<Vector> first = provider.Embed(pair.first);
  std::vector<Vector> second = provider.Embed(pair.second);
  if (first.empty() || second.empty()) {
    throw Error(ErrorCode::kEmptySentence,
                "sentence without tokens in pair '" + pair.first + "' / '" +
                    pair.second + "'");
  }
  Vector a = MeanPool(first);
  Vector b = MeanPool(second);
  return Cosine(a, b);
}

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t i, size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(values.size());
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share rank mean((i+1)..(j+1)).
    double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double Spearman(std::span<const double> gold, std::span<const double> predicted) {
  if (gold.size() != predicted.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(gold.size()) + " gold vs " +
                    std::to_string(predicted.size()) + " predicted scores");
  }
  if (gold.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two scores");
  }
  for (double v : gold) {
    if (std::isnan(v)) throw Error(ErrorCode::kInvalidArgument, "NaN score");
  }
  for (double v : predicted) {
    if (std::isnan(v)) throw Error(ErrorCode::kInvalidArgument, "NaN score");
  }
  std::vector<double> x = AverageRanks(gold);
  std::vector<double> y = AverageRanks(predicted);
  const double n = static_cast<double>(x.size());
  double mean = (n + 1.0) / 2.0;  // ranks always average to (n + 1) / 2
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mean, dy = y[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::kDegenerateConstantInput, "all scores equal on one side");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<SentencePair> ReadPairs(std::istream &in) {
  std::vector<SentencePair> pairs;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (utf8::Trim(line).empty()) continue;
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 2 && fields.size() != 3) {
      throw Error(ErrorCode::kMalformedRow,
                  "pair file line " + std::to_string(line_no) + ": expected 2 or 3 fields");
    }
    SentencePair pair{fields[0], fields[1], std::nullopt};
    if (fields.size() == 3) {
      size_t used = 0;
      double gold = 0.0;
      try {
        gold = std::stod(fields[2], &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != fields[2].size() || !(gold >= 0.0 && gold <= 1.0)) {
        throw Error(ErrorCode::kMalformedRow,
                    "pair file line " + std::to_string(line_no) +
                        ": gold score must be a number in [0, 1]");
      }
      pair.gold = gold;
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace arabkit::relatedness
