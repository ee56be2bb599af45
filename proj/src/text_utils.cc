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

#include "arabkit/text_utils.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "arabkit/error.h"
#include "arabkit/script.h"
#include "arabkit/utf8.h"

namespace arabkit::text {

bool SplitConfig::IsSeparator(char32_t cp) const {
  if (period && (cp == U'.' || cp == 0x06D4)) return true;
  if (question && (cp == U'?' || cp == 0x061F)) return true;
  if (exclamation && cp == U'!') return true;
  if (line_break && (cp == U'\n' || cp == U'\r')) return true;
  return custom.find(cp) != std::u32string::npos;
}

std::vector<std::string> SplitSentences(std::string_view text,
                                        const SplitConfig &config) {
  if (config.empty()) {
    throw Error(ErrorCode::kEmptySeparatorSet, "no sentence separators selected");
  }
  std::vector<std::string> sentences;
  std::u32string cps = utf8::Decode(text);
  std::u32string current;
  auto flush = [&] {
    std::string trimmed = utf8::Trim(utf8::Encode(current));
    if (!trimmed.empty()) sentences.push_back(std::move(trimmed));
    current.clear();
  };
  size_t i = 0;
  while (i < cps.size()) {
    if (!config.IsSeparator(cps[i])) {
      current.push_back(cps[i++]);
      continue;
    }
    while (i < cps.size() && config.IsSeparator(cps[i])) {
      if (config.attach_separator) current.push_back(cps[i]);
      ++i;
    }
    flush();
  }
  flush();
  return sentences;
}

std::string_view RelationName(Relation relation) {
  switch (relation) {
    case Relation::kIdentical: return "identical";
    case Relation::kCompatible: return "compatible";
    case Relation::kIncompatible: return "incompatible";
  }
  return "";
}

MatchVerdict MatchWords(std::string_view first, std::string_view second) {
  script::SkeletonWord a = script::Decompose(first);
  script::SkeletonWord b = script::Decompose(second);
  MatchVerdict verdict;
  size_t common = std::min(a.size(), b.size());
  for (size_t i = 0; i < common; ++i) {
    const auto &pa = a.positions[i];
    const auto &pb = b.positions[i];
    bool vowel_clash = pa.marks.vowel && pb.marks.vowel && *pa.marks.vowel != *pb.marks.vowel;
    if (pa.base != pb.base || vowel_clash) {
      return {Relation::kIncompatible, i};
    }
    if (pa.marks != pb.marks) verdict.relation = Relation::kCompatible;
  }
  if (a.size() != b.size()) return {Relation::kIncompatible, common};
  return verdict;
}

namespace {

struct Cluster {
  std::string founder;
  bool from_first = false;
  bool from_second = false;
};

}  // namespace

JaccardReport Jaccard(const std::vector<std::string> &first,
                      const std::vector<std::string> &second, JaccardMode mode) {
  // word -> (in first, in second)
  std::map<std::string, std::pair<bool, bool>> words;
  for (const auto &w : first) words[script::Normalize(w)].first = true;
  for (const auto &w : second) words[script::Normalize(w)].second = true;

  if (mode == JaccardMode::kDiacriticAware) {
    // Validate every token up front so errors surface regardless of order.
    for (const auto &[word, membership] : words) script::Decompose(word);
  }

  std::vector<Cluster> clusters;
  for (const auto &[word, membership] : words) {
    Cluster *home = nullptr;
    if (mode == JaccardMode::kDiacriticAware) {
      for (Cluster &c : clusters) {
        if (MatchWords(c.founder, word).relation != Relation::kIncompatible) {
          home = &c;
          break;
        }
      }
    }
    if (home == nullptr) {
      clusters.push_back({word});
      home = &clusters.back();
    }
    home->from_first |= membership.first;
    home->from_second |= membership.second;
  }

  JaccardReport report;
  report.union_size = clusters.size();
  for (const Cluster &c : clusters) {
    if (c.from_first && c.from_second) ++report.intersection_size;
  }
  report.similarity = report.union_size == 0
                          ? 1.0
                          : static_cast<double>(report.intersection_size) /
                                static_cast<double>(report.union_size);
  return report;
}

namespace {

// Sparse term-count vector, sorted by term id.
struct CountVector {
  std::vector<std::pair<uint32_t, uint32_t>> entries;
  double squared_norm = 0.0;
};

class Vocabulary {
 public:
  CountVector Vectorize(std::string_view sentence) {
    std::map<uint32_t, uint32_t> counts;
    for (const auto &token : utf8::SplitWhitespace(script::StripDiacritics(sentence))) {
      auto [it, inserted] = ids_.emplace(token, static_cast<uint32_t>(ids_.size()));
      ++counts[it->second];
    }
    CountVector v;
    v.entries.assign(counts.begin(), counts.end());
    for (const auto &[id, count] : v.entries) {
      v.squared_norm += static_cast<double>(count) * count;
    }
    return v;
  }

 private:
  std::unordered_map<std::string, uint32_t> ids_;
};

double Cosine(const CountVector &a, const CountVector &b) {
  if (a.entries.empty() || b.entries.empty()) return 0.0;
  double dot = 0.0;
  auto ia = a.entries.begin(), ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += static_cast<double>(ia->second) * ib->second;
      ++ia;
      ++ib;
    }
  }
  // Norm products of integer counts are exact, so identical vectors give
  // exactly 1.
  double cosine = dot / std::sqrt(a.squared_norm * b.squared_norm);
  return std::min(cosine, 1.0);
}

}  // namespace

double SentenceCosine(std::string_view first, std::string_view second) {
  Vocabulary vocab;
  CountVector a = vocab.Vectorize(first);
  CountVector b = vocab.Vectorize(second);
  return Cosine(a, b);
}

std::vector<std::string> RemoveDuplicates(const std::vector<std::string> &sentences,
                                          double threshold) {
  if (std::isnan(threshold) || threshold < 0.0) {
    throw Error(ErrorCode::kInvalidThreshold,
                "threshold must be a non-negative number, got " +
                    std::to_string(threshold));
  }
  Vocabulary vocab;
  std::vector<CountVector> kept_vectors;
  std::vector<std::string> kept;
  for (const auto &sentence : sentences) {
    CountVector v = vocab.Vectorize(sentence);
    bool duplicate = std::any_of(kept_vectors.begin(), kept_vectors.end(),
                                 [&](const CountVector &k) { return Cosine(k, v) >= threshold; });
    if (duplicate) continue;
    kept_vectors.push_back(std::move(v));
    kept.push_back(sentence);
  }
  return kept;
}

}  // namespace arabkit::text
