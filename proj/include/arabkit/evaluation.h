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

#ifndef ARABKIT_EVALUATION_H_
#define ARABKIT_EVALUATION_H_

#include <span>
#include <string>
#include <vector>

namespace arabkit::eval {

struct WeightedScore {
  double score = 0.0;
  double weight = 0.0;
};

// sum(weight * score) / sum(weight). Weights must be positive.
// Throws Error(kEmptyInput | kInvalidArgument).
double MicroAverage(std::span<const WeightedScore> scores);

struct PrfScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Precision/recall/F1 from exact-match counts. No gold and no predictions is
// a perfect score; an empty side against a non-empty one scores 0.
PrfScores PrfFromCounts(size_t gold, size_t predicted, size_t correct);

enum class Metric { kF1, kAccuracy };

struct CategoryCounts {
  std::string name;
  size_t gold = 0;
  size_t predicted = 0;
  size_t correct = 0;
  // Weight used for micro-averaging accuracies, e.g. a token count.
  double weight = 0.0;

  PrfScores prf() const { return PrfFromCounts(gold, predicted, correct); }
  // correct / gold; 1 when there is nothing to get right.
  double accuracy() const;
};

struct EvalReport {
  Metric metric = Metric::kF1;
  std::vector<CategoryCounts> categories;

  // F1: pooled counts over all categories. Accuracy: weight-averaged.
  double Overall() const;

  std::string FormatTable() const;
  // One JSON object per line: categories first, then the overall row.
  std::string FormatRecords() const;
};

// "82.63%"
std::string FormatPercent(double ratio);

}  // namespace arabkit::eval

#endif  // ARABKIT_EVALUATION_H_
