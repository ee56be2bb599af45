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

#include "arabkit/evaluation.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "arabkit/error.h"
#include "json.hpp"

namespace arabkit::eval {

double MicroAverage(std::span<const WeightedScore> scores) {
  if (scores.empty()) throw Error(ErrorCode::kEmptyInput, "micro average of no categories");
  double weighted = 0.0, total = 0.0;
  for (const WeightedScore &s : scores) {
    if (!(s.weight > 0.0) || !std::isfinite(s.weight)) {
      throw Error(ErrorCode::kInvalidArgument, "weights must be positive");
    }
    weighted += s.score * s.weight;
    total += s.weight;
  }
  return weighted / total;
}

PrfScores PrfFromCounts(size_t gold, size_t predicted, size_t correct) {
  if (gold == 0 && predicted == 0) return {1.0, 1.0, 1.0};
  PrfScores s;
  s.precision = predicted == 0 ? 0.0 : static_cast<double>(correct) / predicted;
  s.recall = gold == 0 ? 0.0 : static_cast<double>(correct) / gold;
  // 2c / (g + p) equals the harmonic mean and stays exact for small counts.
  s.f1 = 2.0 * static_cast<double>(correct) / static_cast<double>(gold + predicted);
  return s;
}

double CategoryCounts::accuracy() const {
  return gold == 0 ? 1.0 : static_cast<double>(correct) / static_cast<double>(gold);
}

double EvalReport::Overall() const {
  if (metric == Metric::kF1) {
    size_t g = 0, p = 0, c = 0;
    for (const auto &cat : categories) {
      g += cat.gold;
      p += cat.predicted;
      c += cat.correct;
    }
    return PrfFromCounts(g, p, c).f1;
  }
  std::vector<WeightedScore> scores;
  for (const auto &cat : categories) {
    if (cat.weight > 0.0) scores.push_back({cat.accuracy(), cat.weight});
  }
  if (scores.empty()) return 1.0;
  return MicroAverage(scores);
}

std::string FormatPercent(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", ratio * 100.0);
  return buf;
}

std::string EvalReport::FormatTable() const {
  std::ostringstream out;
  char line[256];
  if (metric == Metric::kF1) {
    std::snprintf(line, sizeof(line), "%-16s %8s %8s %8s %10s %10s %10s\n", "category",
                  "gold", "pred", "correct", "precision", "recall", "f1");
    out << line;
    for (const auto &cat : categories) {
      PrfScores s = cat.prf();
      std::snprintf(line, sizeof(line), "%-16s %8zu %8zu %8zu %10s %10s %10s\n",
                    cat.name.c_str(), cat.gold, cat.predicted, cat.correct,
                    FormatPercent(s.precision).c_str(), FormatPercent(s.recall).c_str(),
                    FormatPercent(s.f1).c_str());
      out << line;
    }
    std::snprintf(line, sizeof(line), "%-16s %8s %8s %8s %10s %10s %10s\n",
                  "overall (micro)", "", "", "", "", "", FormatPercent(Overall()).c_str());
  } else {
    std::snprintf(line, sizeof(line), "%-16s %8s %8s %8s %10s\n", "category", "gold",
                  "correct", "weight", "accuracy");
    out << line;
    for (const auto &cat : categories) {
      std::snprintf(line, sizeof(line), "%-16s %8zu %8zu %8.0f %10s\n", cat.name.c_str(),
                    cat.gold, cat.correct, cat.weight,
                    FormatPercent(cat.accuracy()).c_str());
      out << line;
    }
    std::snprintf(line, sizeof(line), "%-16s %8s %8s %8s %10s\n", "overall (micro)", "",
                  "", "", FormatPercent(Overall()).c_str());
  }
  out << line;
  return out.str();
}

std::string EvalReport::FormatRecords() const {
  std::ostringstream out;
  for (const auto &cat : categories) {
    nlohmann::json rec = {{"category", cat.name},
                          {"gold", cat.gold},
                          {"predicted", cat.predicted},
                          {"correct", cat.correct}};
    if (metric == Metric::kF1) {
      PrfScores s = cat.prf();
      rec["precision"] = s.precision;
      rec["recall"] = s.recall;
      rec["f1"] = s.f1;
    } else {
      rec["weight"] = cat.weight;
      rec["accuracy"] = cat.accuracy();
    }
    out << rec.dump() << '\n';
  }
  nlohmann::json overall = {{"category", "overall"},
                            {metric == Metric::kF1 ? "f1" : "accuracy", Overall()}};
  out << overall.dump() << '\n';
  return out.str();
}

}  // namespace arabkit::eval
