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
#include <random>
#include <vector>

#include "arabkit/error.h"
#include "arabkit/evaluation.h"
#include "doctest.h"
#include "json.hpp"

using namespace arabkit;
using namespace arabkit::eval;

TEST_CASE("micro average reproduces the published overall score") {
  std::vector<WeightedScore> rows = {{0.8531, 4389}, {0.8892, 2100}, {0.8173, 27764}};
  double overall = MicroAverage(rows);
  CHECK(overall == doctest::Approx(0.8263).epsilon(0.0001));
  CHECK(FormatPercent(overall) == "82.63%");
}

TEST_CASE("micro average trivial cases and errors") {
  CHECK(MicroAverage(std::vector<WeightedScore>{{0.7, 3}}) == doctest::Approx(0.7));
  CHECK(MicroAverage(std::vector<WeightedScore>{{0.4, 1}, {0.4, 99}}) == doctest::Approx(0.4));
  CHECK_THROWS_AS(MicroAverage(std::vector<WeightedScore>{}), Error);
  CHECK_THROWS_AS(MicroAverage(std::vector<WeightedScore>{{0.5, 0}}), Error);
  CHECK_THROWS_AS(MicroAverage(std::vector<WeightedScore>{{0.5, -1}}), Error);
}

TEST_CASE("micro average is bounded and order independent") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> score(0, 1), weight(0.1, 1000);
  for (int rep = 0; rep < 500; ++rep) {
    std::vector<WeightedScore> rows(1 + rep % 7);
    for (auto &r : rows) r = {score(rng), weight(rng)};
    double m = MicroAverage(rows);
    auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(), [](auto &a, auto &b) {
      return a.score < b.score;
    });
    CHECK(m >= lo->score - 1e-15);
    CHECK(m <= hi->score + 1e-15);
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(std::abs(MicroAverage(rows) - m) <= 1e-12);
  }
}

TEST_CASE("precision recall f1 from counts") {
  PrfScores s = PrfFromCounts(2, 1, 1);
  CHECK(s.precision == 1.0);
  CHECK(s.recall == 0.5);
  CHECK(s.f1 == doctest::Approx(2.0 / 3.0));
  CHECK(PrfFromCounts(0, 0, 0).f1 == 1.0);
  CHECK(PrfFromCounts(3, 0, 0).f1 == 0.0);
  CHECK(PrfFromCounts(0, 3, 0).f1 == 0.0);
}

TEST_CASE("report formatting") {
  EvalReport report;
  report.metric = Metric::kAccuracy;
  report.categories = {{"ner", 10, 10, 8, 12}, {"singleword", 4, 4, 4, 4}};
  CHECK(report.Overall() == doctest::Approx((0.8 * 12 + 1.0 * 4) / 16));
  std::string table = report.FormatTable();
  CHECK(table.find("80.00%") != std::string::npos);
  CHECK(table.find("overall (micro)") != std::string::npos);
  std::istringstream records(report.FormatRecords());
  std::string line;
  int count = 0;
  while (std::getline(records, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("category"));
    ++count;
  }
  CHECK(count == 3);

  EvalReport f1;
  f1.categories = {{"PERS", 2, 1, 1, 2}, {"ORG", 1, 1, 1, 1}};
  CHECK(f1.Overall() == doctest::Approx(2.0 * 2 / 5));
}
