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

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arabkit/error.h"
#include "arabkit/relatedness.h"
#include "doctest.h"
#include "error_helpers.h"
#include "support.h"

using namespace arabkit;
using arabkit::testing::CodeOf;
using namespace arabkit::relatedness;

TEST_CASE("mean_pool examples and errors") {
  Vector v = {1.5, -2.0, 3.0};
  CHECK(MeanPool(std::vector<Vector>{v}) == v);
  CHECK(MeanPool(std::vector<Vector>{{1, 0}, {0, 1}}) == Vector{0.5, 0.5});
  CHECK(CodeOf([] { MeanPool(std::vector<Vector>{}); }) == ErrorCode::kEmptyInput);
  CHECK(CodeOf([] { MeanPool(std::vector<Vector>{{1, 2}, {1}}); }) ==
        ErrorCode::kDimensionMismatch);
}

TEST_CASE("mean_pool matches a summation oracle") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> g;
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Vector> vs(3, Vector(17));
    for (auto &v : vs) {
      for (auto &x : v) x = g(rng);
    }
    Vector mean = MeanPool(vs);
    for (size_t i = 0; i < 17; ++i) {
      long double sum = 0;
      for (const auto &v : vs) sum += v[i];
      CHECK(std::fabs(mean[i] - static_cast<double>(sum / 3)) <= 1e-12);
    }
  }
}

TEST_CASE("cosine examples") {
  Vector v = {0.3, -1.2, 4.0};
  CHECK(Cosine(v, v) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(Cosine(v, v) <= 1.0);
  CHECK(Cosine(Vector{1, 0}, Vector{0, 1}) == 0.0);
  CHECK(Cosine(Vector{1, 1}, Vector{1, 0}) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
  CHECK(Cosine(Vector{1, 2}, Vector{-1, -2}) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(Cosine(Vector{1, 2}, Vector{-1, -2}) >= -1.0);
  CHECK(CodeOf([] { Cosine(Vector{0, 0}, Vector{1, 0}); }) == ErrorCode::kZeroVector);
  CHECK(CodeOf([] { Cosine(Vector{1}, Vector{1, 0}); }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("cosine is scale invariant and bounded") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int rep = 0; rep < 500; ++rep) {
    Vector a(9), b(9);
    for (auto &x : a) x = g(rng);
    for (auto &x : b) x = g(rng);
    double c = Cosine(a, b);
    CHECK(c >= -1.0);
    CHECK(c <= 1.0);
    Vector sa = a;
    double k = scale(rng);
    for (auto &x : sa) x *= k;
    CHECK(Cosine(sa, b) == doctest::Approx(c).epsilon(1e-12));
    long double dot = 0, na = 0, nb = 0;
    for (size_t i = 0; i < 9; ++i) {
      dot += static_cast<long double>(a[i]) * b[i];
      na += static_cast<long double>(a[i]) * a[i];
      nb += static_cast<long double>(b[i]) * b[i];
    }
    CHECK(std::fabs(c - static_cast<double>(dot / std::sqrt(na * nb))) < 1e-12);
  }
}

TEST_CASE("relatedness with the hashed provider") {
  HashedNgramProvider provider;
  CHECK(provider.dimension() == 256);
  SentencePair same{"ذهب الولد إلى المدرسة", "ذهب الولد إلى المدرسة", std::nullopt};
  CHECK(Relatedness(same, provider) == doctest::Approx(1.0).epsilon(1e-15));
  SentencePair p{"ذهب الولد إلى المدرسة", "ذهب الطفل إلى المدرسة", std::nullopt};
  SentencePair q{p.second, p.first, std::nullopt};
  CHECK(Relatedness(p, provider) == Relatedness(q, provider));
  CHECK(Relatedness(p, provider) > Relatedness({p.first, "أكلت القطة السمك", {}}, provider));
  // diacritics are ignored
  CHECK(Relatedness({"ذَهَبَ", "ذهب", {}}, provider) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(CodeOf([&] { Relatedness({"   ", "ذهب", {}}, provider); }) ==
        ErrorCode::kEmptySentence);
  CHECK(CodeOf([] { HashedNgramProvider bad(0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("hashed provider matches a from-scratch recomputation") {
  // FNV-1a 64 over the UTF-8 bytes of each codepoint trigram of "<token>".
  auto fnv = [](const std::string &s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  };
  HashedNgramProvider provider(64);
  auto vectors = provider.Embed("كتب");
  REQUIRE(vectors.size() == 1);
  std::vector<std::string> grams = {"<كت", "كتب", "تب>"};
  Vector expected(64, 0.0);
  for (const auto &gram : grams) {
    uint64_t h = fnv(gram);
    expected[h % 64] += (h >> 63) ? -1.0 : 1.0;
  }
  CHECK(vectors[0] == expected);
}

TEST_CASE("spearman examples") {
  CHECK(Spearman(std::vector<double>{1, 2, 3, 4}, std::vector<double>{10, 20, 30, 40}) == 1.0);
  CHECK(Spearman(std::vector<double>{1, 2, 3, 4}, std::vector<double>{4, 3, 2, 1}) == -1.0);
  CHECK(Spearman(std::vector<double>{1, 2, 3, 4}, std::vector<double>{1, 3, 2, 4}) == 0.8);
  CHECK(CodeOf([] { Spearman(std::vector<double>{1, 2}, std::vector<double>{1}); }) ==
        ErrorCode::kLengthMismatch);
  CHECK(CodeOf([] { Spearman(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}); }) ==
        ErrorCode::kDegenerateConstantInput);
  CHECK(CodeOf([] { Spearman(std::vector<double>{1}, std::vector<double>{1}); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("average ranks") {
  CHECK(AverageRanks(std::vector<double>{10, 20, 20, 5}) == std::vector<double>{2, 3.5, 3.5, 1});
}

TEST_CASE("spearman against the pairwise oracle and monotone invariance") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> len(2, 30);
  std::uniform_int_distribution<int> small(0, 5);
  for (int rep = 0; rep < 300; ++rep) {
    int n = len(rng);
    std::vector<double> a(n), b(n);
    for (auto &x : a) x = small(rng);
    for (auto &x : b) x = small(rng);
    if (testing::CountingRanks(a) == std::vector<double>(n, (n + 1) / 2.0) ||
        testing::CountingRanks(b) == std::vector<double>(n, (n + 1) / 2.0)) {
      continue;
    }
    double rho = Spearman(a, b);
    CHECK(std::fabs(rho - testing::PairwiseSpearman(a, b)) < 1e-9);
    std::vector<double> ta(n);
    for (int i = 0; i < n; ++i) ta[i] = std::exp(a[i]) * 3 - 7;
    CHECK(std::fabs(Spearman(ta, b) - rho) < 1e-12);
  }
}

TEST_CASE("pair file reader") {
  std::istringstream in("أ\tب\t0.5\nج\tد\n\n");
  auto pairs = ReadPairs(in);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].gold == 0.5);
  CHECK_FALSE(pairs[1].gold.has_value());
  std::istringstream bad_gold("أ\tب\t1.5\n");
  CHECK(CodeOf([&] { ReadPairs(bad_gold); }) == ErrorCode::kMalformedRow);
  std::istringstream bad_fields("أ\n");
  CHECK(CodeOf([&] { ReadPairs(bad_fields); }) == ErrorCode::kMalformedRow);
  CHECK(Rescale(-1.0) == 0.0);
  CHECK(Rescale(1.0) == 1.0);
}
