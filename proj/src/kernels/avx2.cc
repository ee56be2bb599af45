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

#include <immintrin.h>

#include "kernels_internal.h"

#ifndef __AVX2__
#error "this file must be compiled with AVX2 enabled"
#endif

namespace arabkit::kernels {

namespace {

double HorizontalSum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d pair = _mm_add_pd(lo, hi);  // (s0 + s2, s1 + s3)
  return _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
}

double Avx2Dot(const double *a, const double *b, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, prod);
  }
  double r = HorizontalSum(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double Avx2SquaredNorm(const double *a, size_t n) { return Avx2Dot(a, a, n); }

void Avx2Accumulate(double *acc, const double *x, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i),
                                            _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) acc[i] += x[i];
}

void Avx2Divide(double *x, double divisor, size_t n) {
  __m256d d = _mm256_set1_pd(divisor);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_div_pd(_mm256_loadu_pd(x + i), d));
  }
  for (; i < n; ++i) x[i] /= divisor;
}

}  // namespace

namespace internal {

const KernelTable *Avx2KernelsIfCompiled() {
  static const KernelTable table{Isa::kAvx2, Avx2Dot, Avx2SquaredNorm,
                                 Avx2Accumulate, Avx2Divide};
  return &table;
}

}  // namespace internal

}  // namespace arabkit::kernels
