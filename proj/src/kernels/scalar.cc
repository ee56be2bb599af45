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

#include "arabkit/vector_kernels.h"

namespace arabkit::kernels {

namespace {

double ScalarDot(const double *a, const double *b, size_t n) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s[0] += a[i] * b[i];
    s[1] += a[i + 1] * b[i + 1];
    s[2] += a[i + 2] * b[i + 2];
    s[3] += a[i + 3] * b[i + 3];
  }
  double r = (s[0] + s[2]) + (s[1] + s[3]);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double ScalarSquaredNorm(const double *a, size_t n) { return ScalarDot(a, a, n); }

void ScalarAccumulate(double *acc, const double *x, size_t n) {
  for (size_t i = 0; i < n; ++i) acc[i] += x[i];
}

void ScalarDivide(double *x, double divisor, size_t n) {
  for (size_t i = 0; i < n; ++i) x[i] /= divisor;
}

}  // namespace

const KernelTable &ScalarKernels() {
  static const KernelTable table{Isa::kScalar, ScalarDot, ScalarSquaredNorm,
                                 ScalarAccumulate, ScalarDivide};
  return table;
}

}  // namespace arabkit::kernels
