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

#include <arm_neon.h>

#include "kernels_internal.h"

namespace arabkit::kernels {

namespace {

double NeonDot(const double *a, const double *b, size_t n) {
  // acc01 holds lanes 0,1 and acc23 lanes 2,3 of the canonical 4-lane order.
  float64x2_t acc01 = vdupq_n_f64(0.0);
  float64x2_t acc23 = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  float64x2_t pair = vaddq_f64(acc01, acc23);  // (s0 + s2, s1 + s3)
  double r = vgetq_lane_f64(pair, 0) + vgetq_lane_f64(pair, 1);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double NeonSquaredNorm(const double *a, size_t n) { return NeonDot(a, a, n); }

void NeonAccumulate(double *acc, const double *x, size_t n) {
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vld1q_f64(x + i)));
  }
  for (; i < n; ++i) acc[i] += x[i];
}

void NeonDivide(double *x, double divisor, size_t n) {
  float64x2_t d = vdupq_n_f64(divisor);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vdivq_f64(vld1q_f64(x + i), d));
  for (; i < n; ++i) x[i] /= divisor;
}

}  // namespace

namespace internal {

const KernelTable *NeonKernelsIfCompiled() {
  static const KernelTable table{Isa::kNeon, NeonDot, NeonSquaredNorm,
                                 NeonAccumulate, NeonDivide};
  return &table;
}

}  // namespace internal

}  // namespace arabkit::kernels
