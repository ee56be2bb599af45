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

#ifndef ARABKIT_VECTOR_KERNELS_H_
#define ARABKIT_VECTOR_KERNELS_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace arabkit::kernels {

// Dense float64 kernels behind mean pooling and cosine similarity.
//
// Every variant reduces in the same fixed order: four interleaved partial
// sums over blocks of four elements, combined as (s0 + s2) + (s1 + s3), then
// the tail added left to right. No fused multiply-add is used. Scalar and SIMD
// results are therefore bit-identical, which keeps scores reproducible across
// machines.

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view IsaName(Isa isa);

struct KernelTable {
  Isa isa;
  double (*dot)(const double *a, const double *b, size_t n);
  double (*squared_norm)(const double *a, size_t n);
  // acc[i] += x[i]
  void (*accumulate)(double *acc, const double *x, size_t n);
  // x[i] /= divisor
  void (*divide)(double *x, double divisor, size_t n);
};

const KernelTable &ScalarKernels();

// Variants compiled into this binary and supported by the running CPU.
std::vector<const KernelTable *> AvailableKernels();

// The widest available variant. ARABKIT_ISA=scalar|avx2|neon in the
// environment overrides the choice when that variant is available.
const KernelTable &ActiveKernels();

double Dot(std::span<const double> a, std::span<const double> b);
double SquaredNorm(std::span<const double> a);
void Accumulate(std::span<double> acc, std::span<const double> x);
void Divide(std::span<double> x, double divisor);

}  // namespace arabkit::kernels

#endif  // ARABKIT_VECTOR_KERNELS_H_
