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

#include <cassert>
#include <cstdlib>
#include <string_view>

#include "kernels_internal.h"

namespace arabkit::kernels {

namespace internal {

#ifndef ARABKIT_HAVE_AVX2
const KernelTable *Avx2KernelsIfCompiled() { return nullptr; }
#endif
#ifndef ARABKIT_HAVE_NEON
const KernelTable *NeonKernelsIfCompiled() { return nullptr; }
#endif

}  // namespace internal

namespace {

bool CpuHasAvx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable &SelectKernels() {
  std::vector<const KernelTable *> available = AvailableKernels();
  if (const char *forced = std::getenv("ARABKIT_ISA")) {
    for (const KernelTable *table : available) {
      if (IsaName(table->isa) == forced) return *table;
    }
  }
  return *available.back();
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

std::vector<const KernelTable *> AvailableKernels() {
  std::vector<const KernelTable *> tables{&ScalarKernels()};
  if (const KernelTable *avx2 = internal::Avx2KernelsIfCompiled(); avx2 && CpuHasAvx2()) {
    tables.push_back(avx2);
  }
  // NEON is part of the AArch64 baseline.
  if (const KernelTable *neon = internal::NeonKernelsIfCompiled()) {
    tables.push_back(neon);
  }
  return tables;
}

const KernelTable &ActiveKernels() {
  static const KernelTable &table = SelectKernels();
  return table;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return ActiveKernels().dot(a.data(), b.data(), a.size());
}

double SquaredNorm(std::span<const double> a) {
  return ActiveKernels().squared_norm(a.data(), a.size());
}

void Accumulate(std::span<double> acc, std::span<const double> x) {
  assert(acc.size() == x.size());
  ActiveKernels().accumulate(acc.data(), x.data(), x.size());
}

void Divide(std::span<double> x, double divisor) {
  ActiveKernels().divide(x.data(), divisor, x.size());
}

}  // namespace arabkit::kernels
