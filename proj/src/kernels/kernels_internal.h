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

#ifndef ARABKIT_KERNELS_INTERNAL_H_
#define ARABKIT_KERNELS_INTERNAL_H_

#include "arabkit/vector_kernels.h"

namespace arabkit::kernels::internal {

// Defined only when the matching translation unit is compiled in.
const KernelTable *Avx2KernelsIfCompiled();
const KernelTable *NeonKernelsIfCompiled();

}  // namespace arabkit::kernels::internal

#endif  // ARABKIT_KERNELS_INTERNAL_H_
