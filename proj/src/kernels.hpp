// Copyright 2026 The rqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RQC_SRC_KERNELS_HPP
#define RQC_SRC_KERNELS_HPP

#include <cstddef>
#include <cstdint>

#include "rqc/circuit.hpp"

namespace rqc::kernels {

// `stride` is the per-wire word count and is always a multiple of 4.
void apply_scalar(const Gate *gates, size_t count, uint64_t *state, size_t stride);
bool avx2_compiled();
void apply_avx2(const Gate *gates, size_t count, uint64_t *state, size_t stride);
bool neon_compiled();
void apply_neon(const Gate *gates, size_t count, uint64_t *state, size_t stride);

}  // namespace rqc::kernels

#endif
