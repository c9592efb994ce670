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

#include <stdexcept>

#include "kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define RQC_HAVE_AVX2_KERNEL 1
#endif

namespace rqc::kernels {

#ifdef RQC_HAVE_AVX2_KERNEL

bool avx2_compiled() { return true; }

__attribute__((target("avx2"))) void apply_avx2(const Gate *gates, size_t count, uint64_t *state, size_t stride) {
    const __m256i ones = _mm256_set1_epi64x(-1);
    for (size_t k = 0; k < count; k++) {
        const Gate &g = gates[k];
        auto *t = reinterpret_cast<__m256i *>(state + g.target * stride);
        size_t n = stride / 4;
        switch (g.kind) {
            case GateKind::NOT:
                for (size_t w = 0; w < n; w++) {
                    _mm256_storeu_si256(t + w, _mm256_xor_si256(_mm256_loadu_si256(t + w), ones));
                }
                break;
            case GateKind::CNOT: {
                auto *a = reinterpret_cast<const __m256i *>(state + g.controls[0] * stride);
                for (size_t w = 0; w < n; w++) {
                    __m256i v = _mm256_xor_si256(_mm256_loadu_si256(t + w), _mm256_loadu_si256(a + w));
                    _mm256_storeu_si256(t + w, v);
                }
                break;
            }
            case GateKind::TOFFOLI: {
                auto *a = reinterpret_cast<const __m256i *>(state + g.controls[0] * stride);
                auto *b = reinterpret_cast<const __m256i *>(state + g.controls[1] * stride);
                for (size_t w = 0; w < n; w++) {
                    __m256i ab = _mm256_and_si256(_mm256_loadu_si256(a + w), _mm256_loadu_si256(b + w));
                    _mm256_storeu_si256(t + w, _mm256_xor_si256(_mm256_loadu_si256(t + w), ab));
                }
                break;
            }
        }
    }
}

#else

bool avx2_compiled() { return false; }

void apply_avx2(const Gate *, size_t, uint64_t *, size_t) {
    throw std::runtime_error("AVX2 kernel is not available on this architecture");
}

#endif

}  // namespace rqc::kernels
