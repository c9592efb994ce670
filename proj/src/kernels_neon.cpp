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

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#define RQC_HAVE_NEON_KERNEL 1
#endif

namespace rqc::kernels {

#ifdef RQC_HAVE_NEON_KERNEL

bool neon_compiled() { return true; }

void apply_neon(const Gate *gates, size_t count, uint64_t *state, size_t stride) {
    for (size_t k = 0; k < count; k++) {
        const Gate &g = gates[k];
        uint64_t *t = state + g.target * stride;
        switch (g.kind) {
            case GateKind::NOT:
                for (size_t w = 0; w < stride; w += 2) {
                    uint64x2_t v = vld1q_u64(t + w);
                    vst1q_u64(t + w, vreinterpretq_u64_u8(vmvnq_u8(vreinterpretq_u8_u64(v))));
                }
                break;
            case GateKind::CNOT: {
                const uint64_t *a = state + g.controls[0] * stride;
                for (size_t w = 0; w < stride; w += 2) {
                    vst1q_u64(t + w, veorq_u64(vld1q_u64(t + w), vld1q_u64(a + w)));
                }
                break;
            }
            case GateKind::TOFFOLI: {
                const uint64_t *a = state + g.controls[0] * stride;
                const uint64_t *b = state + g.controls[1] * stride;
                for (size_t w = 0; w < stride; w += 2) {
                    uint64x2_t ab = vandq_u64(vld1q_u64(a + w), vld1q_u64(b + w));
                    vst1q_u64(t + w, veorq_u64(vld1q_u64(t + w), ab));
                }
                break;
            }
        }
    }
}

#else

bool neon_compiled() { return false; }

void apply_neon(const Gate *, size_t, uint64_t *, size_t) {
    throw std::runtime_error("NEON kernel is not available on this architecture");
}

#endif

}  // namespace rqc::kernels
