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

#include "kernels.hpp"

namespace rqc::kernels {

void apply_scalar(const Gate *gates, size_t count, uint64_t *state, size_t stride) {
    for (size_t k = 0; k < count; k++) {
        const Gate &g = gates[k];
        uint64_t *t = state + g.target * stride;
        switch (g.kind) {
            case GateKind::NOT:
                for (size_t w = 0; w < stride; w++) {
                    t[w] = ~t[w];
                }
                break;
            case GateKind::CNOT: {
                const uint64_t *a = state + g.controls[0] * stride;
                for (size_t w = 0; w < stride; w++) {
                    t[w] ^= a[w];
                }
                break;
            }
            case GateKind::TOFFOLI: {
                const uint64_t *a = state + g.controls[0] * stride;
                const uint64_t *b = state + g.controls[1] * stride;
                for (size_t w = 0; w < stride; w++) {
                    t[w] ^= a[w] & b[w];
                }
                break;
            }
        }
    }
}

}  // namespace rqc::kernels
