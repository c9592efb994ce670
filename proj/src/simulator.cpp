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

#include "rqc/simulator.hpp"

#include <stdexcept>

#include "kernels.hpp"

namespace rqc {

bool BitState::is_zero(std::span<const Wire> wires) const {
    for (Wire w : wires) {
        if (get(w)) {
            return false;
        }
    }
    return true;
}

uint64_t BitState::read(std::span<const Wire> wires) const {
    if (wires.size() > 64) {
        throw std::invalid_argument("read() handles at most 64 wires");
    }
    uint64_t v = 0;
    for (size_t k = 0; k < wires.size(); k++) {
        v |= uint64_t{get(wires[k])} << k;
    }
    return v;
}

void BitState::write(std::span<const Wire> wires, uint64_t value) {
    if (wires.size() > 64) {
        throw std::invalid_argument("write() handles at most 64 wires");
    }
    for (size_t k = 0; k < wires.size(); k++) {
        set(wires[k], (value >> k) & 1);
    }
}

std::vector<uint8_t> BitState::read_bits(std::span<const Wire> wires) const {
    std::vector<uint8_t> out(wires.size());
    for (size_t k = 0; k < wires.size(); k++) {
        out[k] = get(wires[k]);
    }
    return out;
}

void BitState::write_bits(std::span<const Wire> wires, std::span<const uint8_t> bits) {
    if (wires.size() != bits.size()) {
        throw std::invalid_argument("wire and bit counts differ");
    }
    for (size_t k = 0; k < wires.size(); k++) {
        set(wires[k], bits[k] & 1);
    }
}

std::string BitState::str() const {
    std::string out(size_, '0');
    for (size_t k = 0; k < size_; k++) {
        if (get(k)) {
            out[k] = '1';
        }
    }
    return out;
}

void run_gates(std::span<const Gate> gates, BitState &s) {
    uint64_t *w = s.words().data();
    for (const Gate &g : gates) {
        uint64_t bit;
        switch (g.kind) {
            case GateKind::NOT:
                bit = 1;
                break;
            case GateKind::CNOT:
                bit = (w[g.controls[0] >> 6] >> (g.controls[0] & 63)) & 1;
                break;
            default:
                bit = (w[g.controls[0] >> 6] >> (g.controls[0] & 63)) & (w[g.controls[1] >> 6] >> (g.controls[1] & 63)) &
                      1;
                break;
        }
        w[g.target >> 6] ^= bit << (g.target & 63);
    }
}

void run_inplace(const Circuit &c, BitState &s) {
    if (s.size() != c.wire_count()) {
        throw std::invalid_argument("state has " + std::to_string(s.size()) + " bits but the circuit has " +
                                    std::to_string(c.wire_count()) + " wires");
    }
    run_gates(c.gates(), s);
}

BitState run(const Circuit &c, BitState s) {
    run_inplace(c, s);
    return s;
}

const char *simd_level_name(SimdLevel level) {
    switch (level) {
        case SimdLevel::SCALAR:
            return "scalar";
        case SimdLevel::AVX2:
            return "avx2";
        case SimdLevel::NEON:
            return "neon";
    }
    return "?";
}

bool simd_level_available(SimdLevel level) {
    switch (level) {
        case SimdLevel::SCALAR:
            return true;
        case SimdLevel::AVX2:
#if defined(__x86_64__) || defined(_M_X64)
            return kernels::avx2_compiled() && __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case SimdLevel::NEON:
            return kernels::neon_compiled();
    }
    return false;
}

SimdLevel detect_simd_level() {
    static const SimdLevel level = [] {
        if (simd_level_available(SimdLevel::AVX2)) {
            return SimdLevel::AVX2;
        }
        if (simd_level_available(SimdLevel::NEON)) {
            return SimdLevel::NEON;
        }
        return SimdLevel::SCALAR;
    }();
    return level;
}

SlicedState::SlicedState(size_t wires, size_t lanes)
    : wires_(wires), lanes_(lanes), stride_(((lanes + 255) / 256) * 4), data_(wires * stride_, 0) {}

void SlicedState::set(size_t w, size_t lane, bool v) {
    uint64_t m = uint64_t{1} << (lane & 63);
    uint64_t &word = wire(w)[lane >> 6];
    word = v ? (word | m) : (word & ~m);
}

BitState SlicedState::lane_state(size_t lane) const {
    BitState s(wires_);
    for (size_t w = 0; w < wires_; w++) {
        s.set(w, get(w, lane));
    }
    return s;
}

void SlicedState::set_lane_state(size_t lane, const BitState &s) {
    if (s.size() != wires_) {
        throw std::invalid_argument("lane state has the wrong width");
    }
    for (size_t w = 0; w < wires_; w++) {
        set(w, lane, s.get(w));
    }
}

void run_sliced(const Circuit &c, SlicedState &s, SimdLevel level) {
    if (s.wires() != c.wire_count()) {
        throw std::invalid_argument("sliced state width does not match the circuit");
    }
    if (!simd_level_available(level)) {
        throw std::invalid_argument(std::string("SIMD level ") + simd_level_name(level) + " is not available");
    }
    const Gate *gates = c.gates().data();
    size_t n = c.gates().size();
    switch (level) {
        case SimdLevel::SCALAR:
            kernels::apply_scalar(gates, n, s.data().data(), s.stride());
            break;
        case SimdLevel::AVX2:
            kernels::apply_avx2(gates, n, s.data().data(), s.stride());
            break;
        case SimdLevel::NEON:
            kernels::apply_neon(gates, n, s.data().data(), s.stride());
            break;
    }
}

void run_sliced(const Circuit &c, SlicedState &s) { run_sliced(c, s, detect_simd_level()); }

TruthTable truth_table(const Circuit &c, std::span<const Wire> input_wires, std::span<const Wire> output_wires,
                       std::span<const FixedWire> fixed) {
    if (input_wires.size() > kMaxTruthTableInputs) {
        throw std::invalid_argument("truth_table accepts at most " + std::to_string(kMaxTruthTableInputs) +
                                    " input wires");
    }
    if (output_wires.size() > 64) {
        throw std::invalid_argument("truth_table reads at most 64 output wires");
    }
    // 0 = free, 1 = input, 2 = fixed.
    std::vector<uint8_t> kind(c.wire_count(), 0);
    std::vector<uint8_t> initial(c.wire_count(), 0);
    std::vector<uint8_t> is_output(c.wire_count(), 0);
    for (Wire w : input_wires) {
        if (w >= c.wire_count() || kind[w]) {
            throw std::invalid_argument("input wire out of range or repeated");
        }
        kind[w] = 1;
    }
    for (const auto &f : fixed) {
        if (f.wire >= c.wire_count() || kind[f.wire]) {
            throw std::invalid_argument("fixed wire out of range or overlapping the inputs");
        }
        kind[f.wire] = 2;
        initial[f.wire] = f.value;
    }
    for (Wire w : output_wires) {
        if (w >= c.wire_count() || is_output[w]) {
            throw std::invalid_argument("output wire out of range or repeated");
        }
        if (kind[w] == 2) {
            throw std::invalid_argument("output wires must not be fixed");
        }
        is_output[w] = 1;
    }

    size_t patterns = size_t{1} << input_wires.size();
    SlicedState state(c.wire_count(), patterns);
    for (size_t w = 0; w < c.wire_count(); w++) {
        if (initial[w]) {
            std::fill(state.wire(w), state.wire(w) + state.stride(), ~uint64_t{0});
        }
    }
    for (size_t k = 0; k < input_wires.size(); k++) {
        uint64_t *lanes = state.wire(input_wires[k]);
        for (size_t p = 0; p < patterns; p++) {
            if ((p >> k) & 1) {
                lanes[p >> 6] |= uint64_t{1} << (p & 63);
            }
        }
    }
    SlicedState before = state;
    run_sliced(c, state);

    TruthTable table;
    table.input_count = input_wires.size();
    table.output_count = output_wires.size();
    table.outputs.assign(patterns, 0);
    for (size_t k = 0; k < output_wires.size(); k++) {
        for (size_t p = 0; p < patterns; p++) {
            table.outputs[p] |= uint64_t{state.get(output_wires[k], p)} << k;
        }
    }
    size_t full_words = patterns / 64;
    uint64_t tail_mask = (patterns % 64) ? ((uint64_t{1} << (patterns % 64)) - 1) : 0;
    auto same = [&](size_t w) {
        const uint64_t *a = state.wire(w);
        const uint64_t *b = before.wire(w);
        for (size_t i = 0; i < full_words; i++) {
            if (a[i] != b[i]) {
                return false;
            }
        }
        return tail_mask == 0 || ((a[full_words] ^ b[full_words]) & tail_mask) == 0;
    };
    for (size_t w = 0; w < c.wire_count(); w++) {
        if (is_output[w]) {
            continue;
        }
        if (kind[w] == 1) {
            table.inputs_preserved = table.inputs_preserved && same(w);
        } else {
            table.others_restored = table.others_restored && same(w);
        }
    }
    return table;
}

}  // namespace rqc
