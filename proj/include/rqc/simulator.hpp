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

#ifndef RQC_SIMULATOR_HPP
#define RQC_SIMULATOR_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rqc/circuit.hpp"

namespace rqc {

class BitState {
   public:
    BitState() = default;
    explicit BitState(size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    size_t size() const { return size_; }
    bool get(size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
    void set(size_t k, bool v) {
        uint64_t m = uint64_t{1} << (k & 63);
        words_[k >> 6] = v ? (words_[k >> 6] | m) : (words_[k >> 6] & ~m);
    }
    void flip(size_t k) { words_[k >> 6] ^= uint64_t{1} << (k & 63); }
    std::span<uint64_t> words() { return words_; }
    std::span<const uint64_t> words() const { return words_; }
    bool is_zero(std::span<const Wire> wires) const;

    // Bit k of the value is wire wires[k]; at most 64 wires.
    uint64_t read(std::span<const Wire> wires) const;
    void write(std::span<const Wire> wires, uint64_t value);
    // Arbitrary-length variants, one byte per wire.
    std::vector<uint8_t> read_bits(std::span<const Wire> wires) const;
    void write_bits(std::span<const Wire> wires, std::span<const uint8_t> bits);

    std::string str() const;
    bool operator==(const BitState &other) const = default;

   private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

// Throws std::invalid_argument when the state length differs from the circuit width.
BitState run(const Circuit &c, BitState s);
void run_inplace(const Circuit &c, BitState &s);
void run_gates(std::span<const Gate> gates, BitState &s);

enum class SimdLevel { SCALAR, AVX2, NEON };
const char *simd_level_name(SimdLevel level);
SimdLevel detect_simd_level();
bool simd_level_available(SimdLevel level);

// Many basis states at once: lane j of every wire belongs to state j.
class SlicedState {
   public:
    SlicedState(size_t wires, size_t lanes);

    size_t wires() const { return wires_; }
    size_t lanes() const { return lanes_; }
    size_t stride() const { return stride_; }
    uint64_t *wire(size_t w) { return data_.data() + w * stride_; }
    const uint64_t *wire(size_t w) const { return data_.data() + w * stride_; }
    bool get(size_t w, size_t lane) const { return (wire(w)[lane >> 6] >> (lane & 63)) & 1; }
    void set(size_t w, size_t lane, bool v);
    std::vector<uint64_t> &data() { return data_; }

    BitState lane_state(size_t lane) const;
    void set_lane_state(size_t lane, const BitState &s);

   private:
    size_t wires_;
    size_t lanes_;
    size_t stride_;
    std::vector<uint64_t> data_;
};

void run_sliced(const Circuit &c, SlicedState &s, SimdLevel level);
void run_sliced(const Circuit &c, SlicedState &s);

struct FixedWire {
    Wire wire;
    bool value;
};

struct TruthTable {
    size_t input_count = 0;
    size_t output_count = 0;
    // outputs[p]: bit k is output_wires[k] after running on input pattern p,
    // where bit k of p drives input_wires[k].
    std::vector<uint64_t> outputs;
    bool inputs_preserved = true;
    bool others_restored = true;
};

constexpr size_t kMaxTruthTableInputs = 20;

// Wires not listed as inputs or fixed start at 0. An output wire may also be
// an input; it is then left out of inputs_preserved. Throws
// std::invalid_argument for more than kMaxTruthTableInputs inputs, more than
// 64 outputs, or overlapping input/fixed or fixed/output assignments.
TruthTable truth_table(const Circuit &c, std::span<const Wire> input_wires, std::span<const Wire> output_wires,
                       std::span<const FixedWire> fixed = {});

}  // namespace rqc

#endif
