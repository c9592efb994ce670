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

#ifndef RQC_AES128_HPP
#define RQC_AES128_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rqc/breakdown.hpp"
#include "rqc/circuit.hpp"
#include "rqc/gf2.hpp"
#include "rqc/reference.hpp"

namespace rqc::aes {

constexpr size_t kSboxWires = 32;
constexpr Wire kSboxInput = 0;     // wires 0..7, bit b on wire b
constexpr Wire kSboxOutput = 8;    // wires 8..15, bit b on wire 8 + b
constexpr Wire kSboxAncilla = 16;  // wires 16..31
constexpr size_t kSboxAncillaCount = 16;

enum class SboxMode { FRESH, XOR };

// 55-Toffoli S-box. FRESH needs the output byte at zero and leaves SBOX[x]
// there; XOR works for any prior output y and leaves y ^ SBOX[x]. Both
// restore the input and the ancillas.
Circuit aes_subbytes(SboxMode mode);
// The 8-CNOT fix-up on the output byte (wires 0..7) that turns FRESH into XOR
// when it runs before the fresh circuit.
Circuit output_affine_fix();

// permutation[i] = logical state bit that ShiftRows moves into bit i.
std::array<Wire, 128> shiftrows_permutation();

// One column, bit b of row r on wire 8r + b. The output row permutation is
// left to the caller as a relabelling: logical bit i ends on output_wire[i].
LinearSynthesis aes_mixcolumn();

Circuit add_round_key(size_t wire_count, std::span<const Wire> key_wires, std::span<const Wire> state_wires);

// In place on a 144-wire circuit: key bits on 0..127, S-box ancillas on 128..143.
constexpr size_t kKeyExpandWires = 144;
Circuit key_expand_round(int round);
Circuit key_unexpand_round(int round);
// Pieces of key_expand_round, in emission order.
struct KeyExpandParts {
    std::vector<Circuit> sboxes;  // four SB* applications
    Circuit rcon;
    Circuit others;
};
KeyExpandParts key_expand_parts(int round);

enum class StepKind { KEY_INIT, PLAINTEXT_TOGGLE, KEY_EXPAND, KEY_UNEXPAND, ADD_ROUND_KEY, ROUND, INVERSE_ROUND };
const char *step_kind_name(StepKind kind);

struct ScheduleStep {
    StepKind kind;
    int index = 0;       // round or key index; unused for KEY_INIT / PLAINTEXT_TOGGLE
    int source = -1;     // block read by SubBytes; -1 is the key register
    int target = -1;     // block written (ROUND, ADD_ROUND_KEY) or returned to zero (INVERSE_ROUND)
    std::string str() const;
};
std::vector<ScheduleStep> zigzag_schedule();

struct ScheduleCounts {
    uint64_t ark = 0, sb = 0, mc = 0, sb_star = 0, others = 0, p = 0, rc_not = 0, key_expand = 0, key_unexpand = 0;
};
// Multiplicities implied by a schedule, without building any gates.
ScheduleCounts schedule_counts(const std::vector<ScheduleStep> &schedule);

struct AesLayout {
    static constexpr size_t kBlocks = 4;
    static constexpr size_t kWires = 656;
    std::array<Wire, 128> key;
    std::array<std::array<Wire, 128>, kBlocks> blocks;
    std::array<Wire, 16> ancilla;
    int output_block = 0;
    // Logical ciphertext bit i (byte i / 8, bit i % 8) is on output[i].
    std::array<Wire, 128> output;
};

struct ZeroCheck {
    size_t after_gate;  // number of gates executed when the check applies
    int block;
    std::string label;
};

struct AesBuild {
    Circuit circuit;
    AesLayout layout;
    Breakdown breakdown;
    std::vector<ScheduleStep> schedule;
    std::vector<ZeroCheck> zero_checks;
};

AesBuild build_aes128(const ref::Key128 &key, const ref::Block128 &plaintext);

struct OpCost {
    std::string name;
    uint64_t toffoli = 0, cnot = 0, not_ = 0, times = 0;
};

struct CostModel {
    std::string name;
    std::vector<OpCost> ops;
    uint64_t qubits = 0;
    uint64_t ancilla_qubits = 0;
};

struct Estimate {
    ResourceReport report;  // wires = qubits + ancilla_qubits, depth unused
    uint64_t qubits = 0;
    uint64_t ancilla_qubits = 0;
};

Estimate estimate(const CostModel &model);
// Per-operation costs with the multiplicities of zigzag_schedule.
CostModel zigzag_cost_model();
CostModel new_zigzag_cost_model();

// Printed totals from the comparison tables, used only for reporting.
constexpr uint64_t kPrintedZigzagCnot = 101174;

}  // namespace rqc::aes

#endif
