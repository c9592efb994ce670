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

#ifndef RQC_SAES_HPP
#define RQC_SAES_HPP

#include <array>
#include <cstdint>

#include "rqc/breakdown.hpp"
#include "rqc/circuit.hpp"
#include "rqc/gf2.hpp"

namespace rqc::saes {

enum class BasisDirection { POLY_TO_NORMAL, NORMAL_TO_POLY };

// A 4-wire in-place basis change. Input coordinate i starts on wire i; output
// coordinate i ends on output_wires[i]. Polynomial coordinates are a3 a2 a1 a0,
// normal coordinates x1 x2 x3 x4.
struct BasisChange {
    Circuit circuit;
    std::array<Wire, 4> output_wires;
};
BasisChange basis_change(BasisDirection direction);

// Wires x1..x4 = 0..3, y1..y4 = 4..7; y ^= normal-basis inverse of x.
Circuit gf16_inversion();

// 4 wires holding the inversion output y1..y4; leaves the S-box value
// a3 a2 a1 a0 on wires 0..3.
Circuit merged_affine();
// Inverse of the linear part of merged_affine, applied to the output nibble
// first so that a nonzero prior value survives as an XOR.
Circuit merged_affine_fix();

enum class SboxMode { FRESH, XOR };

// Local layout: input nibble a3..a0 on wires 0..3, output nibble on 4..7.
struct SubBytesParts {
    Circuit fix;      // empty in FRESH mode
    Circuit core;     // basis change, inversion, merged affine
    Circuit restore;  // empty unless the input basis is restored
};
SubBytesParts saes_subbytes_parts(bool restore_input, SboxMode mode);
Circuit saes_subbytes(bool restore_input, SboxMode mode = SboxMode::XOR);

struct SaesNibblePair {
    std::array<Wire, 4> input;
    std::array<Wire, 4> output;
};
// The 8-wire S-box placed onto a pair of nibbles of a wider circuit.
Circuit saes_subbytes(size_t wire_count, const SaesNibblePair &pair, bool restore_input,
                      SboxMode mode = SboxMode::XOR);

// One column: nibble 0 on wires 0..3, nibble 1 on 4..7, most significant bit first.
Circuit saes_mixcolumn();

struct SaesLayout {
    // Logical order: bit 15 - j of the 16-bit value sits on wire[j].
    std::array<Wire, 16> key;
    std::array<Wire, 16> work;
    std::array<Wire, 16> output;
};

struct SaesBuild {
    Circuit circuit;
    SaesLayout layout;
    Breakdown breakdown;
};

SaesBuild build_saes(uint16_t key, uint16_t plaintext);
SaesLayout saes_layout();

}  // namespace rqc::saes

#endif
