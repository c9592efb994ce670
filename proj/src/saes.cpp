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

#include "rqc/saes.hpp"

#include <vector>

#include "rqc/reference.hpp"

namespace rqc::saes {

namespace {

struct Cx {
    Wire c, t;
};

// Basis change figures, wires top to bottom.
constexpr Cx kPolyToNormal[] = {{3, 0}, {3, 1}, {2, 3}, {1, 2}};
constexpr Cx kNormalToPoly[] = {{1, 0}, {0, 3}, {3, 1}, {3, 2}};

// Inversion figure: x1..x4 on wires 0..3, y1..y4 on wires 4..7.
struct FiGate {
    int c1, c2;
    Wire t;
};
constexpr FiGate kInversion[] = {
    {1, 3, 2}, {0, 2, 6}, {2, -1, 0}, {1, 3, 2}, {0, 2, 4}, {1, 3, 0}, {2, -1, 0}, {0, 2, 3}, {1, 3, 7},
    {3, -1, 5}, {3, -1, 1}, {1, -1, 7}, {0, 2, 3}, {1, 3, 5}, {0, 2, 1}, {1, -1, 7}, {3, -1, 1}, {1, 2, 3},
    {3, -1, 4}, {3, -1, 5}, {1, 2, 3}, {0, 3, 1}, {1, -1, 6}, {1, -1, 7}, {0, 3, 1}, {0, -1, 6},
};

constexpr Cx kMergedAffineLinear[] = {{3, 0}, {0, 3}, {1, 0}, {0, 1}, {1, 0}, {2, 1}, {3, 2}, {2, 0}};
constexpr Wire kMergedAffineNots[] = {0, 3};

// After the polynomial-to-normal change, x1..x4 sit on wires 2, 1, 0, 3.
constexpr Wire kNormalWire[4] = {2, 1, 0, 3};

}  // namespace

BasisChange basis_change(BasisDirection direction) {
    BasisChange out{Circuit(4), {0, 1, 2, 3}};
    if (direction == BasisDirection::POLY_TO_NORMAL) {
        for (auto g : kPolyToNormal) {
            out.circuit.cx(g.c, g.t);
        }
        out.output_wires = {kNormalWire[0], kNormalWire[1], kNormalWire[2], kNormalWire[3]};
    } else {
        for (auto g : kNormalToPoly) {
            out.circuit.cx(g.c, g.t);
        }
        // The figure leaves a1, a2, a3, a0 on wires 0..3.
        out.output_wires = {2, 1, 0, 3};
    }
    return out;
}

Circuit gf16_inversion() {
    Circuit c(8);
    for (auto g : kInversion) {
        if (g.c2 < 0) {
            c.cx(static_cast<Wire>(g.c1), g.t);
        } else {
            c.ccx(static_cast<Wire>(g.c1), static_cast<Wire>(g.c2), g.t);
        }
    }
    return c;
}

Circuit merged_affine() {
    Circuit c(4);
    for (auto g : kMergedAffineLinear) {
        c.cx(g.c, g.t);
    }
    for (Wire w : kMergedAffineNots) {
        c.x(w);
    }
    return c;
}

Circuit merged_affine_fix() {
    Circuit c(4);
    for (size_t k = std::size(kMergedAffineLinear); k-- > 0;) {
        c.cx(kMergedAffineLinear[k].c, kMergedAffineLinear[k].t);
    }
    return c;
}

SubBytesParts saes_subbytes_parts(bool restore_input, SboxMode mode) {
    SubBytesParts parts{Circuit(8), Circuit(8), Circuit(8)};
    const std::array<Wire, 4> out_wires{4, 5, 6, 7};
    if (mode == SboxMode::XOR) {
        parts.fix.append_mapped(merged_affine_fix(), out_wires);
    }
    parts.core.append_circuit(basis_change(BasisDirection::POLY_TO_NORMAL).circuit);
    const std::array<Wire, 8> inversion_map{kNormalWire[0], kNormalWire[1], kNormalWire[2], kNormalWire[3], 4, 5, 6, 7};
    parts.core.append_mapped(gf16_inversion(), inversion_map);
    parts.core.append_mapped(merged_affine(), out_wires);
    if (restore_input) {
        const std::array<Wire, 4> normal_map{kNormalWire[0], kNormalWire[1], kNormalWire[2], kNormalWire[3]};
        parts.restore.append_mapped(basis_change(BasisDirection::NORMAL_TO_POLY).circuit, normal_map);
    }
    return parts;
}

Circuit saes_subbytes(bool restore_input, SboxMode mode) {
    auto parts = saes_subbytes_parts(restore_input, mode);
    Circuit c = parts.fix;
    c.append_circuit(parts.core);
    c.append_circuit(parts.restore);
    return c;
}

Circuit saes_subbytes(size_t wire_count, const SaesNibblePair &pair, bool restore_input, SboxMode mode) {
    Circuit c(wire_count);
    std::array<Wire, 8> map{};
    for (int k = 0; k < 4; k++) {
        map[k] = pair.input[k];
        map[4 + k] = pair.output[k];
    }
    c.append_mapped(saes_subbytes(restore_input, mode), map);
    return c;
}

Circuit saes_mixcolumn() { return resolve_permutation(synth_plu(ref::saes_mixcolumn_matrix())); }

namespace {

// Rows top to bottom hold nibbles n1, n0, n3, n2 in each 16-wire register.
constexpr int kRowOfNibble[4] = {1, 0, 3, 2};

std::array<Wire, 16> register_wires(Wire base) {
    std::array<Wire, 16> out{};
    for (int j = 0; j < 16; j++) {
        out[j] = base + static_cast<Wire>(4 * kRowOfNibble[j / 4] + j % 4);
    }
    return out;
}

std::array<Wire, 4> nibble(const std::array<Wire, 16> &reg, int n) {
    return {reg[4 * n], reg[4 * n + 1], reg[4 * n + 2], reg[4 * n + 3]};
}

// Nibble n of the S-box output lands in nibble kShiftRows[n] after ShiftRows.
constexpr int kShiftRows[4] = {0, 3, 2, 1};

}  // namespace

SaesLayout saes_layout() { return {register_wires(0), register_wires(16), register_wires(32)}; }

SaesBuild build_saes(uint16_t key, uint16_t plaintext) {
    SaesBuild b{Circuit(48), saes_layout(), {}};
    const auto &L = b.layout;
    b.circuit.add_register({"key", RegisterRole::KEY, {L.key.begin(), L.key.end()}});
    b.circuit.add_register({"work", RegisterRole::STATE_BLOCK, {L.work.begin(), L.work.end()}});
    b.circuit.add_register({"ciphertext", RegisterRole::OUTPUT, {L.output.begin(), L.output.end()}});
    Emitter e(b.circuit, b.breakdown);

    auto nots = [&](std::string_view name, const std::array<Wire, 16> &reg, uint16_t value) {
        Circuit part(48);
        for (int j = 0; j < 16; j++) {
            if ((value >> (15 - j)) & 1) {
                part.x(reg[j]);
            }
        }
        e.emit(name, part);
    };
    auto sbox = [&](const std::array<Wire, 4> &in, const std::array<Wire, 4> &out, bool restore, SboxMode mode) {
        auto parts = saes_subbytes_parts(restore, mode);
        std::array<Wire, 8> map{in[0], in[1], in[2], in[3], out[0], out[1], out[2], out[3]};
        if (mode == SboxMode::XOR) {
            e.emit("SB xor fix", parts.fix, map);
        }
        e.emit("SB", parts.core, map);
        if (restore) {
            e.emit("SB restore", parts.restore, map);
        }
    };
    auto sub_shift = [&](const std::array<Wire, 16> &src, const std::array<Wire, 16> &dst, bool restore) {
        for (int n : {1, 0, 3, 2}) {
            sbox(nibble(src, n), nibble(dst, kShiftRows[n]), restore, SboxMode::FRESH);
        }
    };
    auto add = [&](std::string_view name, const std::array<Wire, 16> &src, const std::array<Wire, 16> &dst,
                   int first_bit, int count) {
        Circuit part(48);
        for (int j = first_bit; j < first_bit + count; j++) {
            part.cx(src[j], dst[j]);
        }
        e.emit(name, part);
    };
    auto expand = [&](int round) {
        // w_even ^= SubNib(RotNib(w_odd)) ^ RCON, then w_odd ^= w_even.
        sbox(nibble(L.key, 3), nibble(L.key, 0), true, SboxMode::XOR);
        sbox(nibble(L.key, 2), nibble(L.key, 1), true, SboxMode::XOR);
        nots("RC", L.key, static_cast<uint16_t>(ref::saes_rcon(round) << 8));
        Circuit part(48);
        for (int j = 0; j < 8; j++) {
            part.cx(L.key[j], L.key[8 + j]);
        }
        e.emit("Others", part);
    };

    nots("IK", L.key, key);
    nots("P", L.key, plaintext);
    sub_shift(L.key, L.work, true);
    nots("P", L.key, plaintext);
    const Circuit mc = saes_mixcolumn();
    for (int col = 0; col < 2; col++) {
        auto top = nibble(L.work, 2 * col);
        auto bottom = nibble(L.work, 2 * col + 1);
        std::array<Wire, 8> map{top[0], top[1], top[2], top[3], bottom[0], bottom[1], bottom[2], bottom[3]};
        e.emit("MC", mc, map);
    }
    expand(1);
    add("ARK", L.key, L.work, 0, 16);
    expand(2);
    sub_shift(L.work, L.output, false);
    add("ARK", L.key, L.output, 0, 16);
    return b;
}

}  // namespace rqc::saes
