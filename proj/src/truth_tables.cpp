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

#include "rqc/truth_tables.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

#include "rqc/aes128.hpp"
#include "rqc/gf2.hpp"
#include "rqc/reference.hpp"
#include "rqc/saes.hpp"
#include "rqc/simulator.hpp"

namespace rqc {

namespace {

std::string bits4(unsigned v) {
    std::string s;
    for (int b = 3; b >= 0; b--) s.push_back(((v >> b) & 1) ? '1' : '0');
    return s;
}

std::string hex2(unsigned v) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02x", v & 0xff);
    return buf;
}

// Nibble wires listed least significant first for a register whose first
// wire holds the most significant bit.
std::array<Wire, 4> nibble_lsb_first(Wire first) { return {first + 3, first + 2, first + 1, first}; }

void absorb(ComponentCheck &out, const TruthTable &t) {
    out.inputs_preserved = out.inputs_preserved && t.inputs_preserved;
    out.ancillas_restored = out.ancillas_restored && t.others_restored;
}

ComponentCheck gf16inv() {
    ComponentCheck out{"gf16inv"};
    Circuit c = saes::gf16_inversion();
    auto x = nibble_lsb_first(0), y = nibble_lsb_first(4);
    std::array<Wire, 8> in{x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3]};
    auto t = truth_table(c, in, y);
    absorb(out, t);
    for (unsigned p = 0; p < 256; p++) {
        unsigned xv = p & 15, yv = p >> 4;
        unsigned formulas = ref::gf16_inverse_normal_basis(static_cast<uint8_t>(xv));
        unsigned conj = ref::gf16_inverse_normal_basis_conjugated(static_cast<uint8_t>(xv));
        out.checked++;
        if (t.outputs[p] != (yv ^ formulas) || formulas != conj) out.mismatches++;
        if (yv == 0) out.rows.push_back("x=" + bits4(xv) + " -> y=" + bits4(static_cast<unsigned>(t.outputs[p])));
    }
    out.notes.push_back("256 (x, Y) pairs against the Boolean formulas and the conjugated polynomial inverse");
    return out;
}

ComponentCheck saes_sbox() {
    ComponentCheck out{"saes-sbox"};
    const auto &sbox = ref::sbox_tables().sbox16;
    auto x = nibble_lsb_first(0), y = nibble_lsb_first(4);
    auto fresh = truth_table(saes::saes_subbytes(true, saes::SboxMode::FRESH), x, y);
    absorb(out, fresh);
    for (unsigned v = 0; v < 16; v++) {
        out.checked++;
        if (fresh.outputs[v] != sbox[v]) out.mismatches++;
        out.rows.push_back(bits4(v) + " -> " + bits4(static_cast<unsigned>(fresh.outputs[v])));
    }
    auto plain = truth_table(saes::saes_subbytes(false, saes::SboxMode::FRESH), x, y);
    out.ancillas_restored = out.ancillas_restored && plain.others_restored;
    for (unsigned v = 0; v < 16; v++) {
        out.checked++;
        if (plain.outputs[v] != sbox[v]) out.mismatches++;
    }
    std::array<Wire, 8> in{x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3]};
    auto xr = truth_table(saes::saes_subbytes(true, saes::SboxMode::XOR), in, y);
    absorb(out, xr);
    for (unsigned p = 0; p < 256; p++) {
        out.checked++;
        if (xr.outputs[p] != ((p >> 4) ^ sbox[p & 15])) out.mismatches++;
    }
    out.notes.push_back("fresh with and without input restoration, plus all 256 XOR-mode pairs");
    return out;
}

std::array<Wire, 8> byte_wires(Wire first) {
    std::array<Wire, 8> w{};
    for (Wire b = 0; b < 8; b++) w[b] = first + b;
    return w;
}

ComponentCheck aes_sbox() {
    ComponentCheck out{"aes-sbox"};
    const auto &sbox = ref::sbox_tables().sbox256;
    auto t = truth_table(aes::aes_subbytes(aes::SboxMode::FRESH), byte_wires(aes::kSboxInput),
                         byte_wires(aes::kSboxOutput));
    absorb(out, t);
    for (unsigned v = 0; v < 256; v++) {
        out.checked++;
        if (t.outputs[v] != sbox[v]) out.mismatches++;
        out.rows.push_back(hex2(v) + " -> " + hex2(static_cast<unsigned>(t.outputs[v])));
    }
    return out;
}

ComponentCheck aes_sbox_xor() {
    ComponentCheck out{"aes-sbox-xor"};
    const auto &sbox = ref::sbox_tables().sbox256;
    std::array<Wire, 16> in{};
    for (Wire k = 0; k < 8; k++) {
        in[k] = aes::kSboxInput + k;
        in[8 + k] = aes::kSboxOutput + k;
    }
    auto t = truth_table(aes::aes_subbytes(aes::SboxMode::XOR), in, byte_wires(aes::kSboxOutput));
    absorb(out, t);
    for (unsigned p = 0; p < 65536; p++) {
        out.checked++;
        if (t.outputs[p] != ((p >> 8) ^ sbox[p & 255])) out.mismatches++;
    }
    out.notes.push_back("65536 (X, Y) pairs: Y ^ S(X)");
    return out;
}

ComponentCheck basis() {
    ComponentCheck out{"basis"};
    auto p2n = saes::basis_change(saes::BasisDirection::POLY_TO_NORMAL);
    auto n2p = saes::basis_change(saes::BasisDirection::NORMAL_TO_POLY);
    BinaryMatrix m = circuit_to_matrix(p2n.circuit, p2n.output_wires);
    BinaryMatrix expected = ref::poly_to_normal_matrix();
    for (size_t r = 0; r < 4; r++) {
        std::string row;
        for (size_t c = 0; c < 4; c++) row.push_back(m.get(r, c) ? '1' : '0');
        out.rows.push_back(row);
    }
    out.checked++;
    if (!(m == expected)) out.mismatches++;

    Circuit both = p2n.circuit;
    both.append_mapped(n2p.circuit, p2n.output_wires);
    std::array<Wire, 4> final_wires{};
    for (size_t k = 0; k < 4; k++) final_wires[k] = p2n.output_wires[n2p.output_wires[k]];
    out.checked++;
    if (!(circuit_to_matrix(both, final_wires) == BinaryMatrix::identity(4))) out.mismatches++;
    out.checked++;
    if (!(circuit_to_matrix(n2p.circuit, n2p.output_wires) == expected.inverse())) out.mismatches++;
    out.notes.push_back("rows: normal coordinates x1..x4; columns: a3 a2 a1 a0");
    return out;
}

ComponentCheck merged_affine() {
    ComponentCheck out{"merged-affine"};
    const auto &sbox = ref::sbox_tables().sbox16;
    const BinaryMatrix m = ref::poly_to_normal_matrix();
    auto w = nibble_lsb_first(0);
    auto t = truth_table(saes::merged_affine(), w, w);
    absorb(out, t);
    for (unsigned x = 0; x < 16; x++) {
        unsigned normal = ref::nibble_from_bits(m.apply(ref::nibble_bits(static_cast<uint8_t>(x))));
        unsigned y = ref::gf16_inverse_normal_basis(static_cast<uint8_t>(normal));
        out.checked++;
        if (t.outputs[y] != sbox[x]) out.mismatches++;
    }
    for (unsigned y = 0; y < 16; y++) out.rows.push_back(bits4(y) + " -> " + bits4(static_cast<unsigned>(t.outputs[y])));
    out.notes.push_back("normal-basis inverse of x mapped to SBOX16[x] for all 16 x");
    return out;
}

ComponentCheck affine_fix() {
    ComponentCheck out{"affine-fix"};
    // Linear action of the fresh S-box on a nonzero prior output, measured at x = 0.
    Circuit fresh = aes::aes_subbytes(aes::SboxMode::FRESH);
    auto out_wires = byte_wires(aes::kSboxOutput);
    auto t = truth_table(fresh, out_wires, out_wires);
    uint64_t s0 = t.outputs[0];
    auto transform = [&](unsigned y) { return static_cast<unsigned>(t.outputs[y] ^ s0); };
    auto w = byte_wires(0);
    auto fix = truth_table(aes::output_affine_fix(), w, w);
    absorb(out, fix);
    for (unsigned y = 0; y < 256; y++) {
        out.checked++;
        if (transform(static_cast<unsigned>(fix.outputs[y])) != y) out.mismatches++;
        out.rows.push_back(hex2(y) + " -> " + hex2(static_cast<unsigned>(fix.outputs[y])));
    }
    out.notes.push_back("fresh S-box applied after the fix returns every prior output unchanged");
    return out;
}

}  // namespace

const std::vector<std::string> &component_names() {
    static const std::vector<std::string> names{"gf16inv", "saes-sbox", "aes-sbox", "aes-sbox-xor",
                                                "basis",   "merged-affine", "affine-fix"};
    return names;
}

ComponentCheck check_component(std::string_view name) {
    if (name == "gf16inv") return gf16inv();
    if (name == "saes-sbox") return saes_sbox();
    if (name == "aes-sbox") return aes_sbox();
    if (name == "aes-sbox-xor") return aes_sbox_xor();
    if (name == "basis") return basis();
    if (name == "merged-affine") return merged_affine();
    if (name == "affine-fix") return affine_fix();
    throw std::invalid_argument("unknown component '" + std::string(name) + "'");
}

}  // namespace rqc
