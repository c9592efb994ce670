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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "rqc/reference.hpp"
#include "rqc/simulator.hpp"
#include "rqc/verify.hpp"

using namespace rqc;
using namespace rqc::saes;

namespace {

// Packed nibble value v (first element in bit 3) on wires first..first+3.
std::array<Wire, 4> lsb_first(Wire first) { return {first + 3, first + 2, first + 1, first}; }

}  // namespace

TEST(BasisChange, MatrixAndCounts) {
    auto p2n = basis_change(BasisDirection::POLY_TO_NORMAL);
    auto n2p = basis_change(BasisDirection::NORMAL_TO_POLY);
    EXPECT_EQ(p2n.circuit.size(), 4u);
    EXPECT_EQ(n2p.circuit.size(), 4u);
    auto m = ref::poly_to_normal_matrix();
    EXPECT_EQ(circuit_to_matrix(p2n.circuit, p2n.output_wires), m);
    EXPECT_EQ(circuit_to_matrix(n2p.circuit, n2p.output_wires), m.inverse());
}

TEST(BasisChange, UnitVectorMapsToAllOnes) {
    auto p2n = basis_change(BasisDirection::POLY_TO_NORMAL);
    BitState s(4);
    s.set(3, true);  // a0 = 1
    auto out = run(p2n.circuit, s);
    for (Wire w : p2n.output_wires) EXPECT_TRUE(out.get(w));
}

TEST(BasisChange, DirectionsComposeToIdentity) {
    auto p2n = basis_change(BasisDirection::POLY_TO_NORMAL);
    auto n2p = basis_change(BasisDirection::NORMAL_TO_POLY);
    Circuit both = p2n.circuit;
    both.append_mapped(n2p.circuit, p2n.output_wires);
    std::array<Wire, 4> out{};
    for (size_t k = 0; k < 4; k++) out[k] = p2n.output_wires[n2p.output_wires[k]];
    EXPECT_EQ(circuit_to_matrix(both, out), BinaryMatrix::identity(4));
}

TEST(Inversion, ExhaustiveAgainstFormulas) {
    Circuit c = gf16_inversion();
    auto x = lsb_first(0), y = lsb_first(4);
    std::array<Wire, 8> in{x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3]};
    auto t = truth_table(c, in, y);
    EXPECT_TRUE(t.inputs_preserved);
    for (unsigned p = 0; p < 256; p++) {
        unsigned expect = (p >> 4) ^ ref::gf16_inverse_normal_basis(static_cast<uint8_t>(p & 15));
        EXPECT_EQ(t.outputs[p], expect) << p;
    }
    EXPECT_EQ(t.outputs[0xb0], 0xbu);
}

TEST(Inversion, Counts) {
    auto r = resources(gf16_inversion());
    EXPECT_EQ(r.toffoli, 14u);
    EXPECT_EQ(r.not_, 0u);
    // The figure carries twelve CNOTs.
    EXPECT_EQ(r.cnot, 12u);
}

TEST(MergedAffine, CountsAndConstant) {
    Circuit c = merged_affine();
    auto r = resources(c);
    EXPECT_EQ(r.cnot, 8u);
    EXPECT_EQ(r.not_, 2u);
    auto layer = circuit_to_affine(c);
    std::vector<Wire> w{0, 1, 2, 3};
    EXPECT_EQ(run(c, BitState(4)).read_bits(w), layer.constant);
}

TEST(MergedAffine, EqualsSynthesizedLayer) {
    Circuit c = merged_affine();
    Circuit s = synth_affine(circuit_to_affine(c));
    auto w = lsb_first(0);
    EXPECT_EQ(truth_table(c, w, w).outputs, truth_table(s, w, w).outputs);
}

TEST(MergedAffine, FixUndoesLinearPart) {
    Circuit c = merged_affine_fix();
    c.append_circuit(merged_affine());
    auto layer = circuit_to_affine(c);
    EXPECT_EQ(layer.matrix, BinaryMatrix::identity(4));
}

TEST(SubBytes, XorSemanticsExhaustive) {
    const auto &sbox = ref::sbox_tables().sbox16;
    auto x = lsb_first(0), y = lsb_first(4);
    std::array<Wire, 8> in{x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3]};
    auto t = truth_table(saes_subbytes(true, SboxMode::XOR), in, y);
    EXPECT_TRUE(t.inputs_preserved);
    for (unsigned p = 0; p < 256; p++) EXPECT_EQ(t.outputs[p], (p >> 4) ^ sbox[p & 15]);
    for (unsigned v = 0; v < 16; v++) EXPECT_EQ(t.outputs[v | (sbox[v] << 4)], 0u);
}

TEST(SubBytes, FreshModeWithAndWithoutRestore) {
    const auto &sbox = ref::sbox_tables().sbox16;
    auto x = lsb_first(0), y = lsb_first(4);
    auto restored = truth_table(saes_subbytes(true, SboxMode::FRESH), x, y);
    auto plain = truth_table(saes_subbytes(false, SboxMode::FRESH), x, y);
    EXPECT_TRUE(restored.inputs_preserved);
    EXPECT_FALSE(plain.inputs_preserved);
    for (unsigned v = 0; v < 16; v++) {
        EXPECT_EQ(restored.outputs[v], sbox[v]);
        EXPECT_EQ(plain.outputs[v], sbox[v]);
    }
}

TEST(SubBytes, CountsPerConfiguration) {
    uint64_t fi = resources(gf16_inversion()).cnot;
    auto fresh = resources(saes_subbytes(false, SboxMode::FRESH));
    EXPECT_EQ(fresh.toffoli, 14u);
    EXPECT_EQ(fresh.not_, 2u);
    EXPECT_EQ(fresh.cnot, 4 + fi + 8);
    EXPECT_EQ(resources(saes_subbytes(true, SboxMode::FRESH)).cnot, fresh.cnot + 4);
    EXPECT_EQ(resources(saes_subbytes(true, SboxMode::XOR)).cnot, fresh.cnot + 4 + 8);
}

TEST(SubBytes, PlacedOnWideCircuit) {
    SaesNibblePair pair{{10, 11, 12, 13}, {2, 3, 4, 5}};
    Circuit c = saes_subbytes(16, pair, true, SboxMode::XOR);
    EXPECT_EQ(c.wire_count(), 16u);
    BitState s(16);
    s.write(std::array<Wire, 4>{13, 12, 11, 10}, 0x6);
    auto out = run(c, s);
    EXPECT_EQ(out.read(std::array<Wire, 4>{5, 4, 3, 2}), ref::sbox_tables().sbox16[6]);
}

TEST(MixColumn, MatrixAndCount) {
    Circuit c = saes_mixcolumn();
    auto m = ref::saes_mixcolumn_matrix();
    EXPECT_EQ(circuit_to_matrix(c), m);
    EXPECT_EQ(resources(c).cnot, 20u);
    Circuit twice = c;
    twice.append_circuit(c);
    EXPECT_EQ(circuit_to_matrix(twice), m * m);
}

TEST(Build, LayoutAndRegisters) {
    auto b = build_saes(0, 0);
    EXPECT_EQ(b.circuit.wire_count(), 48u);
    auto outs = b.circuit.registers_with_role(RegisterRole::OUTPUT);
    ASSERT_EQ(outs.size(), 1u);
    EXPECT_EQ(outs[0]->wires.size(), 16u);
    std::vector<Wire> sorted = outs[0]->wires;
    std::sort(sorted.begin(), sorted.end());
    for (Wire k = 0; k < 16; k++) EXPECT_EQ(sorted[k], 32 + k);
}

TEST(Build, AllOnesResources) {
    auto r = resources(build_saes(0xffff, 0xffff).circuit);
    EXPECT_EQ(r.wires, 48u);
    EXPECT_EQ(r.toffoli, 168u);
    EXPECT_EQ(r.not_, 75u);
}

TEST(Build, CnotItemization) {
    auto b = build_saes(0xffff, 0xffff);
    const auto &bd = b.breakdown;
    EXPECT_EQ(bd.applications("SB"), 12u);
    EXPECT_EQ(bd.applications("MC"), 2u);
    EXPECT_EQ(bd.applications("ARK"), 2u);
    EXPECT_EQ(bd.applications("Others"), 2u);
    EXPECT_EQ(bd.applications("P"), 2u);
    EXPECT_EQ(bd.find("MC")->total.cnot, 40u);
    EXPECT_EQ(bd.find("ARK")->total.cnot, 32u);
    EXPECT_EQ(bd.find("Others")->total.cnot, 16u);
    EXPECT_EQ(bd.find("RC")->total.not_, 3u);
    EXPECT_EQ(bd.total(), count_gates(b.circuit.gates()));
}

TEST(Build, NotCountNeverExceedsAllOnes) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; i++) {
        auto r = resources(build_saes(static_cast<uint16_t>(rng()), static_cast<uint16_t>(rng())).circuit);
        EXPECT_LE(r.not_, 75u);
        EXPECT_EQ(r.toffoli, 168u);
    }
}

TEST(Build, TextbookVector) { EXPECT_EQ(simulate_saes(0xa73b, 0x6f6b), 0x0738); }

TEST(Build, RandomPairsMatchReference) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; i++) {
        uint16_t k = static_cast<uint16_t>(rng()), p = static_cast<uint16_t>(rng());
        EXPECT_EQ(simulate_saes(k, p), ref::saes_encrypt(k, p)) << std::hex << k << " " << p;
    }
}

TEST(Build, InvertRestoresSubBytes) {
    Circuit c = saes_subbytes(true, SboxMode::XOR);
    Circuit inv = invert(c);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; i++) {
        BitState s(8);
        for (Wire w = 0; w < 8; w++) s.set(w, rng() & 1);
        EXPECT_EQ(run(inv, run(c, s)), s);
    }
}
