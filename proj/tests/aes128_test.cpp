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

#include "rqc/aes128.hpp"

#include <gtest/gtest.h>

#include <random>

#include "rqc/simulator.hpp"
#include "rqc/verify.hpp"

using namespace rqc;
using namespace rqc::aes;

namespace {

std::array<Wire, 8> byte_wires(Wire first) {
    std::array<Wire, 8> w{};
    for (Wire b = 0; b < 8; b++) w[b] = first + b;
    return w;
}

ref::Block128 random_block(std::mt19937_64 &rng) {
    ref::Block128 b{};
    for (auto &x : b) x = static_cast<uint8_t>(rng());
    return b;
}

}  // namespace

TEST(SubBytes, FreshCounts) {
    auto r = resources(aes_subbytes(SboxMode::FRESH));
    EXPECT_EQ(r.toffoli, 55u);
    EXPECT_EQ(r.cnot, 314u);
    EXPECT_EQ(r.not_, 4u);
    EXPECT_EQ(r.wires - 16, kSboxAncillaCount);
}

TEST(SubBytes, XorCounts) {
    auto r = resources(aes_subbytes(SboxMode::XOR));
    EXPECT_EQ(r.toffoli, 55u);
    EXPECT_EQ(r.cnot, 322u);
    EXPECT_EQ(r.not_, 4u);
}

TEST(SubBytes, FreshExhaustive) {
    auto t = truth_table(aes_subbytes(SboxMode::FRESH), byte_wires(kSboxInput), byte_wires(kSboxOutput));
    EXPECT_TRUE(t.inputs_preserved);
    EXPECT_TRUE(t.others_restored);
    for (unsigned x = 0; x < 256; x++) EXPECT_EQ(t.outputs[x], ref::sbox_tables().sbox256[x]);
    EXPECT_EQ(t.outputs[0], 0x63u);
}

TEST(SubBytes, XorExhaustive) {
    std::array<Wire, 16> in{};
    for (Wire k = 0; k < 8; k++) {
        in[k] = kSboxInput + k;
        in[8 + k] = kSboxOutput + k;
    }
    auto t = truth_table(aes_subbytes(SboxMode::XOR), in, byte_wires(kSboxOutput));
    EXPECT_TRUE(t.inputs_preserved);
    EXPECT_TRUE(t.others_restored);
    const auto &s = ref::sbox_tables().sbox256;
    size_t bad = 0;
    for (unsigned p = 0; p < 65536; p++) bad += t.outputs[p] != ((p >> 8) ^ s[p & 255]);
    EXPECT_EQ(bad, 0u);
    for (unsigned x = 0; x < 256; x++) EXPECT_EQ(t.outputs[x | (s[x] << 8)], 0u);
}

TEST(SubBytes, DepthOfBothModes) {
    uint64_t fresh = depth(aes_subbytes(SboxMode::FRESH));
    uint64_t xr = depth(aes_subbytes(SboxMode::XOR));
    RecordProperty("depth_sb", std::to_string(fresh));
    RecordProperty("depth_sb_star", std::to_string(xr));
    EXPECT_GT(fresh, 0u);
    EXPECT_GE(xr, fresh);
}

TEST(OutputFix, CountsAndRank) {
    Circuit f = output_affine_fix();
    auto r = resources(f);
    EXPECT_EQ(r.cnot, 8u);
    EXPECT_EQ(r.not_, 0u);
    EXPECT_EQ(r.toffoli, 0u);
    EXPECT_TRUE(circuit_to_matrix(f).is_invertible());
    EXPECT_TRUE(run(f, BitState(8)).is_zero(byte_wires(0)));
}

TEST(ShiftRows, MatchesReferenceAndHasOrderFour) {
    auto p = shiftrows_permutation();
    for (Wire i = 0; i < 128; i += 32) {
        for (Wire b = 0; b < 8; b++) EXPECT_EQ(p[i + b], i + b) << "row 0 stays";
    }
    std::array<Wire, 128> q{};
    for (Wire i = 0; i < 128; i++) q[i] = i;
    for (int k = 0; k < 4; k++) {
        std::array<Wire, 128> next{};
        for (Wire i = 0; i < 128; i++) next[i] = q[p[i]];
        q = next;
    }
    for (Wire i = 0; i < 128; i++) EXPECT_EQ(q[i], i);

    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 100; rep++) {
        auto s = random_block(rng);
        auto expected = ref::aes_shift_rows(s);
        for (Wire i = 0; i < 128; i++) {
            bool got = (s[p[i] / 8] >> (p[i] % 8)) & 1;
            ASSERT_EQ(got, ((expected[i / 8] >> (i % 8)) & 1) != 0);
        }
    }
}

TEST(MixColumn, MatrixAndCount) {
    auto mc = aes_mixcolumn();
    EXPECT_EQ(circuit_to_matrix(mc.circuit, mc.output_wire), ref::aes_mixcolumn_matrix());
    EXPECT_EQ(resources(mc.circuit).cnot, 277u);
    EXPECT_EQ(resources(mc.circuit).gate_count(), 277u);
    std::vector<Wire> all(32);
    for (Wire k = 0; k < 32; k++) all[k] = k;
    EXPECT_TRUE(run(mc.circuit, BitState(32)).is_zero(all));
}

TEST(AddRoundKey, XorsKeyIntoState) {
    std::vector<Wire> key(128), state(128);
    for (Wire i = 0; i < 128; i++) {
        key[i] = i;
        state[i] = 128 + i;
    }
    Circuit c = add_round_key(256, key, state);
    EXPECT_EQ(resources(c).cnot, 128u);
    EXPECT_EQ(depth(c), 1u);
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 20; rep++) {
        BitState s(256);
        for (size_t w = 0; w < 256; w++) s.set(w, rng() & 1);
        auto out = run(c, s);
        for (Wire i = 0; i < 128; i++) EXPECT_EQ(out.get(128 + i), s.get(i) != s.get(128 + i));
    }
    BitState zero_key(256);
    zero_key.set(200, true);
    EXPECT_EQ(run(c, zero_key), zero_key);
    EXPECT_THROW(add_round_key(256, key, std::vector<Wire>(64)), std::invalid_argument);
}

TEST(KeyExpansion, ReproducesReferenceSchedule) {
    std::mt19937_64 rng(51);
    std::vector<Wire> key_wires(128);
    for (Wire i = 0; i < 128; i++) key_wires[i] = i;
    for (int trial = 0; trial < 20; trial++) {
        auto key = random_block(rng);
        auto expected = ref::aes128_round_keys(key);
        BitState s(kKeyExpandWires);
        for (Wire i = 0; i < 128; i++) s.set(i, (key[i / 8] >> (i % 8)) & 1);
        for (int r = 1; r <= 10; r++) {
            run_inplace(key_expand_round(r), s);
            for (Wire i = 0; i < 128; i++) {
                ASSERT_EQ(s.get(i), ((expected[r][i / 8] >> (i % 8)) & 1) != 0) << "round " << r;
            }
            for (Wire a = 128; a < 144; a++) ASSERT_FALSE(s.get(a));
        }
    }
}

TEST(KeyExpansion, UnexpandRestores) {
    std::mt19937_64 rng(52);
    for (int r = 1; r <= 10; r++) {
        BitState s(kKeyExpandWires);
        for (Wire i = 0; i < 128; i++) s.set(i, rng() & 1);
        auto after = run(key_unexpand_round(r), run(key_expand_round(r), s));
        EXPECT_EQ(after, s);
    }
}

TEST(KeyExpansion, PartCounts) {
    auto parts = key_expand_parts(1);
    ASSERT_EQ(parts.sboxes.size(), 4u);
    for (const auto &sb : parts.sboxes) EXPECT_EQ(resources(sb).cnot, 322u);
    EXPECT_EQ(resources(parts.others).cnot, 96u);
    EXPECT_EQ(resources(parts.rcon).not_, 1u);
}

TEST(Schedule, AggregateMultiplicities) {
    auto n = schedule_counts(zigzag_schedule());
    EXPECT_EQ(n.ark, 16u);
    EXPECT_EQ(n.sb, 256u);
    EXPECT_EQ(n.mc, 60u);
    EXPECT_EQ(n.sb_star, 72u);
    EXPECT_EQ(n.others, 18u);
    EXPECT_EQ(n.p, 4u);
    EXPECT_EQ(n.rc_not, 24u);
}

TEST(Schedule, RoundsAndInversesBalance) {
    int rounds = 0, inverses = 0;
    for (const auto &st : zigzag_schedule()) {
        rounds += st.kind == StepKind::ROUND;
        inverses += st.kind == StepKind::INVERSE_ROUND;
    }
    EXPECT_EQ(rounds, 10);
    EXPECT_EQ(inverses, 6);
}

TEST(Build, ResourcesForAllOnes) {
    ref::Block128 ones;
    ones.fill(0xff);
    auto b = build_aes128(ones, ones);
    auto r = resources(b.circuit);
    EXPECT_EQ(r.wires, 656u);
    EXPECT_EQ(r.ancilla_wires, 16u);
    EXPECT_EQ(r.toffoli, 18040u);
    EXPECT_EQ(r.toffoli, 55u * 256 + 55u * 72);
    EXPECT_EQ(r.not_, 1976u);
    EXPECT_EQ(b.breakdown.total(), count_gates(b.circuit.gates()));
    EXPECT_EQ(b.breakdown.applications("SB"), 256u);
    EXPECT_EQ(b.breakdown.applications("SB*"), 72u);
    EXPECT_EQ(b.breakdown.applications("MC"), 60u);
    EXPECT_EQ(b.breakdown.applications("ARK"), 16u);
    EXPECT_EQ(b.breakdown.applications("Others"), 18u);
    EXPECT_EQ(b.breakdown.applications("P"), 4u);
    EXPECT_EQ(b.breakdown.find("RC")->total.not_, 24u);
    EXPECT_EQ(b.breakdown.find("ARK")->total.cnot, 16u * 128);
}

TEST(Build, CnotMatchesPerOpDerivation) {
    auto b = build_aes128({}, {});
    EXPECT_EQ(resources(b.circuit).cnot, estimate(zigzag_cost_model()).report.cnot);
}

TEST(Build, PublishedVector) {
    auto run = simulate_aes128(ref::parse_block128("000102030405060708090a0b0c0d0e0f"),
                               ref::parse_block128("00112233445566778899aabbccddeeff"));
    EXPECT_EQ(ref::to_hex(run.ciphertext), "69c4e0d86a7b0430d8cdb78070b4c55a");
    EXPECT_EQ(run.zero_checks.size(), 6u);
    EXPECT_TRUE(run.zero_checks_ok());
}

TEST(Build, ZeroKeyAndPlaintext) {
    auto run = simulate_aes128({}, {});
    EXPECT_EQ(run.ciphertext, ref::aes128_encrypt({}, {}));
}

TEST(Build, RandomPairsMatchReference) {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20; i++) {
        auto key = random_block(rng), pt = random_block(rng);
        auto run = simulate_aes128(key, pt);
        EXPECT_EQ(run.ciphertext, ref::aes128_encrypt(key, pt)) << ref::to_hex(key) << " " << ref::to_hex(pt);
        for (const auto &z : run.zero_checks) EXPECT_TRUE(z.zero) << z.label;
    }
}

TEST(Build, OutputRegisterReadsCiphertext) {
    auto key = ref::parse_block128("2b7e151628aed2a6abf7158809cf4f3c");
    auto pt = ref::parse_block128("3243f6a8885a308d313198a2e0370734");
    auto b = build_aes128(key, pt);
    EXPECT_EQ(simulate_file(b.circuit), "3925841d02dc09fbdc118597196a0b32");
}

TEST(Estimate, ZigzagModel) {
    auto e = estimate(zigzag_cost_model());
    EXPECT_EQ(e.report.toffoli, 18040u);
    EXPECT_EQ(e.report.not_, 1976u);
    EXPECT_EQ(e.report.cnot, 2048u + 80384u + 23184u + 16620u + 1728u);
    EXPECT_EQ(e.report.cnot, 123964u);
}

TEST(Estimate, NewZigzagModel) {
    auto e = estimate(new_zigzag_cost_model());
    EXPECT_EQ(e.report.toffoli, 19064u);
    EXPECT_EQ(e.report.cnot, 118980u);
    EXPECT_EQ(e.report.not_, 4528u);
    EXPECT_EQ(e.qubits, 384u);
    EXPECT_EQ(e.ancilla_qubits, 16u);
}

TEST(Estimate, ZeroMultiplicities) {
    auto m = new_zigzag_cost_model();
    for (auto &op : m.ops) op.times = 0;
    m.qubits = m.ancilla_qubits = 0;
    EXPECT_EQ(estimate(m).report, ResourceReport{});
}
