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

#include <map>
#include <numeric>
#include <stdexcept>

#include "rqc/aes128.hpp"

namespace rqc::aes {

std::array<Wire, 128> shiftrows_permutation() {
    std::array<Wire, 128> p{};
    for (int c = 0; c < 4; c++) {
        for (int r = 0; r < 4; r++) {
            int dst = 4 * c + r;
            int src = 4 * ((c + r) % 4) + r;
            for (int b = 0; b < 8; b++) {
                p[8 * dst + b] = static_cast<Wire>(8 * src + b);
            }
        }
    }
    return p;
}

LinearSynthesis aes_mixcolumn() {
    static const LinearSynthesis synthesis = synth_plu(ref::aes_mixcolumn_matrix());
    return synthesis;
}

Circuit add_round_key(size_t wire_count, std::span<const Wire> key_wires, std::span<const Wire> state_wires) {
    if (key_wires.size() != state_wires.size()) {
        throw std::invalid_argument("key and state registers differ in size");
    }
    Circuit c(wire_count);
    for (size_t i = 0; i < key_wires.size(); i++) {
        c.cx(key_wires[i], state_wires[i]);
    }
    return c;
}

namespace {

// Byte j of the new first word takes S(byte kRotSource[j]) of the last word.
constexpr int kRotSource[4] = {13, 14, 15, 12};

}  // namespace

KeyExpandParts key_expand_parts(int round) {
    KeyExpandParts parts{{}, Circuit(kKeyExpandWires), Circuit(kKeyExpandWires)};
    const Circuit sbox = aes_subbytes(SboxMode::XOR);
    for (int j = 0; j < 4; j++) {
        std::array<Wire, kSboxWires> map{};
        for (Wire b = 0; b < 8; b++) {
            map[kSboxInput + b] = static_cast<Wire>(8 * kRotSource[j]) + b;
            map[kSboxOutput + b] = static_cast<Wire>(8 * j) + b;
        }
        for (Wire a = 0; a < kSboxAncillaCount; a++) {
            map[kSboxAncilla + a] = 128 + a;
        }
        Circuit part(kKeyExpandWires);
        part.append_mapped(sbox, map);
        parts.sboxes.push_back(std::move(part));
    }
    uint8_t rcon = ref::aes_rcon(round);
    for (Wire b = 0; b < 8; b++) {
        if ((rcon >> b) & 1) {
            parts.rcon.x(b);
        }
    }
    for (Wire w = 1; w < 4; w++) {
        for (Wire k = 0; k < 32; k++) {
            parts.others.cx(32 * (w - 1) + k, 32 * w + k);
        }
    }
    return parts;
}

Circuit key_expand_round(int round) {
    auto parts = key_expand_parts(round);
    Circuit c(kKeyExpandWires);
    for (const auto &s : parts.sboxes) {
        c.append_circuit(s);
    }
    c.append_circuit(parts.rcon);
    c.append_circuit(parts.others);
    return c;
}

Circuit key_unexpand_round(int round) { return invert(key_expand_round(round)); }

const char *step_kind_name(StepKind kind) {
    switch (kind) {
        case StepKind::KEY_INIT:
            return "KeyInit";
        case StepKind::PLAINTEXT_TOGGLE:
            return "PlaintextToggle";
        case StepKind::KEY_EXPAND:
            return "KeyExpand";
        case StepKind::KEY_UNEXPAND:
            return "KeyUnexpand";
        case StepKind::ADD_ROUND_KEY:
            return "AddRoundKey";
        case StepKind::ROUND:
            return "Round";
        case StepKind::INVERSE_ROUND:
            return "InverseRound";
    }
    return "?";
}

std::string ScheduleStep::str() const {
    std::string s = step_kind_name(kind);
    auto block = [](int b) { return b < 0 ? std::string("key") : std::string(1, static_cast<char>('A' + b)); };
    switch (kind) {
        case StepKind::KEY_INIT:
        case StepKind::PLAINTEXT_TOGGLE:
            return s;
        case StepKind::KEY_EXPAND:
        case StepKind::KEY_UNEXPAND:
            return s + "(" + std::to_string(index) + ")";
        case StepKind::ADD_ROUND_KEY:
            return s + "(K" + std::to_string(index) + " -> " + block(target) + ")";
        case StepKind::ROUND:
        case StepKind::INVERSE_ROUND:
            return s + "(" + std::to_string(index) + ", " + block(source) + " -> " + block(target) + ")";
    }
    return s;
}

std::vector<ScheduleStep> zigzag_schedule() {
    constexpr int K = -1, A = 0, B = 1, C = 2, D = 3;
    std::vector<ScheduleStep> s;
    auto init = [&] { s.push_back({StepKind::KEY_INIT}); };
    auto toggle = [&] { s.push_back({StepKind::PLAINTEXT_TOGGLE}); };
    auto expand = [&](int i) { s.push_back({StepKind::KEY_EXPAND, i}); };
    auto unexpand = [&](int i) { s.push_back({StepKind::KEY_UNEXPAND, i}); };
    auto ark = [&](int i, int block) { s.push_back({StepKind::ADD_ROUND_KEY, i, -1, block}); };
    auto round = [&](int i, int src, int dst) { s.push_back({StepKind::ROUND, i, src, dst}); };
    auto inverse = [&](int i, int src, int dst) { s.push_back({StepKind::INVERSE_ROUND, i, src, dst}); };

    init();
    toggle();
    round(1, K, A);
    toggle();
    expand(1);
    ark(1, A);
    round(2, A, B);
    expand(2);
    ark(2, B);
    round(3, B, C);
    expand(3);
    ark(3, C);
    round(4, C, D);
    ark(3, C);
    inverse(3, B, C);
    unexpand(3);
    ark(2, B);
    inverse(2, A, B);
    unexpand(2);
    ark(1, A);
    unexpand(1);
    toggle();
    inverse(1, K, A);
    toggle();
    for (int i = 1; i <= 4; i++) expand(i);
    ark(4, D);
    round(5, D, A);
    expand(5);
    ark(5, A);
    round(6, A, B);
    expand(6);
    ark(6, B);
    round(7, B, C);
    ark(6, B);
    inverse(6, A, B);
    unexpand(6);
    ark(5, A);
    inverse(5, D, A);
    expand(6);
    expand(7);
    ark(7, C);
    round(8, C, A);
    expand(8);
    ark(8, A);
    round(9, A, B);
    ark(8, A);
    inverse(8, C, A);
    expand(9);
    ark(9, B);
    round(10, B, A);
    expand(10);
    ark(10, A);
    return s;
}

ScheduleCounts schedule_counts(const std::vector<ScheduleStep> &schedule) {
    ScheduleCounts n;
    for (const auto &st : schedule) {
        switch (st.kind) {
            case StepKind::KEY_INIT:
                break;
            case StepKind::PLAINTEXT_TOGGLE:
                n.p++;
                break;
            case StepKind::KEY_EXPAND:
            case StepKind::KEY_UNEXPAND:
                (st.kind == StepKind::KEY_EXPAND ? n.key_expand : n.key_unexpand)++;
                n.sb_star += 4;
                n.others++;
                n.rc_not += static_cast<uint64_t>(std::popcount(ref::aes_rcon(st.index)));
                break;
            case StepKind::ADD_ROUND_KEY:
                n.ark++;
                break;
            case StepKind::ROUND:
            case StepKind::INVERSE_ROUND:
                n.sb += 16;
                if (st.index != 10) n.mc += 4;
                break;
        }
    }
    return n;
}

namespace {

constexpr Wire kKeyBase = 512;
constexpr Wire kAncillaBase = 640;

class AesBuilder {
   public:
    AesBuilder(const ref::Key128 &key, const ref::Block128 &plaintext)
        : key_(key), plaintext_(plaintext), emit_(out_.circuit, out_.breakdown) {
        out_.circuit = Circuit(AesLayout::kWires);
        for (Wire i = 0; i < 128; i++) out_.layout.key[i] = kKeyBase + i;
        for (Wire a = 0; a < 16; a++) out_.layout.ancilla[a] = kAncillaBase + a;
        for (size_t b = 0; b < AesLayout::kBlocks; b++) {
            for (Wire i = 0; i < 128; i++) {
                out_.layout.blocks[b][i] = static_cast<Wire>(128 * b) + i;
                map_[b][i] = out_.layout.blocks[b][i];
            }
        }
        sbox_ = aes_subbytes(SboxMode::FRESH);
        mc_ = aes_mixcolumn();
    }

    AesBuild build() {
        out_.schedule = zigzag_schedule();
        for (const auto &st : out_.schedule) step(st);
        finish();
        return std::move(out_);
    }

   private:
    void nots(std::string_view name, const ref::Block128 &value) {
        Circuit part(AesLayout::kWires);
        for (Wire i = 0; i < 128; i++) {
            if ((value[i / 8] >> (i % 8)) & 1) part.x(out_.layout.key[i]);
        }
        emit_.emit(name, part);
    }

    void key_step(int round, bool forward) {
        std::array<Wire, kKeyExpandWires> map{};
        for (Wire i = 0; i < 128; i++) map[i] = out_.layout.key[i];
        for (Wire a = 0; a < 16; a++) map[128 + a] = out_.layout.ancilla[a];
        auto parts = key_expand_parts(round);
        if (forward) {
            for (const auto &s : parts.sboxes) emit_.emit("SB*", s, map);
            emit_.emit("RC", parts.rcon, map);
            emit_.emit("Others", parts.others, map);
        } else {
            emit_.emit("Others", invert(parts.others), map);
            emit_.emit("RC", invert(parts.rcon), map);
            for (auto it = parts.sboxes.rbegin(); it != parts.sboxes.rend(); ++it) emit_.emit("SB*", invert(*it), map);
        }
    }

    std::span<const Wire> source_wires(int src) const {
        return src < 0 ? std::span<const Wire>(out_.layout.key) : std::span<const Wire>(map_[src]);
    }

    void round(const ScheduleStep &st) {
        int dst = st.target;
        // The target block is all-zero here, so any labelling of it is valid.
        map_[dst] = out_.layout.blocks[dst];
        auto src = source_wires(st.source);
        const auto sr = shiftrows_permutation();
        RoundCore core;
        for (int byte = 0; byte < 16; byte++) {
            std::array<Wire, kSboxWires> m{};
            for (Wire b = 0; b < 8; b++) {
                m[kSboxInput + b] = src[sr[8 * byte + b]];
                m[kSboxOutput + b] = map_[dst][8 * static_cast<Wire>(byte) + b];
            }
            for (Wire a = 0; a < 16; a++) m[kSboxAncilla + a] = out_.layout.ancilla[a];
            Circuit part(AesLayout::kWires);
            part.append_mapped(sbox_, m);
            emit_.emit("SB", part);
            core.sboxes.push_back(std::move(part));
        }
        if (st.index != 10) {
            for (Wire col = 0; col < 4; col++) {
                std::array<Wire, 32> m{};
                for (Wire k = 0; k < 32; k++) m[k] = map_[dst][32 * col + k];
                Circuit part(AesLayout::kWires);
                part.append_mapped(mc_.circuit, m);
                emit_.emit("MC", part);
                core.mixcolumns.push_back(std::move(part));
                for (Wire i = 0; i < 32; i++) map_[dst][32 * col + i] = m[mc_.output_wire[i]];
            }
        }
        cores_[st.index] = std::move(core);
    }

    void inverse_round(const ScheduleStep &st) {
        const RoundCore &core = cores_.at(st.index);
        for (auto it = core.mixcolumns.rbegin(); it != core.mixcolumns.rend(); ++it) emit_.emit("MC", invert(*it));
        for (auto it = core.sboxes.rbegin(); it != core.sboxes.rend(); ++it) emit_.emit("SB", invert(*it));
        map_[st.target] = out_.layout.blocks[st.target];
        out_.zero_checks.push_back({out_.circuit.size(), st.target, st.str()});
    }

    void step(const ScheduleStep &st) {
        switch (st.kind) {
            case StepKind::KEY_INIT:
                nots("IK", key_);
                break;
            case StepKind::PLAINTEXT_TOGGLE:
                nots("P", plaintext_);
                break;
            case StepKind::KEY_EXPAND:
                key_step(st.index, true);
                break;
            case StepKind::KEY_UNEXPAND:
                key_step(st.index, false);
                break;
            case StepKind::ADD_ROUND_KEY:
                emit_.emit("ARK", add_round_key(AesLayout::kWires, out_.layout.key, map_[st.target]));
                break;
            case StepKind::ROUND:
                round(st);
                out_block_ = st.target;
                break;
            case StepKind::INVERSE_ROUND:
                inverse_round(st);
                break;
        }
    }

    void finish() {
        auto &L = out_.layout;
        L.output_block = out_block_;
        L.output = map_[out_block_];
        Circuit &c = out_.circuit;
        c.add_register({"key", RegisterRole::KEY, {L.key.begin(), L.key.end()}});
        for (size_t b = 0; b < AesLayout::kBlocks; b++) {
            if (static_cast<int>(b) == out_block_) continue;
            for (size_t line = 0; line < 4; line++) {
                Register r{"line" + std::to_string(4 * b + line), RegisterRole::STATE_BLOCK, {}};
                r.wires.assign(L.blocks[b].begin() + 32 * line, L.blocks[b].begin() + 32 * (line + 1));
                c.add_register(std::move(r));
            }
        }
        // Ciphertext register in hex-digit order: most significant bit of byte 0 first.
        Register cipher{"ciphertext", RegisterRole::OUTPUT, {}};
        for (Wire byte = 0; byte < 16; byte++) {
            for (int b = 7; b >= 0; b--) cipher.wires.push_back(L.output[8 * byte + static_cast<Wire>(b)]);
        }
        c.add_register(std::move(cipher));
        c.add_register({"ancilla", RegisterRole::ANCILLA, {L.ancilla.begin(), L.ancilla.end()}});
    }

    struct RoundCore {
        std::vector<Circuit> sboxes;
        std::vector<Circuit> mixcolumns;
    };

    ref::Key128 key_;
    ref::Block128 plaintext_;
    AesBuild out_;
    Emitter emit_;
    Circuit sbox_;
    LinearSynthesis mc_;
    std::array<std::array<Wire, 128>, AesLayout::kBlocks> map_{};
    std::map<int, RoundCore> cores_;
    int out_block_ = 0;
};

}  // namespace

AesBuild build_aes128(const ref::Key128 &key, const ref::Block128 &plaintext) {
    return AesBuilder(key, plaintext).build();
}

Estimate estimate(const CostModel &model) {
    Estimate e;
    for (const auto &op : model.ops) {
        e.report.toffoli += op.toffoli * op.times;
        e.report.cnot += op.cnot * op.times;
        e.report.not_ += op.not_ * op.times;
    }
    e.qubits = model.qubits;
    e.ancilla_qubits = model.ancilla_qubits;
    e.report.wires = model.qubits + model.ancilla_qubits;
    e.report.ancilla_wires = model.ancilla_qubits;
    return e;
}

CostModel zigzag_cost_model() {
    auto n = schedule_counts(zigzag_schedule());
    CostModel m{"zigzag", {}, 640, 16};
    m.ops = {
        {"IK", 0, 0, 128, 1},       {"P", 0, 0, 128, n.p},         {"ARK", 0, 128, 0, n.ark},
        {"SB", 55, 314, 4, n.sb},   {"SB*", 55, 322, 4, n.sb_star}, {"MC", 0, 277, 0, n.mc},
        {"RC", 0, 0, n.rc_not, 1},  {"Others", 0, 96, 0, n.others},
    };
    return m;
}

CostModel new_zigzag_cost_model() {
    CostModel m{"new-zigzag-estimate", {}, 384, 16};
    m.ops = {
        {"IK", 0, 0, 128, 1},         {"P", 0, 0, 128, 4},        {"ARK", 0, 128, 0, 10},
        {"SB(r)", 55, 314, 4, 160},   {"SB(k)", 55, 322, 4, 40},  {"SB^-1", 63, 341, 24, 128},
        {"MC", 0, 277, 0, 36},        {"RC", 0, 0, 16, 1},        {"Others", 0, 96, 0, 10},
    };
    return m;
}

}  // namespace rqc::aes
