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

// The S-box is compiled from the depth-16 Boyar-Peralta straight-line
// program. The nonlinear middle is split into a forward part F (stage-one products and
// the GF(16) inversion, 18 Toffolis into ancillas), 19 Toffolis that deposit
// the 18 output products onto the output byte, and the mirror image of F
// (18 Toffolis) that returns every ancilla to zero.
//
// Linear values are never stored separately: each wire carries a known
// XOR-combination ("form") of the inputs and earlier products, and an operand
// is produced by folding other wires into one that is allowed to change.

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rqc/aes128.hpp"

namespace rqc::aes {

namespace {

constexpr const char *kTop[] = {
    "T1 = U0 + U3",   "T2 = U0 + U5",   "T3 = U0 + U6",   "T4 = U3 + U5",   "T5 = U4 + U6",   "T6 = T1 + T5",
    "T7 = U1 + U2",   "T8 = U7 + T6",   "T9 = U7 + T7",   "T10 = T6 + T7",  "T11 = U1 + U5",  "T12 = U2 + U5",
    "T13 = T3 + T4",  "T14 = T6 + T11", "T15 = T5 + T11", "T16 = T5 + T12", "T17 = T9 + T16", "T18 = U3 + U7",
    "T19 = T7 + T18", "T20 = T1 + T19", "T21 = U6 + U7",  "T22 = T7 + T21", "T23 = T2 + T22", "T24 = T2 + T10",
    "T25 = T20 + T17", "T26 = T3 + T16", "T27 = T1 + T12",
};

constexpr const char *kMiddle[] = {
    "M1 = T13 x T6",  "M2 = T23 x T8",  "M3 = T14 + M1",  "M4 = T19 x U7",  "M5 = M4 + M1",   "M6 = T3 x T16",
    "M7 = T22 x T9",  "M8 = T26 + M6",  "M9 = T20 x T17", "M10 = M9 + M6",  "M11 = T1 x T15", "M12 = T4 x T27",
    "M13 = M12 + M11", "M14 = T2 x T10", "M15 = M14 + M11", "M16 = M3 + M2",  "M17 = M5 + T24", "M18 = M8 + M7",
    "M19 = M10 + M15", "M20 = M16 + M13", "M21 = M17 + M15", "M22 = M18 + M13", "M23 = M19 + T25", "M24 = M22 + M23",
    "M25 = M22 x M20", "M26 = M21 + M25", "M27 = M20 + M21", "M28 = M23 + M25", "M29 = M28 x M27", "M30 = M26 x M24",
    "M31 = M20 x M23", "M32 = M27 x M31", "M33 = M27 + M25", "M34 = M21 x M22", "M35 = M24 x M34", "M36 = M24 + M25",
    "M37 = M21 + M29", "M38 = M32 + M33", "M39 = M23 + M30", "M40 = M35 + M36", "M41 = M38 + M40", "M42 = M37 + M39",
    "M43 = M37 + M38", "M44 = M39 + M40", "M45 = M42 + M41", "M46 = M44 x T6",  "M47 = M40 x T8",  "M48 = M39 x U7",
    "M49 = M43 x T16", "M50 = M38 x T9",  "M51 = M37 x T17", "M52 = M42 x T15", "M53 = M45 x T27", "M54 = M41 x T10",
    "M55 = M44 x T13", "M56 = M40 x T23", "M57 = M39 x T19", "M58 = M43 x T3",  "M59 = M38 x T22", "M60 = M37 x T20",
    "M61 = M42 x T1",  "M62 = M45 x T4",  "M63 = M41 x T2",
};

// '#' is XNOR.
constexpr const char *kBottom[] = {
    "L0 = M61 + M62",  "L1 = M50 + M56",  "L2 = M46 + M48",  "L3 = M47 + M55",  "L4 = M54 + M58",  "L5 = M49 + M61",
    "L6 = M62 + L5",   "L7 = M46 + L3",   "L8 = M51 + M59",  "L9 = M52 + M53",  "L10 = M53 + L4",  "L11 = M60 + L2",
    "L12 = M48 + M51", "L13 = M50 + L0",  "L14 = M52 + M61", "L15 = M55 + L1",  "L16 = M56 + L0",  "L17 = M57 + L1",
    "L18 = M58 + L8",  "L19 = M63 + L4",  "L20 = L0 + L1",   "L21 = L1 + L7",   "L22 = L3 + L12",  "L23 = L18 + L2",
    "L24 = L15 + L9",  "L25 = L6 + L10",  "L26 = L7 + L9",   "L27 = L8 + L10",  "L28 = L11 + L14", "L29 = L11 + L17",
    "S0 = L6 + L24",   "S1 = L16 # L26",  "S2 = L19 # L28",  "S3 = L6 + L21",   "S4 = L20 + L22",  "S5 = L25 + L29",
    "S6 = L13 # L27",  "S7 = L6 # L23",
};

struct Line {
    std::string dst, a, b;
    char op;
};

std::vector<Line> parse_program(std::span<const char *const> text) {
    std::vector<Line> out;
    for (std::string_view s : text) {
        auto eq = s.find(" = ");
        auto rest = s.substr(eq + 3);
        auto sp = rest.find(' ');
        out.push_back({std::string(s.substr(0, eq)), std::string(rest.substr(0, sp)), std::string(rest.substr(sp + 3)),
                       rest[sp + 1]});
    }
    return out;
}

// Output-network CNOTs on the fix-up figure's wires (output bits 0..7).
constexpr std::pair<Wire, Wire> kOutputFix[] = {{2, 5}, {7, 2}, {1, 3}, {6, 7}, {0, 6}, {7, 1}, {1, 4}, {0, 1}};

// Engine-internal wire numbering: 0..7 carry U0..U7 (U0 is the most
// significant input bit), 8..23 are ancillas, 24..31 are output bits 0..7.
constexpr Wire kIn = 8;
constexpr Wire kWork = 24;
constexpr Wire kOut0 = 24;

Wire to_local(Wire w) {
    if (w < kIn) return 7 - w;
    if (w < kWork) return w + 8;
    return w - 16;
}

using Form = uint64_t;

class Engine {
   public:
    Engine() {
        for (Wire w = 0; w < kIn; w++) {
            form_[w] = Form{1} << w;
        }
    }

    void cx(Wire c, Wire t) {
        gates_.push_back(Gate::cx(c, t));
        if (t < kWork) {
            form_[t] ^= form_[c];
        }
    }
    void raw(const Gate &g) { gates_.push_back(g); }
    void flip_form(Wire w, Form f) { form_[w] ^= f; }

    // Wires (ascending) whose forms XOR to v, or nothing.
    std::optional<std::vector<Wire>> solve(Form v, std::optional<Wire> exclude = std::nullopt) const {
        struct Row {
            int pivot;
            Form f;
            uint32_t mask;
        };
        std::vector<Row> basis;
        for (Wire w = 0; w < kWork; w++) {
            if (exclude && *exclude == w) continue;
            Form f = form_[w];
            uint32_t m = uint32_t{1} << w;
            for (const auto &r : basis) {
                if ((f >> r.pivot) & 1) {
                    f ^= r.f;
                    m ^= r.mask;
                }
            }
            if (f) basis.push_back({static_cast<int>(std::bit_width(f)) - 1, f, m});
        }
        uint32_t m = 0;
        for (const auto &r : basis) {
            if ((v >> r.pivot) & 1) {
                v ^= r.f;
                m ^= r.mask;
            }
        }
        if (v) return std::nullopt;
        std::vector<Wire> out;
        for (Wire w = 0; w < kWork; w++) {
            if ((m >> w) & 1) out.push_back(w);
        }
        return out;
    }

    // Puts form v on some wire outside `protect` and returns that wire.
    Wire ensure(Form v, std::initializer_list<Wire> protect) {
        for (Wire w = 0; w < kWork; w++) {
            if (form_[w] == v) return w;
        }
        auto sup = solve(v);
        if (!sup) throw std::logic_error("S-box operand is outside the span of the wires");
        Wire target = kWork;
        for (Wire w : *sup) {
            if (std::find(protect.begin(), protect.end(), w) == protect.end()) {
                target = w;
                break;
            }
        }
        if (target == kWork) throw std::logic_error("no free wire for an S-box operand");
        for (Wire w : *sup) {
            if (w != target) cx(w, target);
        }
        return target;
    }

    void set_wire(Wire w, Form v) {
        Form d = v ^ form_[w];
        if (!d) return;
        auto sup = solve(d, w);
        if (!sup) throw std::logic_error("S-box wire value is outside the span of the wires");
        for (Wire o : *sup) cx(o, w);
    }

    Form atom(Form a, Form b) {
        auto key = std::minmax(a, b);
        auto it = atoms_.find(key);
        if (it != atoms_.end()) return it->second;
        Form f = Form{1} << next_atom_++;
        atoms_.emplace(key, f);
        return f;
    }

    std::pair<Wire, Wire> toffoli(Form a, Form b, Wire t) {
        Wire wa = ensure(a, {t});
        Wire wb = ensure(b, {wa, t});
        gates_.push_back(Gate::ccx(wa, wb, t));
        if (t < kWork) form_[t] ^= atom(a, b);
        return {wa, wb};
    }

    std::vector<Gate> &gates() { return gates_; }
    Form form(Wire w) const { return form_[w]; }

   private:
    std::array<Form, kWork> form_{};
    std::vector<Gate> gates_;
    std::map<std::pair<Form, Form>, Form> atoms_;
    int next_atom_ = static_cast<int>(kIn);
};

// Order in which the 18 output products are deposited, and the product that
// goes through a scratch ancilla and is fanned out by CNOTs.
constexpr int kProductOrder[18] = {15, 8, 7, 0, 16, 3, 13, 4, 11, 5, 10, 17, 14, 1, 12, 9, 6, 2};
constexpr int kFanoutProduct = 5;

Circuit build_fresh_sbox() {
    auto top = parse_program(kTop);
    auto middle = parse_program(kMiddle);
    auto bottom = parse_program(kBottom);

    std::map<std::string, Form> f;
    for (int i = 0; i < 8; i++) f["U" + std::to_string(i)] = Form{1} << i;
    for (const auto &l : top) f[l.dst] = f.at(l.a) ^ f.at(l.b);

    Engine e;
    auto linear_pass = [&]() {
        for (const auto &l : middle) {
            if (l.op == '+' && !f.count(l.dst) && f.count(l.a) && f.count(l.b)) f[l.dst] = f.at(l.a) ^ f.at(l.b);
        }
    };
    auto settle = [&]() {
        for (int k = 0; k < 5; k++) linear_pass();
    };

    // F, stage one: nine products into ancillas 8..16.
    const char *stage1[9][3] = {{"M1", "T13", "T6"},  {"M2", "T23", "T8"},  {"M4", "T19", "U7"},
                                {"M6", "T3", "T16"},  {"M7", "T22", "T9"},  {"M9", "T20", "T17"},
                                {"M11", "T1", "T15"}, {"M12", "T4", "T27"}, {"M14", "T2", "T10"}};
    std::map<std::string, Wire> host;
    for (int i = 0; i < 9; i++) {
        Wire w = kIn + static_cast<Wire>(i);
        e.toffoli(f.at(stage1[i][1]), f.at(stage1[i][2]), w);
        f[stage1[i][0]] = e.atom(f.at(stage1[i][1]), f.at(stage1[i][2]));
        host[stage1[i][0]] = w;
    }
    settle();
    e.set_wire(host["M2"], f.at("M20"));
    e.set_wire(host["M4"], f.at("M21"));
    e.set_wire(host["M7"], f.at("M22"));
    e.set_wire(host["M9"], f.at("M23"));

    // F, inversion in GF(16): ancillas 17..23.
    const Wire a25 = 17, a29 = 18, a30 = 19, t1 = 20, a32 = 21, t2 = 22, a35 = 23;
    auto product = [&](const char *dst, const char *a, const char *b, Wire w) {
        e.toffoli(f.at(a), f.at(b), w);
        f[dst] = e.atom(f.at(a), f.at(b));
    };
    product("M25", "M22", "M20", a25);
    linear_pass();
    product("M29", "M28", "M27", a29);
    product("M30", "M26", "M24", a30);
    product("M31", "M20", "M23", t1);
    product("M32", "M27", "M31", a32);
    e.toffoli(f.at("M20"), f.at("M23"), t1);
    product("M34", "M21", "M22", t2);
    product("M35", "M24", "M34", a35);
    e.toffoli(f.at("M21"), f.at("M22"), t2);
    settle();
    const std::vector<Gate> forward = e.gates();

    // Output products and their images on the output byte.
    struct OutProduct {
        std::string a, b;
        uint8_t image;
    };
    std::vector<OutProduct> products;
    for (const auto &l : middle) {
        if (l.op != 'x' || std::stoi(l.dst.substr(1)) < 46) continue;
        std::map<std::string, int> val;
        for (const auto &m : middle) {
            if (m.op == 'x' && std::stoi(m.dst.substr(1)) >= 46) val[m.dst] = (m.dst == l.dst);
        }
        for (const auto &b : bottom) val[b.dst] = val.at(b.a) ^ val.at(b.b);
        uint8_t image = 0;
        for (int j = 0; j < 8; j++) image |= static_cast<uint8_t>(val.at("S" + std::to_string(7 - j)) << j);
        products.push_back({l.a, l.b, image});
    }

    // The network still owed on the output byte, as columns over output bits.
    // It starts as the inverse of the fix-up so that the fix-up followed by
    // this circuit realizes y ^ S(x).
    Circuit fix = output_affine_fix();
    BinaryMatrix remaining = circuit_to_matrix(fix).inverse();
    std::array<uint8_t, 8> col{};
    for (int j = 0; j < 8; j++) {
        for (int i = 0; i < 8; i++) col[j] |= static_cast<uint8_t>(remaining.get(i, j) << i);
    }
    auto express = [&](uint8_t v) {
        struct Row {
            int pivot;
            uint8_t f;
            uint8_t mask;
        };
        std::vector<Row> basis;
        for (int j = 0; j < 8; j++) {
            uint8_t fv = col[j];
            uint8_t m = static_cast<uint8_t>(1 << j);
            for (const auto &r : basis) {
                if ((fv >> r.pivot) & 1) {
                    fv ^= r.f;
                    m ^= r.mask;
                }
            }
            basis.push_back({std::bit_width(fv) - 1, fv, m});
        }
        uint8_t m = 0;
        for (const auto &r : basis) {
            if ((v >> r.pivot) & 1) {
                v ^= r.f;
                m ^= r.mask;
            }
        }
        std::vector<Wire> out;
        for (Wire j = 0; j < 8; j++) {
            if ((m >> j) & 1) out.push_back(j);
        }
        return out;
    };

    size_t phase_b = e.gates().size();
    for (int idx : kProductOrder) {
        const auto &p = products[static_cast<size_t>(idx)];
        Form fa = f.at(p.a), fb = f.at(p.b);
        auto sup = express(p.image);
        if (idx == kFanoutProduct) {
            auto [wa, wb] = e.toffoli(fa, fb, t1);
            for (Wire j : sup) e.raw(Gate::cx(t1, kOut0 + j));
            e.raw(Gate::ccx(wa, wb, t1));
            e.flip_form(t1, e.atom(fa, fb));
            continue;
        }
        Wire w = sup[0];
        for (Wire j : sup) {
            if (j != w) {
                e.raw(Gate::cx(kOut0 + w, kOut0 + j));
                col[w] ^= col[j];
            }
        }
        e.toffoli(fa, fb, kOut0 + w);
    }
    auto bit = [&](int j, int i) { return (col[j] >> i) & 1; };
    for (int c = 0; c < 8; c++) {
        if (!bit(c, c)) {
            int p = c + 1;
            while (!bit(p, c)) p++;
            e.raw(Gate::cx(kOut0 + c, kOut0 + p));
            col[c] ^= col[p];
        }
        for (int j = 0; j < 8; j++) {
            if (j != c && bit(j, c)) {
                e.raw(Gate::cx(kOut0 + j, kOut0 + c));
                col[j] ^= col[c];
            }
        }
    }
    std::vector<Gate> moves;
    for (size_t k = phase_b; k < e.gates().size(); k++) {
        const Gate &g = e.gates()[k];
        if (g.kind == GateKind::CNOT && g.target < kWork && g.controls[0] < kWork) moves.push_back(g);
    }
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) e.raw(*it);
    // XNOR outputs S1, S2, S6, S7 are output bits 6, 5, 1, 0.
    for (int s : {1, 2, 6, 7}) e.raw(Gate::x(kOut0 + static_cast<Wire>(7 - s)));
    for (auto it = forward.rbegin(); it != forward.rend(); ++it) e.raw(*it);

    Circuit c(kSboxWires);
    for (Gate g : e.gates()) {
        g.target = to_local(g.target);
        for (size_t k = 0; k < g.num_controls(); k++) g.controls[k] = to_local(g.controls[k]);
        c.append(g);
    }
    return c;
}

}  // namespace

Circuit output_affine_fix() {
    Circuit c(8);
    for (auto [ctl, tgt] : kOutputFix) c.cx(ctl, tgt);
    return c;
}

Circuit aes_subbytes(SboxMode mode) {
    static const Circuit fresh = build_fresh_sbox();
    if (mode == SboxMode::FRESH) return fresh;
    Circuit c(kSboxWires);
    std::array<Wire, 8> out{};
    for (Wire j = 0; j < 8; j++) out[j] = kSboxOutput + j;
    c.append_mapped(output_affine_fix(), out);
    c.append_circuit(fresh);
    return c;
}

}  // namespace rqc::aes
