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

#include "rqc/rqc_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace rqc {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) i++;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') j++;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

uint64_t number(std::string_view tok, size_t line) {
    uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
        throw ParseError(line, "expected a decimal number, got '" + std::string(tok) + "'");
    }
    return v;
}

Wire wire(std::string_view tok, size_t line) {
    uint64_t v = number(tok, line);
    if (v > UINT32_MAX) throw ParseError(line, "wire index out of range");
    return static_cast<Wire>(v);
}

void expect_args(const std::vector<std::string_view> &t, size_t n, size_t line) {
    if (t.size() != n) {
        throw ParseError(line, "'" + std::string(t[0]) + "' takes " + std::to_string(n - 1) + " operands");
    }
}

}  // namespace

std::string write_rqc(const Circuit &c) {
    std::ostringstream os;
    os << "rqc 1\n";
    os << "wires " << c.wire_count() << "\n";
    for (const auto &r : c.registers()) {
        if (r.wires.empty()) throw std::invalid_argument("register '" + r.name + "' is empty");
        auto lo = *std::min_element(r.wires.begin(), r.wires.end());
        std::vector<Wire> sorted = r.wires;
        std::sort(sorted.begin(), sorted.end());
        for (size_t k = 0; k < sorted.size(); k++) {
            if (sorted[k] != lo + k) {
                throw std::invalid_argument("register '" + r.name + "' does not occupy a contiguous wire range");
            }
        }
        os << "reg " << r.name << " " << role_name(r.role) << " " << lo << " " << r.wires.size() << "\n";
        if (sorted != r.wires) {
            os << "#! order " << r.name;
            for (Wire w : r.wires) os << " " << w;
            os << "\n";
        }
    }
    for (const auto &g : c.gates()) {
        switch (g.kind) {
            case GateKind::NOT:
                os << "x " << g.target << "\n";
                break;
            case GateKind::CNOT:
                os << "cx " << g.controls[0] << " " << g.target << "\n";
                break;
            case GateKind::TOFFOLI:
                os << "ccx " << g.controls[0] << " " << g.controls[1] << " " << g.target << "\n";
                break;
        }
    }
    return os.str();
}

Circuit parse_rqc(std::string_view text) {
    Circuit c;
    std::vector<Register> regs;
    bool have_magic = false, have_wires = false;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;

        if (line.starts_with("#!")) {
            auto t = split(line.substr(2));
            if (t.size() >= 2 && t[0] == "order") {
                auto it = std::find_if(regs.begin(), regs.end(), [&](const Register &r) { return r.name == t[1]; });
                if (it == regs.end()) throw ParseError(line_no, "order for unknown register '" + std::string(t[1]) + "'");
                std::vector<Wire> order;
                for (size_t k = 2; k < t.size(); k++) order.push_back(wire(t[k], line_no));
                std::vector<Wire> a = order, b = it->wires;
                std::sort(a.begin(), a.end());
                if (a != b) throw ParseError(line_no, "order is not a permutation of register '" + it->name + "'");
                it->wires = std::move(order);
            }
            continue;
        }
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto t = split(line);
        if (t.empty()) continue;

        if (!have_magic) {
            if (t.size() != 2 || t[0] != "rqc" || t[1] != "1") throw ParseError(line_no, "expected header 'rqc 1'");
            have_magic = true;
            continue;
        }
        if (!have_wires) {
            if (t.size() != 2 || t[0] != "wires") throw ParseError(line_no, "expected 'wires N'");
            c = Circuit(number(t[1], line_no));
            have_wires = true;
            continue;
        }
        try {
            if (t[0] == "reg") {
                expect_args(t, 5, line_no);
                auto role = parse_role(t[2]);
                if (!role) throw ParseError(line_no, "unknown register role '" + std::string(t[2]) + "'");
                uint64_t first = number(t[3], line_no), count = number(t[4], line_no);
                if (count == 0 || first + count > c.wire_count()) throw ParseError(line_no, "register outside the wire range");
                Register r{std::string(t[1]), *role, {}};
                for (uint64_t k = 0; k < count; k++) r.wires.push_back(static_cast<Wire>(first + k));
                regs.push_back(std::move(r));
            } else if (t[0] == "x") {
                expect_args(t, 2, line_no);
                c.x(wire(t[1], line_no));
            } else if (t[0] == "cx") {
                expect_args(t, 3, line_no);
                c.cx(wire(t[1], line_no), wire(t[2], line_no));
            } else if (t[0] == "ccx") {
                expect_args(t, 4, line_no);
                c.ccx(wire(t[1], line_no), wire(t[2], line_no), wire(t[3], line_no));
            } else {
                throw ParseError(line_no, "unknown statement '" + std::string(t[0]) + "'");
            }
        } catch (const std::invalid_argument &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!have_magic) throw ParseError(line_no, "missing header 'rqc 1'");
    if (!have_wires) throw ParseError(line_no, "missing 'wires N'");
    for (auto &r : regs) {
        try {
            c.add_register(std::move(r));
        } catch (const std::invalid_argument &e) {
            throw ParseError(line_no, e.what());
        }
    }
    return c;
}

Circuit load_rqc(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_rqc(ss.str());
}

void save_rqc(const Circuit &c, const std::filesystem::path &path) {
    std::string text = write_rqc(c);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + path.string());
}

std::string write_qasm(const Circuit &c) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << c.wire_count() << "];\n";
    for (const auto &g : c.gates()) {
        switch (g.kind) {
            case GateKind::NOT:
                os << "x q[" << g.target << "];\n";
                break;
            case GateKind::CNOT:
                os << "cx q[" << g.controls[0] << "], q[" << g.target << "];\n";
                break;
            case GateKind::TOFFOLI:
                os << "ccx q[" << g.controls[0] << "], q[" << g.controls[1] << "], q[" << g.target << "];\n";
                break;
        }
    }
    return os.str();
}

}  // namespace rqc
