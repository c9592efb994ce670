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

#include "rqc/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace rqc {

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind || target != other.target) {
        return false;
    }
    for (size_t k = 0; k < num_controls(); k++) {
        if (controls[k] != other.controls[k]) {
            return false;
        }
    }
    return true;
}

std::string Gate::str() const {
    switch (kind) {
        case GateKind::NOT:
            return "x " + std::to_string(target);
        case GateKind::CNOT:
            return "cx " + std::to_string(controls[0]) + " " + std::to_string(target);
        case GateKind::TOFFOLI:
            return "ccx " + std::to_string(controls[0]) + " " + std::to_string(controls[1]) + " " +
                   std::to_string(target);
    }
    return "?";
}

std::string_view role_name(RegisterRole role) {
    switch (role) {
        case RegisterRole::KEY:
            return "key";
        case RegisterRole::STATE_BLOCK:
            return "state-block";
        case RegisterRole::ANCILLA:
            return "ancilla";
        case RegisterRole::OUTPUT:
            return "output";
    }
    return "?";
}

std::optional<RegisterRole> parse_role(std::string_view name) {
    for (auto role : {RegisterRole::KEY, RegisterRole::STATE_BLOCK, RegisterRole::ANCILLA, RegisterRole::OUTPUT}) {
        if (role_name(role) == name) {
            return role;
        }
    }
    return std::nullopt;
}

std::optional<Wire> Register::contiguous_start() const {
    if (wires.empty()) {
        return std::nullopt;
    }
    for (size_t k = 1; k < wires.size(); k++) {
        if (wires[k] != wires[0] + k) {
            return std::nullopt;
        }
    }
    return wires[0];
}

void Circuit::append(const Gate &gate) {
    auto controls = gate.control_wires();
    if (gate.target >= wire_count_) {
        throw std::invalid_argument("gate '" + gate.str() + "' targets a wire outside the circuit");
    }
    for (size_t k = 0; k < controls.size(); k++) {
        if (controls[k] >= wire_count_) {
            throw std::invalid_argument("gate '" + gate.str() + "' uses a wire outside the circuit");
        }
        if (controls[k] == gate.target || (k == 1 && controls[0] == controls[1])) {
            throw std::invalid_argument("gate '" + gate.str() + "' uses the same wire twice");
        }
    }
    gates_.push_back(gate);
}

void Circuit::append_mapped(const Circuit &other, std::span<const Wire> wire_map) {
    if (wire_map.size() < other.wire_count()) {
        throw std::invalid_argument("wire map is shorter than the appended circuit");
    }
    std::vector<Wire> seen(wire_map.begin(), wire_map.begin() + static_cast<ptrdiff_t>(other.wire_count()));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw std::invalid_argument("wire map is not injective");
    }
    if (!seen.empty() && seen.back() >= wire_count_) {
        throw std::invalid_argument("wire map leaves the circuit");
    }
    gates_.reserve(gates_.size() + other.size());
    for (Gate g : other.gates()) {
        g.target = wire_map[g.target];
        for (size_t k = 0; k < g.num_controls(); k++) {
            g.controls[k] = wire_map[g.controls[k]];
        }
        gates_.push_back(g);
    }
}

void Circuit::append_circuit(const Circuit &other) {
    if (other.wire_count() > wire_count_) {
        throw std::invalid_argument("appended circuit is wider than the target");
    }
    gates_.insert(gates_.end(), other.gates().begin(), other.gates().end());
}

void Circuit::add_register(Register reg) {
    std::vector<bool> used(wire_count_, false);
    for (const auto &r : registers_) {
        if (r.name == reg.name) {
            throw std::invalid_argument("duplicate register name '" + reg.name + "'");
        }
        for (Wire w : r.wires) {
            used[w] = true;
        }
    }
    for (Wire w : reg.wires) {
        if (w >= wire_count_) {
            throw std::invalid_argument("register '" + reg.name + "' leaves the circuit");
        }
        if (used[w]) {
            throw std::invalid_argument("register '" + reg.name + "' overlaps another register");
        }
        used[w] = true;
    }
    registers_.push_back(std::move(reg));
}

const Register *Circuit::find_register(std::string_view name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

std::vector<const Register *> Circuit::registers_with_role(RegisterRole role) const {
    std::vector<const Register *> out;
    for (const auto &r : registers_) {
        if (r.role == role) {
            out.push_back(&r);
        }
    }
    return out;
}

Circuit append_gate(Circuit circuit, const Gate &gate) {
    circuit.append(gate);
    return circuit;
}

Circuit compose(const Circuit &a, const Circuit &b, std::span<const Wire> wire_map) {
    Circuit out = a;
    out.append_mapped(b, wire_map);
    return out;
}

Circuit invert(const Circuit &circuit) {
    Circuit out(circuit.wire_count());
    for (const auto &r : circuit.registers()) {
        out.add_register(r);
    }
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        out.append(*it);
    }
    return out;
}

uint64_t depth(const Circuit &circuit) {
    std::vector<uint64_t> level(circuit.wire_count(), 0);
    uint64_t result = 0;
    for (const auto &g : circuit.gates()) {
        uint64_t d = level[g.target];
        for (Wire c : g.control_wires()) {
            d = std::max(d, level[c]);
        }
        d++;
        level[g.target] = d;
        for (Wire c : g.control_wires()) {
            level[c] = d;
        }
        result = std::max(result, d);
    }
    return result;
}

ResourceReport count_gates(std::span<const Gate> gates) {
    ResourceReport r;
    for (const auto &g : gates) {
        switch (g.kind) {
            case GateKind::NOT:
                r.not_++;
                break;
            case GateKind::CNOT:
                r.cnot++;
                break;
            case GateKind::TOFFOLI:
                r.toffoli++;
                break;
        }
    }
    return r;
}

ResourceReport resources(const Circuit &circuit) {
    ResourceReport r = count_gates(circuit.gates());
    r.wires = circuit.wire_count();
    for (const auto *reg : circuit.registers_with_role(RegisterRole::ANCILLA)) {
        r.ancilla_wires += reg->wires.size();
    }
    r.depth = depth(circuit);
    return r;
}

uint64_t ancilla_high_water(const Circuit &circuit) {
    constexpr size_t kUnused = SIZE_MAX;
    std::vector<size_t> first(circuit.wire_count(), kUnused);
    std::vector<size_t> last(circuit.wire_count(), 0);
    const auto &gates = circuit.gates();
    for (size_t k = 0; k < gates.size(); k++) {
        auto touch = [&](Wire w) {
            if (first[w] == kUnused) {
                first[w] = k;
            }
            last[w] = k;
        };
        touch(gates[k].target);
        for (Wire c : gates[k].control_wires()) {
            touch(c);
        }
    }
    std::vector<int64_t> delta(gates.size() + 1, 0);
    for (const auto *reg : circuit.registers_with_role(RegisterRole::ANCILLA)) {
        for (Wire w : reg->wires) {
            if (first[w] != kUnused) {
                delta[first[w]]++;
                delta[last[w] + 1]--;
            }
        }
    }
    int64_t live = 0;
    int64_t peak = 0;
    for (int64_t d : delta) {
        live += d;
        peak = std::max(peak, live);
    }
    return static_cast<uint64_t>(peak);
}

}  // namespace rqc
