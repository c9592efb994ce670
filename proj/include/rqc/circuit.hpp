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

#ifndef RQC_CIRCUIT_HPP
#define RQC_CIRCUIT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rqc {

using Wire = uint32_t;

enum class GateKind : uint8_t { NOT, CNOT, TOFFOLI };

struct Gate {
    GateKind kind = GateKind::NOT;
    Wire target = 0;
    std::array<Wire, 2> controls{0, 0};

    static Gate x(Wire t) { return {GateKind::NOT, t, {0, 0}}; }
    static Gate cx(Wire c, Wire t) { return {GateKind::CNOT, t, {c, 0}}; }
    static Gate ccx(Wire c1, Wire c2, Wire t) { return {GateKind::TOFFOLI, t, {c1, c2}}; }

    size_t num_controls() const { return static_cast<size_t>(kind); }
    std::span<const Wire> control_wires() const { return {controls.data(), num_controls()}; }
    bool operator==(const Gate &other) const;
    std::string str() const;
};

enum class RegisterRole : uint8_t { KEY, STATE_BLOCK, ANCILLA, OUTPUT };

std::string_view role_name(RegisterRole role);
std::optional<RegisterRole> parse_role(std::string_view name);

struct Register {
    std::string name;
    RegisterRole role = RegisterRole::STATE_BLOCK;
    std::vector<Wire> wires;

    // Returns the first wire when the wires form an ascending run, otherwise nothing.
    std::optional<Wire> contiguous_start() const;
    bool operator==(const Register &other) const = default;
};

class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(size_t wire_count) : wire_count_(wire_count) {}

    size_t wire_count() const { return wire_count_; }
    const std::vector<Gate> &gates() const { return gates_; }
    const std::vector<Register> &registers() const { return registers_; }
    size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    // Throws std::invalid_argument on out-of-range or repeated wires.
    void append(const Gate &gate);
    void x(Wire t) { append(Gate::x(t)); }
    void cx(Wire c, Wire t) { append(Gate::cx(c, t)); }
    void ccx(Wire c1, Wire c2, Wire t) { append(Gate::ccx(c1, c2, t)); }

    // Appends every gate of `other`, sending its wire i to wire_map[i].
    void append_mapped(const Circuit &other, std::span<const Wire> wire_map);
    void append_circuit(const Circuit &other);

    // Throws std::invalid_argument when the register overlaps an existing one.
    void add_register(Register reg);
    const Register *find_register(std::string_view name) const;
    std::vector<const Register *> registers_with_role(RegisterRole role) const;

    bool operator==(const Circuit &other) const = default;

   private:
    size_t wire_count_ = 0;
    std::vector<Gate> gates_;
    std::vector<Register> registers_;
};

struct ResourceReport {
    uint64_t toffoli = 0;
    uint64_t cnot = 0;
    uint64_t not_ = 0;
    uint64_t wires = 0;
    uint64_t ancilla_wires = 0;
    uint64_t depth = 0;

    uint64_t gate_count() const { return toffoli + cnot + not_; }
    bool operator==(const ResourceReport &other) const = default;
};

Circuit append_gate(Circuit circuit, const Gate &gate);

// Gates of `a` followed by the gates of `b` relabelled through wire_map.
// Registers of `a` are kept; registers of `b` are dropped.
Circuit compose(const Circuit &a, const Circuit &b, std::span<const Wire> wire_map);

Circuit invert(const Circuit &circuit);

uint64_t depth(const Circuit &circuit);
ResourceReport resources(const Circuit &circuit);

// Gate counts only; wires, ancilla and depth are left at zero.
ResourceReport count_gates(std::span<const Gate> gates);

// Peak number of ancilla wires that sit between their first and last use.
uint64_t ancilla_high_water(const Circuit &circuit);

}  // namespace rqc

#endif
