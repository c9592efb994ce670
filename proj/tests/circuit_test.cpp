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

#include <gtest/gtest.h>

#include <array>
#include <stdexcept>

#include "rqc/saes.hpp"

using namespace rqc;

TEST(Gate, AppendToEmptyCircuit) {
    Circuit c = append_gate(Circuit(2), Gate::cx(0, 1));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.gates()[0], Gate::cx(0, 1));
}

TEST(Gate, RejectsDuplicateWire) { EXPECT_THROW(append_gate(Circuit(2), Gate::ccx(0, 0, 1)), std::invalid_argument); }

TEST(Gate, RejectsOutOfRange) { EXPECT_THROW(append_gate(Circuit(4), Gate::x(5)), std::invalid_argument); }

TEST(Gate, ControlCountMatchesKind) {
    EXPECT_EQ(Gate::x(0).num_controls(), 0u);
    EXPECT_EQ(Gate::cx(0, 1).num_controls(), 1u);
    EXPECT_EQ(Gate::ccx(0, 1, 2).num_controls(), 2u);
}

TEST(Gate, AppendKeepsPriorGates) {
    Circuit c(3);
    c.x(0);
    c.cx(0, 1);
    Circuit d = append_gate(c, Gate::ccx(0, 1, 2));
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d.gates()[0], c.gates()[0]);
    EXPECT_EQ(d.gates()[1], c.gates()[1]);
}

TEST(Compose, EmptyRightIsIdentity) {
    Circuit a(3);
    a.ccx(0, 1, 2);
    a.x(1);
    std::array<Wire, 3> map{0, 1, 2};
    EXPECT_EQ(compose(a, Circuit(3), map), a);
}

TEST(Compose, RemapsWires) {
    Circuit a(4);
    Circuit b(2);
    b.cx(0, 1);
    std::array<Wire, 2> map{3, 1};
    Circuit c = compose(a, b, map);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.gates()[0], Gate::cx(3, 1));
}

TEST(Compose, RejectsBadMaps) {
    Circuit a(4), b(2);
    b.cx(0, 1);
    std::array<Wire, 2> dup{1, 1};
    std::array<Wire, 2> out{1, 4};
    std::array<Wire, 1> short_map{0};
    EXPECT_THROW(compose(a, b, dup), std::invalid_argument);
    EXPECT_THROW(compose(a, b, out), std::invalid_argument);
    EXPECT_THROW(compose(a, b, short_map), std::invalid_argument);
}

TEST(Compose, SaesSubBytesLayers) {
    auto parts = saes::saes_subbytes_parts(false, saes::SboxMode::FRESH);
    auto r = resources(parts.core);
    EXPECT_EQ(r.toffoli, 14u);
    EXPECT_EQ(r.not_, 2u);
    // Basis change and merged affine contribute 4 + 8; the rest is the inversion figure.
    EXPECT_EQ(r.cnot, 4u + resources(saes::gf16_inversion()).cnot + 8u);
}

TEST(Invert, Empty) { EXPECT_EQ(invert(Circuit(5)), Circuit(5)); }

TEST(Invert, ReversesOrder) {
    Circuit c(3);
    c.x(0);
    c.cx(0, 1);
    c.ccx(0, 1, 2);
    Circuit i = invert(c);
    ASSERT_EQ(i.size(), 3u);
    EXPECT_EQ(i.gates()[0], Gate::ccx(0, 1, 2));
    EXPECT_EQ(i.gates()[2], Gate::x(0));
    EXPECT_EQ(invert(i), c);
}

TEST(Resources, EmptyCircuit) {
    auto r = resources(Circuit());
    EXPECT_EQ(r, ResourceReport{});
}

TEST(Resources, CountsByKindAndAncillaRole) {
    Circuit c(6);
    c.add_register({"a", RegisterRole::ANCILLA, {4, 5}});
    c.add_register({"k", RegisterRole::KEY, {0, 1}});
    c.x(0);
    c.cx(0, 4);
    c.ccx(0, 1, 5);
    c.cx(1, 2);
    auto r = resources(c);
    EXPECT_EQ(r.not_, 1u);
    EXPECT_EQ(r.cnot, 2u);
    EXPECT_EQ(r.toffoli, 1u);
    EXPECT_EQ(r.wires, 6u);
    EXPECT_EQ(r.ancilla_wires, 2u);
    EXPECT_EQ(r.gate_count(), 4u);
}

TEST(Depth, DisjointGatesShareALayer) {
    Circuit c(4);
    c.cx(0, 1);
    c.cx(2, 3);
    EXPECT_EQ(depth(c), 1u);
}

TEST(Depth, SharedWireSerializes) {
    Circuit c(3);
    c.cx(0, 1);
    c.cx(1, 2);
    EXPECT_EQ(depth(c), 2u);
}

TEST(Depth, ZeroIffEmpty) {
    EXPECT_EQ(depth(Circuit(3)), 0u);
    Circuit c(3);
    c.x(2);
    EXPECT_EQ(depth(c), 1u);
}

TEST(Depth, InvariantUnderRelabel) {
    Circuit c(4);
    c.cx(0, 1);
    c.ccx(1, 2, 3);
    c.x(0);
    c.cx(3, 0);
    std::array<Wire, 4> perm{2, 0, 3, 1};
    EXPECT_EQ(depth(compose(Circuit(4), c, perm)), depth(c));
}

TEST(Registers, RejectOverlapAndDuplicates) {
    Circuit c(8);
    c.add_register({"a", RegisterRole::KEY, {0, 1, 2}});
    EXPECT_THROW(c.add_register({"b", RegisterRole::ANCILLA, {2, 3}}), std::invalid_argument);
    EXPECT_THROW(c.add_register({"a", RegisterRole::ANCILLA, {5}}), std::invalid_argument);
    EXPECT_THROW(c.add_register({"c", RegisterRole::ANCILLA, {9}}), std::invalid_argument);
    c.add_register({"b", RegisterRole::OUTPUT, {4, 3}});
    ASSERT_NE(c.find_register("b"), nullptr);
    EXPECT_FALSE(c.find_register("b")->contiguous_start().has_value());
    EXPECT_EQ(c.registers_with_role(RegisterRole::OUTPUT).size(), 1u);
}

TEST(Registers, RoleNames) {
    for (auto role : {RegisterRole::KEY, RegisterRole::STATE_BLOCK, RegisterRole::ANCILLA, RegisterRole::OUTPUT}) {
        EXPECT_EQ(parse_role(role_name(role)), role);
    }
    EXPECT_FALSE(parse_role("scratch").has_value());
}

TEST(AncillaHighWater, CountsOverlappingLifetimes) {
    Circuit c(4);
    c.add_register({"anc", RegisterRole::ANCILLA, {1, 2, 3}});
    c.cx(0, 1);
    c.cx(0, 1);
    c.cx(0, 2);
    c.cx(0, 3);
    c.cx(0, 2);
    EXPECT_EQ(ancilla_high_water(c), 2u);
}
