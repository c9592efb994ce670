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

#include <gtest/gtest.h>

#include <random>

#include "rqc/circuit.hpp"
#include "rqc/gf2.hpp"
#include "rqc/rqc_format.hpp"
#include "rqc/simulator.hpp"

using namespace rqc;

namespace {

Circuit random_circuit(size_t wires, size_t gates, std::mt19937_64 &rng) {
    Circuit c(wires);
    std::uniform_int_distribution<Wire> pick(0, static_cast<Wire>(wires - 1));
    while (c.size() < gates) {
        Wire a = pick(rng), b = pick(rng), t = pick(rng);
        auto kind = rng() % 3;
        if (kind == 0) {
            c.x(t);
        } else if (kind == 1 && a != t) {
            c.cx(a, t);
        } else if (kind == 2 && a != b && a != t && b != t) {
            c.ccx(a, b, t);
        }
    }
    return c;
}

}  // namespace

TEST(Property, InvertRoundTrip) {
    std::mt19937_64 rng(1000);
    for (int i = 0; i < 1000; i++) {
        size_t wires = 3 + rng() % 40;
        Circuit c = random_circuit(wires, rng() % 120, rng);
        BitState s(wires);
        for (size_t w = 0; w < wires; w++) s.set(w, rng() & 1);
        ASSERT_EQ(run(invert(c), run(c, s)), s) << "case " << i;
    }
}

TEST(Property, LinearSynthesisRoundTrip) {
    std::mt19937_64 rng(2000);
    for (size_t n : {8, 32}) {
        for (int i = 0; i < 100; i++) {
            auto m = BinaryMatrix::random_invertible(n, rng);
            ASSERT_EQ(circuit_to_matrix(synth_inplace_linear(m)), m) << "n=" << n << " case " << i;
        }
    }
}

TEST(Property, ResourcesAdditiveUnderCompose) {
    std::mt19937_64 rng(3000);
    for (int i = 0; i < 200; i++) {
        Circuit a = random_circuit(20, rng() % 60, rng);
        Circuit b = random_circuit(8, rng() % 60, rng);
        std::vector<Wire> map(20);
        for (Wire w = 0; w < 20; w++) map[w] = w;
        std::shuffle(map.begin(), map.end(), rng);
        map.resize(8);
        auto ra = resources(a), rb = resources(b), rc = resources(compose(a, b, map));
        ASSERT_EQ(rc.toffoli, ra.toffoli + rb.toffoli);
        ASSERT_EQ(rc.cnot, ra.cnot + rb.cnot);
        ASSERT_EQ(rc.not_, ra.not_ + rb.not_);
        ASSERT_EQ(rc.gate_count(), ra.gate_count() + rb.gate_count());
        ASSERT_LE(rc.depth, ra.depth + rb.depth);
    }
}

TEST(Property, RqcRoundTrip) {
    std::mt19937_64 rng(4000);
    for (int i = 0; i < 200; i++) {
        size_t wires = 4 + rng() % 60;
        Circuit c = random_circuit(wires, rng() % 100, rng);
        Register r{"out", RegisterRole::OUTPUT, {}};
        for (Wire w = 0; w < 4; w++) r.wires.push_back(static_cast<Wire>(wires - 4) + w);
        std::shuffle(r.wires.begin(), r.wires.end(), rng);
        c.add_register(r);
        ASSERT_EQ(parse_rqc(write_rqc(c)), c) << "case " << i;
    }
}

TEST(Property, DepthBoundedByGateCount) {
    std::mt19937_64 rng(5000);
    for (int i = 0; i < 200; i++) {
        Circuit c = random_circuit(10, rng() % 50, rng);
        auto d = depth(c);
        ASSERT_LE(d, c.size());
        ASSERT_EQ(d == 0, c.empty());
    }
}

TEST(Property, CnotCircuitsAgreeWithMatrix) {
    std::mt19937_64 rng(6000);
    for (int i = 0; i < 50; i++) {
        Circuit c(16);
        for (int k = 0; k < 40; k++) {
            Wire a = static_cast<Wire>(rng() % 16), t = static_cast<Wire>(rng() % 16);
            if (a != t) c.cx(a, t);
        }
        auto m = circuit_to_matrix(c);
        std::vector<Wire> wires(16);
        for (Wire w = 0; w < 16; w++) wires[w] = w;
        std::vector<uint8_t> v(16);
        for (auto &b : v) b = rng() & 1;
        BitState s(16);
        s.write_bits(wires, v);
        ASSERT_EQ(run(c, s).read_bits(wires), m.apply(v));
    }
}
