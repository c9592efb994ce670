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

#include "rqc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rqc/reference.hpp"
#include "rqc/saes.hpp"

namespace rqc {

std::string read_output_hex(const Circuit &c, const BitState &s) {
    auto outs = c.registers_with_role(RegisterRole::OUTPUT);
    if (outs.size() != 1) throw std::invalid_argument("circuit needs exactly one output register");
    const auto &wires = outs[0]->wires;
    if (wires.size() % 4 != 0) throw std::invalid_argument("output register width is not a multiple of 4");
    static const char *digits = "0123456789abcdef";
    std::string hex;
    for (size_t i = 0; i < wires.size(); i += 4) {
        int v = 0;
        for (size_t k = 0; k < 4; k++) v = (v << 1) | (s.get(wires[i + k]) ? 1 : 0);
        hex.push_back(digits[v]);
    }
    return hex;
}

std::string simulate_file(const Circuit &c) { return read_output_hex(c, run(c, BitState(c.wire_count()))); }

bool AesRun::zero_checks_ok() const {
    return std::all_of(zero_checks.begin(), zero_checks.end(), [](const auto &z) { return z.zero; });
}

uint16_t simulate_saes(uint16_t key, uint16_t plaintext) {
    auto b = saes::build_saes(key, plaintext);
    BitState s = run(b.circuit, BitState(b.circuit.wire_count()));
    return static_cast<uint16_t>(s.read(std::vector<Wire>(b.layout.output.rbegin(), b.layout.output.rend())));
}

AesRun simulate_aes128(const ref::Key128 &key, const ref::Block128 &plaintext) {
    auto b = aes::build_aes128(key, plaintext);
    std::span<const Gate> gates = b.circuit.gates();
    BitState s(b.circuit.wire_count());
    AesRun out;
    size_t done = 0;
    for (const auto &z : b.zero_checks) {
        run_gates(gates.subspan(done, z.after_gate - done), s);
        done = z.after_gate;
        out.zero_checks.push_back({z.label, s.is_zero(b.layout.blocks[z.block])});
    }
    run_gates(gates.subspan(done), s);
    for (size_t i = 0; i < 128; i++) {
        if (s.get(b.layout.output[i])) out.ciphertext[i / 8] |= static_cast<uint8_t>(1u << (i % 8));
    }
    return out;
}

const char *cipher_name(Cipher c) { return c == Cipher::SAES ? "saes" : "aes128"; }

std::string TrialResult::transcript() const {
    std::ostringstream os;
    os << "trial " << index << ": key=" << key << " plaintext=" << plaintext << " expected=" << expected
       << " actual=" << actual << (ok ? " ok" : " MISMATCH");
    for (const auto &z : zero_checks) {
        os << "\n  zero check " << z.label << ": " << (z.zero ? "zero" : "NONZERO");
    }
    return os.str();
}

size_t VerifySummary::failures() const {
    return static_cast<size_t>(std::count_if(trials.begin(), trials.end(), [](const auto &t) { return !t.ok; }));
}

const TrialResult *VerifySummary::first_failure() const {
    for (const auto &t : trials) {
        if (!t.ok) return &t;
    }
    return nullptr;
}

namespace {

struct TrialInput {
    ref::Block128 key{}, plaintext{};
};

TrialResult run_trial(Cipher cipher, size_t index, const TrialInput &in) {
    TrialResult r;
    r.index = index;
    if (cipher == Cipher::SAES) {
        uint16_t key = static_cast<uint16_t>(in.key[0] << 8 | in.key[1]);
        uint16_t pt = static_cast<uint16_t>(in.plaintext[0] << 8 | in.plaintext[1]);
        r.key = ref::to_hex16(key);
        r.plaintext = ref::to_hex16(pt);
        r.expected = ref::to_hex16(ref::saes_encrypt(key, pt));
        r.actual = ref::to_hex16(simulate_saes(key, pt));
        r.ok = r.expected == r.actual;
    } else {
        r.key = ref::to_hex(in.key);
        r.plaintext = ref::to_hex(in.plaintext);
        r.expected = ref::to_hex(ref::aes128_encrypt(in.key, in.plaintext));
        auto run = simulate_aes128(in.key, in.plaintext);
        r.actual = ref::to_hex(run.ciphertext);
        r.zero_checks = run.zero_checks;
        r.ok = r.expected == r.actual && run.zero_checks_ok();
    }
    return r;
}

}  // namespace

VerifySummary verify(Cipher cipher, size_t trials, uint64_t seed, unsigned threads) {
    std::mt19937_64 rng(seed);
    std::vector<TrialInput> inputs(trials);
    for (auto &in : inputs) {
        for (auto &b : in.key) b = static_cast<uint8_t>(rng());
        for (auto &b : in.plaintext) b = static_cast<uint8_t>(rng());
    }
    VerifySummary summary;
    summary.cipher = cipher;
    summary.seed = seed;
    summary.trials.resize(trials);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(trials, 1)));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < trials; i = next++) summary.trials[i] = run_trial(cipher, i, inputs[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; t++) pool.emplace_back(worker);
    worker();
    for (auto &t : pool) t.join();
    return summary;
}

}  // namespace rqc
