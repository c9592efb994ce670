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

#ifndef RQC_VERIFY_HPP
#define RQC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rqc/aes128.hpp"
#include "rqc/circuit.hpp"
#include "rqc/simulator.hpp"

namespace rqc {

// Bits of the output-role register, first wire as the most significant bit,
// rendered as hex. Throws std::invalid_argument if the circuit has no single
// output register or its width is not a multiple of 4.
std::string read_output_hex(const Circuit &c, const BitState &s);
// Runs a circuit file from the all-zero state and reads its output register.
std::string simulate_file(const Circuit &c);

struct ZeroCheckResult {
    std::string label;
    bool zero = false;
};

struct AesRun {
    ref::Block128 ciphertext{};
    std::vector<ZeroCheckResult> zero_checks;
    bool zero_checks_ok() const;
};

uint16_t simulate_saes(uint16_t key, uint16_t plaintext);
AesRun simulate_aes128(const ref::Key128 &key, const ref::Block128 &plaintext);

enum class Cipher { SAES, AES128 };
const char *cipher_name(Cipher c);

struct TrialResult {
    size_t index = 0;
    std::string key, plaintext, expected, actual;
    std::vector<ZeroCheckResult> zero_checks;
    bool ok = false;
    std::string transcript() const;
};

struct VerifySummary {
    Cipher cipher = Cipher::SAES;
    uint64_t seed = 0;
    std::vector<TrialResult> trials;  // ordered by trial index
    size_t failures() const;
    bool passed() const { return failures() == 0; }
    const TrialResult *first_failure() const;
};

// Trial inputs come from one mt19937_64 stream seeded with seed, drawn in
// index order, so the sequence does not depend on threads.
VerifySummary verify(Cipher cipher, size_t trials, uint64_t seed, unsigned threads = 0);

}  // namespace rqc

#endif
