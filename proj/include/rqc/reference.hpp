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

#ifndef RQC_REFERENCE_HPP
#define RQC_REFERENCE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rqc/gf2.hpp"

// Bit ordering conventions shared by the references and the circuit builders.
//
// AES-128: a block or key is 16 bytes in the order they appear in the hex
// string, and the 4x4 state is column-major (byte 4c + r is row r, column c).
// Inside a byte, bit b means the coefficient of x^b (bit 0 is the LSB). A
// 128-wire AES register holds byte i, bit b on its wire 8i + b.
//
// S-AES: a 16-bit value is four nibbles n0 n1 n2 n3 from the most significant
// end; the 2x2 state is column-major (n0 n1 is column 0). Inside a nibble the
// wires run from the most significant bit down, so a 16-wire S-AES register
// holds bit 15 - j of the value on wire j.
//
// GF(2^4) vectors of four bits (polynomial coefficients a3 a2 a1 a0, or
// normal-basis coordinates x1 x2 x3 x4) are packed with the first element in
// bit 3.

namespace rqc::ref {

using Block128 = std::array<uint8_t, 16>;
using Key128 = Block128;

uint8_t gf256_mul(uint8_t a, uint8_t b);
uint8_t gf256_inverse(uint8_t a);
uint8_t gf16_mul(uint8_t a, uint8_t b);
uint8_t gf16_inverse(uint8_t a);

struct SboxTables {
    std::array<uint8_t, 256> sbox256;
    std::array<uint8_t, 16> sbox16;
};
// Computed from field inversion and the affine maps.
const SboxTables &sbox_tables();
// The published AES table, kept only to cross-check the computed one.
extern const std::array<uint8_t, 256> kAesSboxPublished;

uint8_t aes_rcon(int round);
std::array<uint32_t, 44> aes128_key_schedule(const Key128 &key);
std::array<Block128, 11> aes128_round_keys(const Key128 &key);
Block128 aes128_encrypt(const Key128 &key, const Block128 &pt);

struct AesRoundTrace {
    Block128 start;
    Block128 after_sub_bytes;
    Block128 after_shift_rows;
    Block128 after_mix_columns;
    Block128 round_key;
};
// One entry per round 1..10; round 10 repeats after_shift_rows in after_mix_columns.
std::vector<AesRoundTrace> aes128_trace(const Key128 &key, const Block128 &pt);

Block128 aes_sub_bytes(const Block128 &s);
Block128 aes_shift_rows(const Block128 &s);
Block128 aes_mix_columns(const Block128 &s);
// 32x32 matrix on one column; index 8r + b is row r, bit b.
BinaryMatrix aes_mixcolumn_matrix();

uint8_t saes_rcon(int round);
std::array<uint16_t, 3> saes_round_keys(uint16_t key);
uint16_t saes_encrypt(uint16_t key, uint16_t pt);
uint16_t saes_sub_nibbles(uint16_t s);
uint16_t saes_shift_rows(uint16_t s);
uint16_t saes_mix_columns(uint16_t s);
// 8x8 matrix on one column; index 4n + k is nibble n, bit 3 - k.
BinaryMatrix saes_mixcolumn_matrix();

// Polynomial (a3 a2 a1 a0) to normal (x1 x2 x3 x4) coordinates.
BinaryMatrix poly_to_normal_matrix();
// The four Boolean formulas of the normal-basis inversion, evaluated directly.
uint8_t gf16_inverse_normal_basis(uint8_t x);
// Same map computed as M * inv_poly(M^-1 * x).
uint8_t gf16_inverse_normal_basis_conjugated(uint8_t x);
std::vector<uint8_t> nibble_bits(uint8_t v);
uint8_t nibble_from_bits(const std::vector<uint8_t> &bits);

// Hex helpers; parsing throws std::invalid_argument on bad digits or length.
std::vector<uint8_t> parse_hex(std::string_view hex, size_t expected_bytes);
std::string to_hex(const uint8_t *data, size_t n);
Block128 parse_block128(std::string_view hex);
std::string to_hex(const Block128 &b);
uint16_t parse_u16(std::string_view hex);
std::string to_hex16(uint16_t v);

}  // namespace rqc::ref

#endif
