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

#include "rqc/reference.hpp"

#include <stdexcept>

namespace rqc::ref {

uint8_t gf256_mul(uint8_t a, uint8_t b) {
    uint8_t r = 0;
    while (b) {
        if (b & 1) {
            r ^= a;
        }
        a = static_cast<uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1b : 0));
        b >>= 1;
    }
    return r;
}

uint8_t gf256_inverse(uint8_t a) {
    if (a == 0) {
        return 0;
    }
    // a^254
    uint8_t r = 1;
    uint8_t p = a;
    for (int e = 254; e; e >>= 1) {
        if (e & 1) {
            r = gf256_mul(r, p);
        }
        p = gf256_mul(p, p);
    }
    return r;
}

uint8_t gf16_mul(uint8_t a, uint8_t b) {
    uint8_t r = 0;
    a &= 15;
    b &= 15;
    while (b) {
        if (b & 1) {
            r ^= a;
        }
        a = static_cast<uint8_t>(((a << 1) ^ ((a & 8) ? 0x13 : 0)) & 15);
        b >>= 1;
    }
    return r;
}

uint8_t gf16_inverse(uint8_t a) {
    a &= 15;
    for (uint8_t b = 1; b < 16; b++) {
        if (gf16_mul(a, b) == 1) {
            return b;
        }
    }
    return 0;
}

namespace {

uint8_t rotl8(uint8_t v, int k) { return static_cast<uint8_t>((v << k) | (v >> (8 - k))); }

SboxTables compute_tables() {
    SboxTables t{};
    for (int x = 0; x < 256; x++) {
        uint8_t b = gf256_inverse(static_cast<uint8_t>(x));
        t.sbox256[x] = static_cast<uint8_t>(b ^ rotl8(b, 1) ^ rotl8(b, 2) ^ rotl8(b, 3) ^ rotl8(b, 4) ^ 0x63);
    }
    // S-AES affine step: column j is the image of coefficient x^j.
    constexpr uint8_t kColumns[4] = {0xd, 0xb, 0x7, 0xe};
    for (int x = 0; x < 16; x++) {
        uint8_t b = gf16_inverse(static_cast<uint8_t>(x));
        uint8_t s = 0x9;
        for (int j = 0; j < 4; j++) {
            if ((b >> j) & 1) {
                s ^= kColumns[j];
            }
        }
        t.sbox16[x] = s;
    }
    return t;
}

}  // namespace

const SboxTables &sbox_tables() {
    static const SboxTables tables = compute_tables();
    return tables;
}

const std::array<uint8_t, 256> kAesSboxPublished = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76, 0xca, 0x82, 0xc9,
    0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0, 0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f,
    0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15, 0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07,
    0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75, 0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3,
    0x29, 0xe3, 0x2f, 0x84, 0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58,
    0xcf, 0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8, 0x51, 0xa3,
    0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2, 0xcd, 0x0c, 0x13, 0xec, 0x5f,
    0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73, 0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88,
    0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb, 0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac,
    0x62, 0x91, 0x95, 0xe4, 0x79, 0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a,
    0xae, 0x08, 0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a, 0x70,
    0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e, 0xe1, 0xf8, 0x98, 0x11,
    0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf, 0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42,
    0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
};

uint8_t aes_rcon(int round) {
    if (round < 1 || round > 10) {
        throw std::out_of_range("AES-128 round constants exist for rounds 1..10");
    }
    uint8_t r = 1;
    for (int k = 1; k < round; k++) {
        r = gf256_mul(r, 2);
    }
    return r;
}

std::array<uint32_t, 44> aes128_key_schedule(const Key128 &key) {
    const auto &sbox = sbox_tables().sbox256;
    std::array<uint32_t, 44> w{};
    for (int i = 0; i < 4; i++) {
        w[i] = (uint32_t{key[4 * i]} << 24) | (uint32_t{key[4 * i + 1]} << 16) | (uint32_t{key[4 * i + 2]} << 8) |
               key[4 * i + 3];
    }
    for (int i = 4; i < 44; i++) {
        uint32_t t = w[i - 1];
        if (i % 4 == 0) {
            t = (t << 8) | (t >> 24);
            t = (uint32_t{sbox[t >> 24]} << 24) | (uint32_t{sbox[(t >> 16) & 255]} << 16) |
                (uint32_t{sbox[(t >> 8) & 255]} << 8) | sbox[t & 255];
            t ^= uint32_t{aes_rcon(i / 4)} << 24;
        }
        w[i] = w[i - 4] ^ t;
    }
    return w;
}

std::array<Block128, 11> aes128_round_keys(const Key128 &key) {
    auto w = aes128_key_schedule(key);
    std::array<Block128, 11> out{};
    for (int r = 0; r < 11; r++) {
        for (int j = 0; j < 4; j++) {
            uint32_t v = w[4 * r + j];
            for (int b = 0; b < 4; b++) {
                out[r][4 * j + b] = static_cast<uint8_t>(v >> (24 - 8 * b));
            }
        }
    }
    return out;
}

Block128 aes_sub_bytes(const Block128 &s) {
    Block128 out{};
    for (int i = 0; i < 16; i++) {
        out[i] = sbox_tables().sbox256[s[i]];
    }
    return out;
}

Block128 aes_shift_rows(const Block128 &s) {
    Block128 out{};
    for (int c = 0; c < 4; c++) {
        for (int r = 0; r < 4; r++) {
            out[4 * c + r] = s[4 * ((c + r) % 4) + r];
        }
    }
    return out;
}

Block128 aes_mix_columns(const Block128 &s) {
    Block128 out{};
    for (int c = 0; c < 4; c++) {
        const uint8_t *a = &s[4 * c];
        for (int r = 0; r < 4; r++) {
            out[4 * c + r] = static_cast<uint8_t>(gf256_mul(a[r], 2) ^ gf256_mul(a[(r + 1) % 4], 3) ^ a[(r + 2) % 4] ^
                                                  a[(r + 3) % 4]);
        }
    }
    return out;
}

namespace {

Block128 xor_block(const Block128 &a, const Block128 &b) {
    Block128 out{};
    for (int i = 0; i < 16; i++) {
        out[i] = a[i] ^ b[i];
    }
    return out;
}

}  // namespace

std::vector<AesRoundTrace> aes128_trace(const Key128 &key, const Block128 &pt) {
    auto keys = aes128_round_keys(key);
    std::vector<AesRoundTrace> trace;
    Block128 s = xor_block(pt, keys[0]);
    for (int round = 1; round <= 10; round++) {
        AesRoundTrace t{};
        t.start = s;
        t.after_sub_bytes = aes_sub_bytes(s);
        t.after_shift_rows = aes_shift_rows(t.after_sub_bytes);
        t.after_mix_columns = round < 10 ? aes_mix_columns(t.after_shift_rows) : t.after_shift_rows;
        t.round_key = keys[round];
        s = xor_block(t.after_mix_columns, keys[round]);
        trace.push_back(t);
    }
    return trace;
}

Block128 aes128_encrypt(const Key128 &key, const Block128 &pt) {
    auto t = aes128_trace(key, pt);
    return xor_block(t.back().after_mix_columns, t.back().round_key);
}

BinaryMatrix aes_mixcolumn_matrix() {
    BinaryMatrix m(32, 32);
    for (int j = 0; j < 32; j++) {
        Block128 s{};
        s[j / 8] = static_cast<uint8_t>(1 << (j % 8));
        Block128 out = aes_mix_columns(s);
        for (int i = 0; i < 32; i++) {
            m.set(static_cast<size_t>(i), static_cast<size_t>(j), (out[i / 8] >> (i % 8)) & 1);
        }
    }
    return m;
}

uint8_t saes_rcon(int round) {
    switch (round) {
        case 1:
            return 0x80;
        case 2:
            return 0x30;
        default:
            throw std::out_of_range("S-AES round constants exist for rounds 1 and 2");
    }
}

uint16_t saes_sub_nibbles(uint16_t s) {
    const auto &sb = sbox_tables().sbox16;
    uint16_t out = 0;
    for (int k = 0; k < 4; k++) {
        out |= static_cast<uint16_t>(sb[(s >> (4 * k)) & 15] << (4 * k));
    }
    return out;
}

uint16_t saes_shift_rows(uint16_t s) {
    // Swap n1 and n3.
    uint16_t n1 = (s >> 8) & 15;
    uint16_t n3 = s & 15;
    return static_cast<uint16_t>((s & 0xf0f0) | (n3 << 8) | n1);
}

uint16_t saes_mix_columns(uint16_t s) {
    uint8_t n[4] = {static_cast<uint8_t>(s >> 12), static_cast<uint8_t>((s >> 8) & 15),
                    static_cast<uint8_t>((s >> 4) & 15), static_cast<uint8_t>(s & 15)};
    uint8_t o[4];
    for (int c = 0; c < 2; c++) {
        o[2 * c] = n[2 * c] ^ gf16_mul(4, n[2 * c + 1]);
        o[2 * c + 1] = gf16_mul(4, n[2 * c]) ^ n[2 * c + 1];
    }
    return static_cast<uint16_t>((o[0] << 12) | (o[1] << 8) | (o[2] << 4) | o[3]);
}

std::array<uint16_t, 3> saes_round_keys(uint16_t key) {
    auto g = [](uint8_t w, int round) {
        uint8_t rot = static_cast<uint8_t>((w << 4) | (w >> 4));
        uint8_t sub = static_cast<uint8_t>(saes_sub_nibbles(rot) & 0xff);
        return static_cast<uint8_t>(sub ^ saes_rcon(round));
    };
    uint8_t w0 = static_cast<uint8_t>(key >> 8);
    uint8_t w1 = static_cast<uint8_t>(key & 0xff);
    uint8_t w2 = w0 ^ g(w1, 1);
    uint8_t w3 = w2 ^ w1;
    uint8_t w4 = w2 ^ g(w3, 2);
    uint8_t w5 = w4 ^ w3;
    return {key, static_cast<uint16_t>((w2 << 8) | w3), static_cast<uint16_t>((w4 << 8) | w5)};
}

uint16_t saes_encrypt(uint16_t key, uint16_t pt) {
    auto k = saes_round_keys(key);
    uint16_t s = pt ^ k[0];
    s = saes_mix_columns(saes_shift_rows(saes_sub_nibbles(s))) ^ k[1];
    s = saes_shift_rows(saes_sub_nibbles(s)) ^ k[2];
    return s;
}

BinaryMatrix saes_mixcolumn_matrix() {
    BinaryMatrix m(8, 8);
    for (int j = 0; j < 8; j++) {
        uint16_t col = static_cast<uint16_t>(1 << (15 - j));
        uint16_t out = saes_mix_columns(col);
        for (int i = 0; i < 8; i++) {
            m.set(static_cast<size_t>(i), static_cast<size_t>(j), (out >> (15 - i)) & 1);
        }
    }
    return m;
}

BinaryMatrix poly_to_normal_matrix() { return BinaryMatrix::from_rows({"0111", "0101", "1001", "0011"}); }

std::vector<uint8_t> nibble_bits(uint8_t v) {
    return {static_cast<uint8_t>((v >> 3) & 1), static_cast<uint8_t>((v >> 2) & 1), static_cast<uint8_t>((v >> 1) & 1),
            static_cast<uint8_t>(v & 1)};
}

uint8_t nibble_from_bits(const std::vector<uint8_t> &bits) {
    return static_cast<uint8_t>((bits[0] << 3) | (bits[1] << 2) | (bits[2] << 1) | bits[3]);
}

uint8_t gf16_inverse_normal_basis(uint8_t x) {
    int x1 = (x >> 3) & 1, x2 = (x >> 2) & 1, x3 = (x >> 1) & 1, x4 = x & 1;
    int y1 = (x2 & x3 & x4) ^ (x1 & x3) ^ (x2 & x3) ^ x3 ^ x4;
    int y2 = (x1 & x3 & x4) ^ (x1 & x3) ^ (x2 & x3) ^ (x2 & x4) ^ x4;
    int y3 = (x1 & x2 & x4) ^ (x1 & x3) ^ (x1 & x4) ^ x1 ^ x2;
    int y4 = (x1 & x2 & x3) ^ (x1 & x3) ^ (x1 & x4) ^ (x2 & x4) ^ x2;
    return static_cast<uint8_t>((y1 << 3) | (y2 << 2) | (y3 << 1) | y4);
}

uint8_t gf16_inverse_normal_basis_conjugated(uint8_t x) {
    static const BinaryMatrix m = poly_to_normal_matrix();
    static const BinaryMatrix m_inv = m.inverse();
    uint8_t poly = nibble_from_bits(m_inv.apply(nibble_bits(x)));
    return nibble_from_bits(m.apply(nibble_bits(gf16_inverse(poly))));
}

std::vector<uint8_t> parse_hex(std::string_view hex, size_t expected_bytes) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) {
        hex.remove_prefix(2);
    }
    if (hex.size() != 2 * expected_bytes) {
        throw std::invalid_argument("expected " + std::to_string(2 * expected_bytes) + " hex digits, got " +
                                    std::to_string(hex.size()));
    }
    auto digit = [](char ch) -> uint8_t {
        if (ch >= '0' && ch <= '9') return static_cast<uint8_t>(ch - '0');
        if (ch >= 'a' && ch <= 'f') return static_cast<uint8_t>(ch - 'a' + 10);
        if (ch >= 'A' && ch <= 'F') return static_cast<uint8_t>(ch - 'A' + 10);
        throw std::invalid_argument(std::string("bad hex digit '") + ch + "'");
    };
    std::vector<uint8_t> out(expected_bytes);
    for (size_t i = 0; i < expected_bytes; i++) {
        out[i] = static_cast<uint8_t>((digit(hex[2 * i]) << 4) | digit(hex[2 * i + 1]));
    }
    return out;
}

std::string to_hex(const uint8_t *data, size_t n) {
    static const char *kDigits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * n);
    for (size_t i = 0; i < n; i++) {
        out += kDigits[data[i] >> 4];
        out += kDigits[data[i] & 15];
    }
    return out;
}

Block128 parse_block128(std::string_view hex) {
    auto bytes = parse_hex(hex, 16);
    Block128 out{};
    std::copy(bytes.begin(), bytes.end(), out.begin());
    return out;
}

std::string to_hex(const Block128 &b) { return to_hex(b.data(), b.size()); }

uint16_t parse_u16(std::string_view hex) {
    auto bytes = parse_hex(hex, 2);
    return static_cast<uint16_t>((bytes[0] << 8) | bytes[1]);
}

std::string to_hex16(uint16_t v) {
    uint8_t bytes[2] = {static_cast<uint8_t>(v >> 8), static_cast<uint8_t>(v & 0xff)};
    return to_hex(bytes, 2);
}

}  // namespace rqc::ref
