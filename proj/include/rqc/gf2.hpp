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

#ifndef RQC_GF2_HPP
#define RQC_GF2_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rqc/circuit.hpp"

namespace rqc {

class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols);
    // Rows given as strings of '0'/'1', leftmost character is column 0.
    static BinaryMatrix from_rows(std::initializer_list<std::string> rows);
    static BinaryMatrix identity(size_t n);
    static BinaryMatrix random_invertible(size_t n, std::mt19937_64 &rng);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool get(size_t r, size_t c) const { return bits_[r * cols_ + c] != 0; }
    void set(size_t r, size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }
    void add_row(size_t dst, size_t src);
    void add_col(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);

    BinaryMatrix operator*(const BinaryMatrix &other) const;
    std::vector<uint8_t> apply(std::span<const uint8_t> v) const;
    size_t rank() const;
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
    // Throws std::domain_error when singular.
    BinaryMatrix inverse() const;
    BinaryMatrix transpose() const;
    size_t weight() const;
    std::string str() const;

    bool operator==(const BinaryMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<uint8_t> bits_;
};

struct AffineLayer {
    BinaryMatrix matrix;
    std::vector<uint8_t> constant;
};

// In-place CNOT realization of m by Gauss-Jordan column elimination.
// Throws std::invalid_argument for non-square or singular input.
Circuit synth_inplace_linear(const BinaryMatrix &m);

// LU-style realization: the circuit leaves logical output i on wire
// output_wire[i], so a row permutation costs nothing when the caller
// can relabel wires.
struct LinearSynthesis {
    Circuit circuit;
    std::vector<Wire> output_wire;
};
LinearSynthesis synth_plu(const BinaryMatrix &m);

// Appends three-CNOT swaps so that the output permutation becomes the identity.
Circuit resolve_permutation(const LinearSynthesis &synthesis);

// Matrix with run(c, v) = m * v. Throws std::invalid_argument unless c is CNOT-only.
BinaryMatrix circuit_to_matrix(const Circuit &c);
// Same, with output row i read from wire output_wire[i].
BinaryMatrix circuit_to_matrix(const Circuit &c, std::span<const Wire> output_wire);
// Matrix realized from input_wire[j] to output_wire[i] inside a wider CNOT-only circuit.
BinaryMatrix circuit_to_matrix(const Circuit &c, std::span<const Wire> input_wire,
                               std::span<const Wire> output_wire);

Circuit synth_affine(const AffineLayer &layer);
// Recovers (matrix, constant) from a circuit made of CNOT and NOT gates.
AffineLayer circuit_to_affine(const Circuit &c);

}  // namespace rqc

#endif
