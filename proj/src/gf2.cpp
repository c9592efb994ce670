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

#include "rqc/gf2.hpp"

#include <numeric>
#include <stdexcept>

namespace rqc {

BinaryMatrix::BinaryMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::string> rows) {
    size_t cols = rows.size() ? rows.begin()->size() : 0;
    BinaryMatrix m(rows.size(), cols);
    size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != cols) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, row[c] == '1');
        }
        r++;
    }
    return m;
}

BinaryMatrix BinaryMatrix::identity(size_t n) {
    BinaryMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

BinaryMatrix BinaryMatrix::random_invertible(size_t n, std::mt19937_64 &rng) {
    while (true) {
        BinaryMatrix m(n, n);
        for (auto &b : m.bits_) {
            b = rng() & 1;
        }
        if (m.is_invertible()) {
            return m;
        }
    }
}

void BinaryMatrix::add_row(size_t dst, size_t src) {
    for (size_t c = 0; c < cols_; c++) {
        bits_[dst * cols_ + c] ^= bits_[src * cols_ + c];
    }
}

void BinaryMatrix::add_col(size_t dst, size_t src) {
    for (size_t r = 0; r < rows_; r++) {
        bits_[r * cols_ + dst] ^= bits_[r * cols_ + src];
    }
}

void BinaryMatrix::swap_rows(size_t a, size_t b) {
    for (size_t c = 0; c < cols_; c++) {
        std::swap(bits_[a * cols_ + c], bits_[b * cols_ + c]);
    }
}

BinaryMatrix BinaryMatrix::operator*(const BinaryMatrix &other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("matrix dimensions do not agree");
    }
    BinaryMatrix out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            if (get(r, k)) {
                for (size_t c = 0; c < other.cols_; c++) {
                    out.bits_[r * other.cols_ + c] ^= other.bits_[k * other.cols_ + c];
                }
            }
        }
    }
    return out;
}

std::vector<uint8_t> BinaryMatrix::apply(std::span<const uint8_t> v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("vector length does not match matrix");
    }
    std::vector<uint8_t> out(rows_, 0);
    for (size_t r = 0; r < rows_; r++) {
        uint8_t acc = 0;
        for (size_t c = 0; c < cols_; c++) {
            acc ^= static_cast<uint8_t>(get(r, c) & (v[c] & 1));
        }
        out[r] = acc;
    }
    return out;
}

size_t BinaryMatrix::rank() const {
    BinaryMatrix a = *this;
    size_t rank = 0;
    for (size_t c = 0; c < cols_ && rank < rows_; c++) {
        size_t p = rank;
        while (p < rows_ && !a.get(p, c)) {
            p++;
        }
        if (p == rows_) {
            continue;
        }
        a.swap_rows(rank, p);
        for (size_t r = 0; r < rows_; r++) {
            if (r != rank && a.get(r, c)) {
                a.add_row(r, rank);
            }
        }
        rank++;
    }
    return rank;
}

BinaryMatrix BinaryMatrix::inverse() const {
    if (rows_ != cols_) {
        throw std::domain_error("only square matrices have inverses");
    }
    size_t n = rows_;
    BinaryMatrix a = *this;
    BinaryMatrix inv = identity(n);
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (p < n && !a.get(p, c)) {
            p++;
        }
        if (p == n) {
            throw std::domain_error("matrix is singular");
        }
        a.swap_rows(c, p);
        inv.swap_rows(c, p);
        for (size_t r = 0; r < n; r++) {
            if (r != c && a.get(r, c)) {
                a.add_row(r, c);
                inv.add_row(r, c);
            }
        }
    }
    return inv;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.set(c, r, get(r, c));
        }
    }
    return t;
}

size_t BinaryMatrix::weight() const { return static_cast<size_t>(std::accumulate(bits_.begin(), bits_.end(), 0)); }

std::string BinaryMatrix::str() const {
    std::string out;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out += get(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

namespace {

void require_invertible(const BinaryMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("linear synthesis needs a square matrix");
    }
    if (!m.is_invertible()) {
        throw std::invalid_argument("linear synthesis needs an invertible matrix");
    }
}

}  // namespace

Circuit synth_inplace_linear(const BinaryMatrix &m) {
    require_invertible(m);
    size_t n = m.rows();
    BinaryMatrix a = m;
    Circuit out(n);
    // Reduce m to the identity with column operations. Adding column s into
    // column d multiplies on the right by a CNOT with control d and target s,
    // so the gates come out in application order.
    for (size_t r = 0; r < n; r++) {
        if (!a.get(r, r)) {
            size_t p = r + 1;
            while (!a.get(r, p)) {
                p++;
            }
            a.add_col(r, p);
            out.cx(static_cast<Wire>(r), static_cast<Wire>(p));
        }
        for (size_t c = 0; c < n; c++) {
            if (c != r && a.get(r, c)) {
                a.add_col(c, r);
                out.cx(static_cast<Wire>(c), static_cast<Wire>(r));
            }
        }
    }
    return out;
}

LinearSynthesis synth_plu(const BinaryMatrix &m) {
    require_invertible(m);
    size_t n = m.rows();
    BinaryMatrix u = m;
    BinaryMatrix l(n, n);
    std::vector<Wire> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (!u.get(p, c)) {
            p++;
        }
        if (p != c) {
            u.swap_rows(c, p);
            l.swap_rows(c, p);
            std::swap(order[c], order[p]);
        }
        for (size_t r = c + 1; r < n; r++) {
            if (u.get(r, c)) {
                u.add_row(r, c);
                l.set(r, c, true);
            }
        }
    }
    LinearSynthesis out{Circuit(n), std::vector<Wire>(n)};
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (u.get(i, j)) {
                out.circuit.cx(static_cast<Wire>(j), static_cast<Wire>(i));
            }
        }
    }
    for (size_t i = n; i-- > 0;) {
        for (size_t j = 0; j < i; j++) {
            if (l.get(i, j)) {
                out.circuit.cx(static_cast<Wire>(j), static_cast<Wire>(i));
            }
        }
    }
    for (size_t c = 0; c < n; c++) {
        out.output_wire[order[c]] = static_cast<Wire>(c);
    }
    return out;
}

Circuit resolve_permutation(const LinearSynthesis &synthesis) {
    Circuit out = synthesis.circuit;
    size_t n = synthesis.output_wire.size();
    // holder[w] = logical output currently sitting on wire w.
    std::vector<Wire> holder(n);
    for (size_t i = 0; i < n; i++) {
        holder[synthesis.output_wire[i]] = static_cast<Wire>(i);
    }
    for (Wire w = 0; w < n; w++) {
        while (holder[w] != w) {
            Wire other = holder[w];
            out.cx(w, other);
            out.cx(other, w);
            out.cx(w, other);
            std::swap(holder[w], holder[other]);
        }
    }
    return out;
}

BinaryMatrix circuit_to_matrix(const Circuit &c, std::span<const Wire> input_wire,
                               std::span<const Wire> output_wire) {
    for (const auto &g : c.gates()) {
        if (g.kind != GateKind::CNOT) {
            throw std::invalid_argument("circuit_to_matrix needs a CNOT-only circuit");
        }
    }
    BinaryMatrix m(output_wire.size(), input_wire.size());
    std::vector<uint8_t> state(c.wire_count());
    for (size_t j = 0; j < input_wire.size(); j++) {
        std::fill(state.begin(), state.end(), 0);
        state[input_wire[j]] = 1;
        for (const auto &g : c.gates()) {
            state[g.target] ^= state[g.controls[0]];
        }
        for (size_t i = 0; i < output_wire.size(); i++) {
            m.set(i, j, state[output_wire[i]] != 0);
        }
    }
    return m;
}

BinaryMatrix circuit_to_matrix(const Circuit &c, std::span<const Wire> output_wire) {
    std::vector<Wire> inputs(c.wire_count());
    std::iota(inputs.begin(), inputs.end(), 0);
    return circuit_to_matrix(c, inputs, output_wire);
}

BinaryMatrix circuit_to_matrix(const Circuit &c) {
    std::vector<Wire> wires(c.wire_count());
    std::iota(wires.begin(), wires.end(), 0);
    return circuit_to_matrix(c, wires, wires);
}

Circuit synth_affine(const AffineLayer &layer) {
    if (layer.constant.size() != layer.matrix.rows()) {
        throw std::invalid_argument("affine constant length does not match matrix");
    }
    Circuit out = synth_inplace_linear(layer.matrix);
    for (size_t k = 0; k < layer.constant.size(); k++) {
        if (layer.constant[k]) {
            out.x(static_cast<Wire>(k));
        }
    }
    return out;
}

AffineLayer circuit_to_affine(const Circuit &c) {
    Circuit linear(c.wire_count());
    std::vector<uint8_t> constant(c.wire_count(), 0);
    for (const auto &g : c.gates()) {
        switch (g.kind) {
            case GateKind::NOT:
                constant[g.target] ^= 1;
                break;
            case GateKind::CNOT:
                linear.append(g);
                constant[g.target] ^= constant[g.controls[0]];
                break;
            case GateKind::TOFFOLI:
                throw std::invalid_argument("circuit_to_affine needs CNOT and NOT gates only");
        }
    }
    return {circuit_to_matrix(linear), constant};
}

}  // namespace rqc
