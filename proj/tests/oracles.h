// Copyright 2026 The gadgetsim Authors
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

#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's operator algebra: Pauli strings are assembled from 2x2
// Kronecker products, chain energies from direct clause evaluation, and
// propagators from Eigen's matrix exponential.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace oracle {

using Matrix = Eigen::MatrixXcd;
using cplx = std::complex<double>;

inline Matrix pauli2(char p) {
    Matrix m(2, 2);
    switch (p) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, cplx(0, -1), cplx(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m << 1, 0, 0, 1;
    }
    return m;
}

/// Dense operator for a per-qubit label such as "IXZY", qubit 0 leftmost (most significant).
inline Matrix kron_string(const std::string& label) {
    Matrix out = Matrix::Identity(1, 1);
    for (char c : label) {
        Matrix next(out.rows() * 2, out.cols() * 2);
        Matrix p = pauli2(c);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index col = 0; col < out.cols(); ++col) {
                next.block(2 * r, 2 * col, 2, 2) = out(r, col) * p;
            }
        }
        out = next;
    }
    return out;
}

inline Matrix expm(const Matrix& h, double t, double sign = -1.0) {
    Matrix a = cplx(0.0, sign * t) * h;
    return a.exp();
}

/// Value (+1/-1) of qubit i in an n-bit big-endian configuration.
inline int spin(std::uint64_t bits, int i, int n) { return ((bits >> (n - 1 - i)) & 1U) ? -1 : 1; }

/// Broken clauses of the chain for data z (n_d bits) and ancillae a (n_d - 1 bits), by direct
/// evaluation of z_i * a_{i-1} * a_i against the boundary values.
inline std::vector<int> broken_clauses(std::uint64_t z, std::uint64_t a, int nd, bool kinked) {
    const int na = nd - 1;
    auto anc = [&](int i) {
        if (i < 0) return 1;
        if (i >= na) return kinked ? -1 : 1;
        return spin(a, i, na);
    };
    std::vector<int> out;
    for (int i = 0; i < nd; ++i) {
        if (spin(z, i, nd) * anc(i - 1) * anc(i) != 1) out.push_back(i);
    }
    return out;
}

inline double sine_entry(int n, int k, int j) {
    return std::sqrt(2.0 / (n + 1)) * std::sin(std::numbers::pi * (k + 1) * (j + 1) / (n + 1));
}

inline int popcount(std::uint64_t v) {
    int c = 0;
    for (; v; v &= v - 1) ++c;
    return c;
}

}  // namespace oracle
