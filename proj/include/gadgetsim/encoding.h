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

// Encoded-subspace machinery: defect bookkeeping, the sine transform that
// diagonalizes single-defect hopping, and the block-diagonal encoding unitary.
//
// Data configurations z and ancilla configurations a are bit masks in the
// register's big-endian convention: data qubit i is bit (n_d - 1 - i) of z and
// ancilla i is bit (n_a - 1 - i) of a, so the basis index of |z, a> is
// (z << n_a) | a.

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "gadgetsim/gadget.h"
#include "gadgetsim/pauli.h"

namespace gadgetsim {

using BitMask = std::uint64_t;

/// Parses "00100" into a mask with the first character as the most significant bit.
BitMask parse_bits(const std::string& bits);
std::string format_bits(BitMask value, int width);
/// Bit i of an n-bit big-endian mask.
inline int bit_at(BitMask value, int i, int width) { return static_cast<int>((value >> (width - 1 - i)) & 1U); }
/// +1 for bit 0, -1 for bit 1.
inline int z_value(BitMask value, int i, int width) { return bit_at(value, i, width) ? -1 : 1; }

struct DefectProfile {
    BitMask z = 0;
    bool satisfiable = false;
    /// Broken-clause count mod 2 in the lowest-energy configurations.
    int defect_parity = 0;
    /// One entry (the cumulative-parity assignment) when satisfiable; otherwise n_d
    /// entries, entry j carrying a single defect at clause j.
    std::vector<BitMask> ground_ancillae;
};

/// Whether the data parity lets every clause be satisfied (even parity unkinked, odd kinked).
bool is_satisfiable(BitMask z, const GadgetConfig& config);

/// Ancilla assignment carrying cumulative parity, with the sign flipped from clause
/// `defect` onward (defect < 0 means no defect).
BitMask cumulative_parity_ancillae(BitMask z, const GadgetConfig& config, int defect = -1);

DefectProfile analyze_defects(BitMask z, const GadgetConfig& config);

/// Indices of broken chain clauses for the basis state |z, a>.
std::vector<int> defect_positions(BitMask z, BitMask a, const GadgetConfig& config);

struct SineTransform {
    int n = 0;
    /// Orthogonal matrix, entry (k, j) = sqrt(2/(n+1)) sin(pi (k+1)(j+1)/(n+1)).
    Eigen::MatrixXd s;
    /// lambda_k = -2 cos(pi (k+1)/(n+1)), ascending.
    Eigen::VectorXd eigenvalues;
};

SineTransform sine_transform(int n);

/// n x n tridiagonal Toeplitz matrix with `off_diagonal` above and below the diagonal.
Eigen::MatrixXd hopping_matrix(int n, double off_diagonal = -1.0);

struct SectorBlock {
    BitMask z = 0;
    /// Energies of gadget eigenstates inside this data sector, ascending.
    Eigen::VectorXd energies;
    /// Columns are ancilla-register eigenvectors (2^n_a rows), same order as energies.
    Eigen::MatrixXd states;
};

struct EncodingBundle {
    GadgetConfig config;
    QubitRegister reg;
    double beta = 0.0;
    /// Column (z << n_a) | a holds |z> (x) |psi_{z,a}>.
    DenseOperator u_enc;
    /// Projector onto ancillae in |0...0>.
    DenseOperator projector;
    /// u_enc * projector * u_enc^dagger.
    DenseOperator dressed_projector;
    DenseOperator u_gauge;
    std::vector<SectorBlock> sectors;

    /// Columns of u_enc spanning the logical (dressed ground) subspace, one per z.
    DenseOperator logical_columns() const;
    /// Ancilla part of the dressed ground state for data configuration z.
    Eigen::VectorXd ancilla_ground(BitMask z) const;
    /// Full-register dressed state u_enc (|logical> (x) |0...0>).
    Eigen::VectorXcd dress(const Eigen::VectorXcd& logical) const;
    /// Logical amplitudes <z, psi_{z,0}|psi> for every z.
    Eigen::VectorXcd undress(const Eigen::VectorXcd& physical) const;
};

/// Per-sector exact diagonalization of the calibrated gadget, with analytic cross-checks.
EncodingBundle build_encoding(const GadgetConfig& config);

/// Ascending energies of every data sector of a Hamiltonian that is diagonal in the data
/// register (any driver). Throws ContractError when sectors are coupled.
std::vector<Eigen::VectorXd> sector_energies(const OperatorSum& h, const QubitRegister& reg);

/// Logical block P U^dagger O U P, dimension 2^n_d.
DenseOperator effective_operator(const OperatorSum& op, const EncodingBundle& bundle);
DenseOperator effective_operator(const DenseOperator& op, const EncodingBundle& bundle);

/// <psi_{z1,0}|psi_{z2,0}> in closed form: sqrt(2/(n_d+1)) sin(pi (i+1)/(n_d+1)).
double logical_overlap(BitMask z1, BitMask z2, int i, const GadgetConfig& config);

/// Diagonal unitary with phase (-1)^{z_j} on basis states holding exactly one defect at j,
/// +1 elsewhere.
DenseOperator gauge_transform(const GadgetConfig& config);

/// Logical operator prod_i P_i on n qubits (dense, 2^n square), P given per qubit as 'I','X','Y','Z'.
DenseOperator logical_pauli(const std::string& paulis);

}  // namespace gadgetsim
