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

// Pauli-string operator algebra and exact dense dynamics.
//
// Bit convention (used by every module): for a register of `total` qubits,
// qubit q corresponds to bit (total - 1 - q) of a computational basis index,
// i.e. qubit 0 is the most significant bit. Data qubits occupy indices
// 0..n_data-1 and ancilla i sits at global index n_data + i, so a basis index
// factorizes as (z << n_ancilla) | a.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gadgetsim {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;

/// Default cap on the total qubit count of a dense realization.
inline constexpr int kDefaultMaxQubits = 14;

/// Active qubit cap: GADGETSIM_MAX_QUBITS if set to a positive integer, otherwise 14.
int max_qubits();

struct QubitRegister {
    int n_data = 0;
    int n_ancilla = 0;

    /// Chain-gadget register: n_data data qubits and n_data - 1 ancillae.
    static QubitRegister chain(int n_data);

    int total() const { return n_data + n_ancilla; }
    std::size_t dim() const { return std::size_t{1} << total(); }
    int data(int i) const;
    int ancilla(int i) const;
    /// Bit position of qubit q inside a basis index.
    int bit(int q) const { return total() - 1 - q; }

    /// Throws ConfigError if the register is empty or above the dense cap.
    void validate() const;

    friend bool operator==(const QubitRegister&, const QubitRegister&) = default;
};

enum class Pauli : char { X = 'X', Y = 'Y', Z = 'Z' };

struct PauliString {
    Complex coefficient{1.0, 0.0};
    std::map<int, Pauli> factors;

    PauliString() = default;
    PauliString(Complex c, std::map<int, Pauli> f) : coefficient(c), factors(std::move(f)) {}

    static PauliString identity(Complex c = 1.0) { return {c, {}}; }
    static PauliString single(Pauli p, int q, Complex c = 1.0) { return {c, {{q, p}}}; }

    bool is_identity() const { return factors.empty(); }
    int weight() const { return static_cast<int>(factors.size()); }
    int max_index() const { return factors.empty() ? -1 : factors.rbegin()->first; }

    /// Label such as "X0 Z3" ("I" for the identity).
    std::string label() const;

    PauliString& operator*=(Complex c) {
        coefficient *= c;
        return *this;
    }
};

/// Product of two strings, tracking the phase from the single-qubit algebra.
PauliString operator*(const PauliString& a, const PauliString& b);

class OperatorSum {
   public:
    OperatorSum() = default;
    explicit OperatorSum(std::vector<PauliString> terms) : terms_(std::move(terms)) {}
    OperatorSum(std::initializer_list<PauliString> terms) : terms_(terms) {}

    const std::vector<PauliString>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    void add(PauliString term) { terms_.push_back(std::move(term)); }

    /// Merges identical factor maps, drops |coefficient| < drop_tol, sorts by factor map.
    OperatorSum canonical(double drop_tol = 1e-14) const;

    /// True when every canonical coefficient is real, i.e. the sum is Hermitian.
    bool is_hermitian(double tol = 1e-12) const;

    int max_index() const;

    OperatorSum& operator+=(const OperatorSum& other);
    OperatorSum& operator*=(Complex c);

    friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
    friend OperatorSum operator*(Complex c, OperatorSum a) { return a *= c; }
    friend OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);

   private:
    std::vector<PauliString> terms_;
};

struct StateVector {
    QubitRegister reg;
    Eigen::VectorXcd amplitudes;

    /// Computational basis state |index>.
    static StateVector basis(const QubitRegister& reg, std::uint64_t index);
    /// Product state with every qubit in |+>.
    static StateVector plus(const QubitRegister& reg);

    double norm() const { return amplitudes.norm(); }
};

/// Dense matrix of `op` under the register's bit convention.
DenseOperator realize(const OperatorSum& op, const QubitRegister& reg);

/// op|psi> computed term by term without a dense matrix.
Eigen::VectorXcd apply(const OperatorSum& op, const QubitRegister& reg, const Eigen::VectorXcd& psi);

/// <psi|op|psi>; op must be Hermitian.
double expectation(const StateVector& state, const OperatorSum& op);

/// Evolution direction: Backward is exp(-i t H), Forward is exp(+i t H).
enum class TimeSign : int { Backward = -1, Forward = +1 };

/// Eigendecomposition of a Hermitian matrix, reused for propagation at many times.
class SpectralPropagator {
   public:
    explicit SpectralPropagator(const DenseOperator& hermitian);

    const Eigen::VectorXd& energies() const { return energies_; }
    const DenseOperator& eigenvectors() const { return vectors_; }

    /// exp(sign * i * t * H) |psi>.
    Eigen::VectorXcd evolve(const Eigen::VectorXcd& psi, double t, TimeSign sign = TimeSign::Backward) const;
    /// exp(sign * i * t * H).
    DenseOperator unitary(double t, TimeSign sign = TimeSign::Backward) const;
    /// Diagonal phases exp(sign * i * t * E_k).
    Eigen::VectorXcd phases(double t, TimeSign sign = TimeSign::Backward) const;

   private:
    Eigen::VectorXd energies_;
    DenseOperator vectors_;
};

/// Throws ContractError when max |M - M^dagger| exceeds tol.
void require_hermitian(const DenseOperator& m, double tol = 1e-12);

StateVector evolve(const StateVector& state, const OperatorSum& h, double t, TimeSign sign = TimeSign::Backward);

DenseOperator propagator(const OperatorSum& h, const QubitRegister& reg, double t,
                         TimeSign sign = TimeSign::Backward);

}  // namespace gadgetsim
