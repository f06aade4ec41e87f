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

#include "gadgetsim/pauli.h"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "gadgetsim/errors.h"

namespace gadgetsim {

int max_qubits() {
    if (const char* env = std::getenv("GADGETSIM_MAX_QUBITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 31) {
            return static_cast<int>(v);
        }
    }
    return kDefaultMaxQubits;
}

QubitRegister QubitRegister::chain(int n_data) {
    if (n_data < 2) {
        throw ConfigError("chain gadgets need n_d >= 2, got " + std::to_string(n_data));
    }
    QubitRegister reg{n_data, n_data - 1};
    reg.validate();
    return reg;
}

int QubitRegister::data(int i) const {
    if (i < 0 || i >= n_data) {
        throw ConfigError("data index " + std::to_string(i) + " out of range");
    }
    return i;
}

int QubitRegister::ancilla(int i) const {
    if (i < 0 || i >= n_ancilla) {
        throw ConfigError("ancilla index " + std::to_string(i) + " out of range");
    }
    return n_data + i;
}

void QubitRegister::validate() const {
    if (n_data < 0 || n_ancilla < 0 || total() < 1) {
        throw ConfigError("register must hold at least one qubit");
    }
    if (total() > max_qubits()) {
        throw ConfigError("register of " + std::to_string(total()) + " qubits exceeds the dense cap of " +
                          std::to_string(max_qubits()) + " (set GADGETSIM_MAX_QUBITS to override)");
    }
}

std::string PauliString::label() const {
    if (factors.empty()) {
        return "I";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [q, p] : factors) {
        if (!first) {
            os << ' ';
        }
        os << static_cast<char>(p) << q;
        first = false;
    }
    return os.str();
}

namespace {

// Single-qubit product a*b = phase * c; c == nullopt means identity.
struct SingleProduct {
    Complex phase;
    std::optional<Pauli> result;
};

int pauli_rank(Pauli p) {
    switch (p) {
        case Pauli::X:
            return 0;
        case Pauli::Y:
            return 1;
        case Pauli::Z:
            return 2;
    }
    return 0;
}

SingleProduct multiply_single(Pauli a, Pauli b) {
    if (a == b) {
        return {1.0, std::nullopt};
    }
    static constexpr Pauli kByRank[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    int ra = pauli_rank(a);
    int rb = pauli_rank(b);
    int rc = 3 - ra - rb;
    // Cyclic order X -> Y -> Z gives +i.
    bool cyclic = (rb - ra + 3) % 3 == 1;
    return {cyclic ? Complex{0.0, 1.0} : Complex{0.0, -1.0}, kByRank[rc]};
}

struct Masks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    int y_count = 0;
};

Masks masks_of(const PauliString& s, const QubitRegister& reg) {
    Masks m;
    for (const auto& [q, p] : s.factors) {
        if (q < 0 || q >= reg.total()) {
            throw ConfigError("Pauli factor on qubit " + std::to_string(q) + " outside a register of " +
                              std::to_string(reg.total()) + " qubits");
        }
        std::uint64_t bit = std::uint64_t{1} << reg.bit(q);
        if (p == Pauli::X || p == Pauli::Y) {
            m.x |= bit;
        }
        if (p == Pauli::Z || p == Pauli::Y) {
            m.z |= bit;
        }
        if (p == Pauli::Y) {
            ++m.y_count;
        }
    }
    return m;
}

Complex i_power(int k) {
    switch (k & 3) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

}  // namespace

PauliString operator*(const PauliString& a, const PauliString& b) {
    PauliString out{a.coefficient * b.coefficient, a.factors};
    for (const auto& [q, p] : b.factors) {
        auto it = out.factors.find(q);
        if (it == out.factors.end()) {
            out.factors.emplace(q, p);
            continue;
        }
        SingleProduct prod = multiply_single(it->second, p);
        out.coefficient *= prod.phase;
        if (prod.result) {
            it->second = *prod.result;
        } else {
            out.factors.erase(it);
        }
    }
    return out;
}

OperatorSum OperatorSum::canonical(double drop_tol) const {
    std::map<std::map<int, Pauli>, Complex> merged;
    for (const auto& t : terms_) {
        merged[t.factors] += t.coefficient;
    }
    std::vector<PauliString> out;
    out.reserve(merged.size());
    for (auto& [f, c] : merged) {
        if (std::abs(c) >= drop_tol) {
            out.emplace_back(c, f);
        }
    }
    return OperatorSum(std::move(out));
}

bool OperatorSum::is_hermitian(double tol) const {
    const OperatorSum merged = canonical();
    for (const auto& t : merged.terms()) {
        if (std::abs(t.coefficient.imag()) > tol) {
            return false;
        }
    }
    return true;
}

int OperatorSum::max_index() const {
    int m = -1;
    for (const auto& t : terms_) {
        m = std::max(m, t.max_index());
    }
    return m;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

OperatorSum& OperatorSum::operator*=(Complex c) {
    for (auto& t : terms_) {
        t.coefficient *= c;
    }
    return *this;
}

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
    OperatorSum out;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            out.add(ta * tb);
        }
    }
    return out.canonical();
}

StateVector StateVector::basis(const QubitRegister& reg, std::uint64_t index) {
    reg.validate();
    if (index >= reg.dim()) {
        throw ConfigError("basis index out of range");
    }
    StateVector s{reg, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.dim()))};
    s.amplitudes(static_cast<Eigen::Index>(index)) = 1.0;
    return s;
}

StateVector StateVector::plus(const QubitRegister& reg) {
    reg.validate();
    auto dim = static_cast<Eigen::Index>(reg.dim());
    return {reg, Eigen::VectorXcd::Constant(dim, Complex{1.0 / std::sqrt(static_cast<double>(dim)), 0.0})};
}

DenseOperator realize(const OperatorSum& op, const QubitRegister& reg) {
    reg.validate();
    const auto dim = static_cast<std::uint64_t>(reg.dim());
    DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& term : op.terms()) {
        Masks mk = masks_of(term, reg);
        Complex base = term.coefficient * i_power(mk.y_count);
        for (std::uint64_t col = 0; col < dim; ++col) {
            double sign = (std::popcount(col & mk.z) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(col ^ mk.x), static_cast<Eigen::Index>(col)) += sign * base;
        }
    }
    return m;
}

Eigen::VectorXcd apply(const OperatorSum& op, const QubitRegister& reg, const Eigen::VectorXcd& psi) {
    reg.validate();
    const auto dim = static_cast<std::uint64_t>(reg.dim());
    if (static_cast<std::uint64_t>(psi.size()) != dim) {
        throw ContractError("state dimension does not match register");
    }
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
    for (const auto& term : op.terms()) {
        Masks mk = masks_of(term, reg);
        Complex base = term.coefficient * i_power(mk.y_count);
        for (std::uint64_t col = 0; col < dim; ++col) {
            double sign = (std::popcount(col & mk.z) & 1) ? -1.0 : 1.0;
            out(static_cast<Eigen::Index>(col ^ mk.x)) += sign * base * psi(static_cast<Eigen::Index>(col));
        }
    }
    return out;
}

double expectation(const StateVector& state, const OperatorSum& op) {
    if (!op.is_hermitian()) {
        throw ContractError("expectation requires a Hermitian operator");
    }
    Complex v = state.amplitudes.dot(apply(op, state.reg, state.amplitudes));
    return v.real();
}

void require_hermitian(const DenseOperator& m, double tol) {
    if (m.rows() != m.cols()) {
        throw ContractError("operator is not square");
    }
    double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol) {
        throw ContractError("operator is not Hermitian (max |M - M^dagger| = " + std::to_string(dev) + ")");
    }
}

SpectralPropagator::SpectralPropagator(const DenseOperator& hermitian) {
    require_hermitian(hermitian, 1e-10);
    // Every Hamiltonian built from X/Z strings with real weights is real symmetric;
    // the real solver is several times faster on those.
    if (hermitian.imag().cwiseAbs().maxCoeff() == 0.0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hermitian.real());
        if (solver.info() != Eigen::Success) {
            throw NumericalError("eigendecomposition failed");
        }
        energies_ = solver.eigenvalues();
        vectors_ = solver.eigenvectors().cast<Complex>();
    } else {
        Eigen::SelfAdjointEigenSolver<DenseOperator> solver(hermitian);
        if (solver.info() != Eigen::Success) {
            throw NumericalError("eigendecomposition failed");
        }
        energies_ = solver.eigenvalues();
        vectors_ = solver.eigenvectors();
    }
}

Eigen::VectorXcd SpectralPropagator::phases(double t, TimeSign sign) const {
    if (!std::isfinite(t)) {
        throw ContractError("evolution time must be finite");
    }
    double s = static_cast<double>(static_cast<int>(sign));
    Eigen::VectorXcd ph(energies_.size());
    for (Eigen::Index k = 0; k < energies_.size(); ++k) {
        ph(k) = std::polar(1.0, s * t * energies_(k));
    }
    return ph;
}

Eigen::VectorXcd SpectralPropagator::evolve(const Eigen::VectorXcd& psi, double t, TimeSign sign) const {
    if (psi.size() != energies_.size()) {
        throw ContractError("state dimension does not match Hamiltonian");
    }
    Eigen::VectorXcd coeffs = vectors_.adjoint() * psi;
    coeffs = coeffs.cwiseProduct(phases(t, sign));
    Eigen::VectorXcd out = vectors_ * coeffs;
    if (std::abs(out.norm() - psi.norm()) > 1e-10) {
        throw NumericalError("norm drift during evolution");
    }
    return out;
}

DenseOperator SpectralPropagator::unitary(double t, TimeSign sign) const {
    return vectors_ * phases(t, sign).asDiagonal() * vectors_.adjoint();
}

StateVector evolve(const StateVector& state, const OperatorSum& h, double t, TimeSign sign) {
    SpectralPropagator prop(realize(h, state.reg));
    return {state.reg, prop.evolve(state.amplitudes, t, sign)};
}

DenseOperator propagator(const OperatorSum& h, const QubitRegister& reg, double t, TimeSign sign) {
    SpectralPropagator prop(realize(h, reg));
    DenseOperator u = prop.unitary(t, sign);
    auto dim = u.rows();
    double dev = (u * u.adjoint() - DenseOperator::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (dev > 1e-10) {
        throw NumericalError("propagator lost unitarity");
    }
    return u;
}

}  // namespace gadgetsim
