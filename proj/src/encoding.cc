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

#include "gadgetsim/encoding.h"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "gadgetsim/errors.h"

namespace gadgetsim {

BitMask parse_bits(const std::string& bits) {
    if (bits.empty() || bits.size() > 63) {
        throw ConfigError("bit string must hold 1..63 characters");
    }
    BitMask v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ConfigError("bit string '" + bits + "' may only contain 0 and 1");
        }
        v = (v << 1) | static_cast<BitMask>(c - '0');
    }
    return v;
}

std::string format_bits(BitMask value, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        s[static_cast<std::size_t>(i)] = bit_at(value, i, width) ? '1' : '0';
    }
    return s;
}

namespace {

void require_data_mask(BitMask z, const GadgetConfig& config) {
    if (config.n_data < 2 || config.n_data > 62 || (z >> config.n_data) != 0) {
        throw ConfigError("data configuration does not fit " + std::to_string(config.n_data) + " bits");
    }
}

int right_boundary(const GadgetConfig& config) { return VirtualBoundary::of(config).right; }

}  // namespace

bool is_satisfiable(BitMask z, const GadgetConfig& config) {
    require_data_mask(z, config);
    int parity_sign = (std::popcount(z) & 1) ? -1 : 1;
    return parity_sign * right_boundary(config) == 1;
}

BitMask cumulative_parity_ancillae(BitMask z, const GadgetConfig& config, int defect) {
    require_data_mask(z, config);
    const int nd = config.n_data;
    const int na = nd - 1;
    BitMask a = 0;
    int running = 1;
    for (int i = 0; i < na; ++i) {
        running *= z_value(z, i, nd);
        if (i == defect) {
            running = -running;
        }
        if (running < 0) {
            a |= BitMask{1} << (na - 1 - i);
        }
    }
    return a;
}

std::vector<int> defect_positions(BitMask z, BitMask a, const GadgetConfig& config) {
    require_data_mask(z, config);
    const int nd = config.n_data;
    const int na = nd - 1;
    if ((a >> na) != 0) {
        throw ConfigError("ancilla configuration does not fit " + std::to_string(na) + " bits");
    }
    const VirtualBoundary vb = VirtualBoundary::of(config);
    auto ancilla = [&](int i) {
        if (i < 0) return vb.left;
        if (i >= na) return vb.right;
        return z_value(a, i, na);
    };
    std::vector<int> broken;
    for (int i = 0; i < nd; ++i) {
        if (z_value(z, i, nd) * ancilla(i - 1) * ancilla(i) < 0) {
            broken.push_back(i);
        }
    }
    return broken;
}

DefectProfile analyze_defects(BitMask z, const GadgetConfig& config) {
    DefectProfile p;
    p.z = z;
    p.satisfiable = is_satisfiable(z, config);
    if (p.satisfiable) {
        p.defect_parity = 0;
        p.ground_ancillae.push_back(cumulative_parity_ancillae(z, config));
    } else {
        p.defect_parity = 1;
        for (int j = 0; j < config.n_data; ++j) {
            p.ground_ancillae.push_back(cumulative_parity_ancillae(z, config, j));
        }
    }
    return p;
}

SineTransform sine_transform(int n) {
    if (n < 1) {
        throw ConfigError("sine transform needs n >= 1");
    }
    SineTransform st;
    st.n = n;
    st.s.resize(n, n);
    st.eigenvalues.resize(n);
    const double norm = std::sqrt(2.0 / (n + 1));
    for (int k = 0; k < n; ++k) {
        st.eigenvalues(k) = -2.0 * std::cos(std::numbers::pi * (k + 1) / (n + 1));
        for (int j = 0; j < n; ++j) {
            st.s(k, j) = norm * std::sin(std::numbers::pi * (k + 1) * (j + 1) / (n + 1));
        }
    }
    return st;
}

Eigen::MatrixXd hopping_matrix(int n, double off_diagonal) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j + 1 < n; ++j) {
        m(j, j + 1) = off_diagonal;
        m(j + 1, j) = off_diagonal;
    }
    return m;
}

namespace {

constexpr double kDegeneracyTol = 1e-9;
constexpr double kCrossCheckTol = 1e-9;

// Index of the largest-magnitude entry; the first one wins ties.
Eigen::Index dominant_index(const Eigen::VectorXd& v) {
    double best = v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) >= best - 1e-12) {
            return i;
        }
    }
    return 0;
}

// Rotates each degenerate cluster onto the eigenbasis of the basis-index operator
// restricted to it, then fixes signs so the dominant entry is positive.
void canonicalize_eigenbasis(Eigen::VectorXd& energies, Eigen::MatrixXd& states) {
    const Eigen::Index dim = energies.size();
    Eigen::VectorXd index_weights = Eigen::VectorXd::LinSpaced(states.rows(), 0.0, static_cast<double>(states.rows() - 1));
    Eigen::Index start = 0;
    while (start < dim) {
        Eigen::Index end = start + 1;
        while (end < dim && energies(end) - energies(end - 1) <= kDegeneracyTol * std::max(1.0, std::abs(energies(end)))) {
            ++end;
        }
        const Eigen::Index m = end - start;
        if (m > 1) {
            Eigen::MatrixXd q = states.middleCols(start, m);
            Eigen::MatrixXd restricted = q.transpose() * index_weights.asDiagonal() * q;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(restricted);
            states.middleCols(start, m) = q * solver.eigenvectors();
            double mean = energies.segment(start, m).mean();
            energies.segment(start, m).setConstant(mean);
        }
        start = end;
    }
    for (Eigen::Index c = 0; c < dim; ++c) {
        Eigen::Index i = dominant_index(states.col(c));
        if (states(i, c) < 0) {
            states.col(c) *= -1.0;
        }
    }
}

void cross_check_sector(const SectorBlock& block, const GadgetConfig& config) {
    const int nd = config.n_data;
    const std::string zs = format_bits(block.z, nd);
    if (block.energies.size() > 1 && block.energies(1) - block.energies(0) <= kDegeneracyTol) {
        throw ConstructionError("logical level of sector z=" + zs + " is degenerate");
    }
    Eigen::VectorXd analytic = Eigen::VectorXd::Zero(block.states.rows());
    DefectProfile profile = analyze_defects(block.z, config);
    if (profile.satisfiable) {
        analytic(static_cast<Eigen::Index>(profile.ground_ancillae.front())) = 1.0;
    } else {
        SineTransform st = sine_transform(nd);
        for (int j = 0; j < nd; ++j) {
            double gauge = 1.0;
            if (config.driver == DriverKind::ThreeBody) {
                gauge = static_cast<double>(z_value(block.z, j, nd));
            }
            analytic(static_cast<Eigen::Index>(profile.ground_ancillae[static_cast<std::size_t>(j)])) = gauge * st.s(0, j);
        }
    }
    double overlap = std::abs(analytic.dot(block.states.col(0)));
    if (std::abs(overlap - 1.0) > kCrossCheckTol) {
        throw ConstructionError("dressed ground state of sector z=" + zs +
                                " disagrees with the analytic defect wavefunction (overlap " +
                                std::to_string(overlap) + ")");
    }
}

}  // namespace

DenseOperator EncodingBundle::logical_columns() const {
    const Eigen::Index nz = Eigen::Index{1} << reg.n_data;
    DenseOperator cols(u_enc.rows(), nz);
    for (Eigen::Index z = 0; z < nz; ++z) {
        cols.col(z) = u_enc.col(z << reg.n_ancilla);
    }
    return cols;
}

Eigen::VectorXd EncodingBundle::ancilla_ground(BitMask z) const {
    if (z >= sectors.size()) {
        throw ConfigError("data configuration out of range");
    }
    return sectors[z].states.col(0);
}

Eigen::VectorXcd EncodingBundle::dress(const Eigen::VectorXcd& logical) const {
    if (logical.size() != (Eigen::Index{1} << reg.n_data)) {
        throw ContractError("logical state has the wrong dimension");
    }
    return logical_columns() * logical;
}

Eigen::VectorXcd EncodingBundle::undress(const Eigen::VectorXcd& physical) const {
    if (physical.size() != u_enc.rows()) {
        throw ContractError("physical state has the wrong dimension");
    }
    return logical_columns().adjoint() * physical;
}

EncodingBundle build_encoding(const GadgetConfig& config) {
    if (config.driver != DriverKind::FiveBody && config.driver != DriverKind::ThreeBody) {
        throw ConfigError("encoding needs the five-body or three-body driver");
    }
    config.validate_calibrated();

    EncodingBundle bundle;
    bundle.config = config;
    bundle.reg = config.reg();
    bundle.beta = calibrate_beta(config.gamma, config.alpha, config.n_data);

    const QubitRegister& reg = bundle.reg;
    const Eigen::Index dim = static_cast<Eigen::Index>(reg.dim());
    const Eigen::Index block = Eigen::Index{1} << reg.n_ancilla;
    const Eigen::Index nz = Eigen::Index{1} << reg.n_data;

    DenseOperator h = realize(build_gadget(config), reg);
    if (h.imag().cwiseAbs().maxCoeff() > 1e-14) {
        throw ConstructionError("gadget Hamiltonian is not real");
    }
    Eigen::MatrixXd hr = h.real();

    bundle.u_enc = DenseOperator::Zero(dim, dim);
    bundle.projector = DenseOperator::Zero(dim, dim);
    bundle.sectors.reserve(static_cast<std::size_t>(nz));
    for (Eigen::Index z = 0; z < nz; ++z) {
        const Eigen::Index off = z * block;
        double leak = hr.middleRows(off, block).cwiseAbs().sum() - hr.block(off, off, block, block).cwiseAbs().sum();
        if (leak > 1e-12) {
            throw ConstructionError("gadget Hamiltonian couples different data sectors");
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hr.block(off, off, block, block));
        if (solver.info() != Eigen::Success) {
            throw NumericalError("sector eigendecomposition failed");
        }
        SectorBlock sector{static_cast<BitMask>(z), solver.eigenvalues(), solver.eigenvectors()};
        canonicalize_eigenbasis(sector.energies, sector.states);
        cross_check_sector(sector, config);
        bundle.u_enc.block(off, off, block, block) = sector.states.cast<Complex>();
        bundle.projector(off, off) = 1.0;
        bundle.sectors.push_back(std::move(sector));
    }
    bundle.dressed_projector = bundle.u_enc * bundle.projector * bundle.u_enc.adjoint();
    bundle.u_gauge = gauge_transform(config);
    return bundle;
}

std::vector<Eigen::VectorXd> sector_energies(const OperatorSum& h, const QubitRegister& reg) {
    reg.validate();
    DenseOperator m = realize(h, reg);
    require_hermitian(m);
    const Eigen::Index block = Eigen::Index{1} << reg.n_ancilla;
    const Eigen::Index nz = Eigen::Index{1} << reg.n_data;
    std::vector<Eigen::VectorXd> out;
    for (Eigen::Index z = 0; z < nz; ++z) {
        const Eigen::Index off = z * block;
        double leak = m.middleRows(off, block).cwiseAbs().sum() - m.block(off, off, block, block).cwiseAbs().sum();
        if (leak > 1e-12) {
            throw ContractError("Hamiltonian couples different data sectors");
        }
        Eigen::SelfAdjointEigenSolver<DenseOperator> solver(m.block(off, off, block, block), Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw NumericalError("sector eigendecomposition failed");
        }
        out.push_back(solver.eigenvalues());
    }
    return out;
}

DenseOperator effective_operator(const DenseOperator& op, const EncodingBundle& bundle) {
    if (op.rows() != bundle.u_enc.rows() || op.cols() != bundle.u_enc.cols()) {
        throw ContractError("operator dimension does not match the encoding");
    }
    DenseOperator cols = bundle.logical_columns();
    return cols.adjoint() * op * cols;
}

DenseOperator effective_operator(const OperatorSum& op, const EncodingBundle& bundle) {
    return effective_operator(realize(op, bundle.reg), bundle);
}

double logical_overlap(BitMask z1, BitMask z2, int i, const GadgetConfig& config) {
    require_data_mask(z1, config);
    require_data_mask(z2, config);
    const int nd = config.n_data;
    if (i < 0 || i >= nd) {
        throw ContractError("flip position out of range");
    }
    if ((z1 ^ z2) != (BitMask{1} << (nd - 1 - i))) {
        throw ContractError("logical overlap needs configurations differing exactly in bit " + std::to_string(i));
    }
    return sine_transform(nd).s(0, i);
}

DenseOperator gauge_transform(const GadgetConfig& config) {
    config.validate();
    const QubitRegister reg = config.reg();
    const Eigen::Index dim = static_cast<Eigen::Index>(reg.dim());
    const BitMask amask = (BitMask{1} << reg.n_ancilla) - 1;
    DenseOperator g = DenseOperator::Zero(dim, dim);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        BitMask z = static_cast<BitMask>(idx) >> reg.n_ancilla;
        BitMask a = static_cast<BitMask>(idx) & amask;
        std::vector<int> d = defect_positions(z, a, config);
        double phase = 1.0;
        if (d.size() == 1) {
            phase = static_cast<double>(z_value(z, d.front(), reg.n_data));
        }
        g(idx, idx) = phase;
    }
    return g;
}

DenseOperator logical_pauli(const std::string& paulis) {
    DenseOperator out = DenseOperator::Identity(1, 1);
    for (char c : paulis) {
        DenseOperator p(2, 2);
        switch (c) {
            case 'I':
                p << 1, 0, 0, 1;
                break;
            case 'X':
                p << 0, 1, 1, 0;
                break;
            case 'Y':
                p << 0, Complex(0, -1), Complex(0, 1), 0;
                break;
            case 'Z':
                p << 1, 0, 0, -1;
                break;
            default:
                throw ConfigError(std::string("unknown Pauli label '") + c + "'");
        }
        DenseOperator next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c2 = 0; c2 < out.cols(); ++c2) {
                next.block(2 * r, 2 * c2, 2, 2) = out(r, c2) * p;
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace gadgetsim
