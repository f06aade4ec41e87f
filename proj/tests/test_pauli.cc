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

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "gadgetsim/errors.h"
#include "gadgetsim/pauli.h"
#include "oracles.h"

namespace gadgetsim {
namespace {

std::string dense_label(const PauliString& s, int n) {
    std::string label(static_cast<std::size_t>(n), 'I');
    for (const auto& [q, p] : s.factors) label[static_cast<std::size_t>(q)] = static_cast<char>(p);
    return label;
}

PauliString random_string(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    PauliString s = PauliString::identity(Complex(coef(rng), coef(rng)));
    const Pauli kinds[] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (int q = 0; q < n; ++q) {
        int k = pick(rng);
        if (k < 3) s.factors[q] = kinds[k];
    }
    return s;
}

TEST(PauliAlgebra, SingleQubitPhaseTable) {
    const Pauli all[] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (Pauli a : all) {
        for (Pauli b : all) {
            PauliString prod = PauliString::single(a, 0) * PauliString::single(b, 0);
            oracle::Matrix expected = oracle::pauli2(static_cast<char>(a)) * oracle::pauli2(static_cast<char>(b));
            oracle::Matrix got = prod.coefficient * oracle::kron_string(dense_label(prod, 1));
            EXPECT_LT((got - expected).cwiseAbs().maxCoeff(), 1e-15) << static_cast<char>(a) << static_cast<char>(b);
        }
    }
}

TEST(PauliAlgebra, ProductMatchesDenseProductOnRandomStrings) {
    std::mt19937_64 rng(7);
    const int n = 4;
    for (int trial = 0; trial < 50; ++trial) {
        PauliString a = random_string(rng, n);
        PauliString b = random_string(rng, n);
        PauliString ab = a * b;
        oracle::Matrix expected = a.coefficient * oracle::kron_string(dense_label(a, n)) * b.coefficient *
                                  oracle::kron_string(dense_label(b, n));
        oracle::Matrix got = ab.coefficient * oracle::kron_string(dense_label(ab, n));
        EXPECT_LT((got - expected).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(PauliAlgebra, RealizeMatchesKroneckerOracle) {
    std::mt19937_64 rng(11);
    QubitRegister reg{3, 2};
    for (int trial = 0; trial < 30; ++trial) {
        PauliString s = random_string(rng, reg.total());
        DenseOperator got = realize(OperatorSum{s}, reg);
        oracle::Matrix expected = s.coefficient * oracle::kron_string(dense_label(s, reg.total()));
        EXPECT_LT((got - expected).cwiseAbs().maxCoeff(), 1e-14) << s.label();
    }
}

TEST(PauliAlgebra, ApplyAgreesWithRealize) {
    std::mt19937_64 rng(3);
    QubitRegister reg{3, 2};
    OperatorSum op;
    for (int k = 0; k < 6; ++k) op.add(random_string(rng, reg.total()));
    Eigen::VectorXcd psi = Eigen::VectorXcd::Random(static_cast<Eigen::Index>(reg.dim()));
    EXPECT_LT((apply(op, reg, psi) - realize(op, reg) * psi).norm(), 1e-12);
}

TEST(PauliAlgebra, CanonicalMergesSortsAndDrops) {
    OperatorSum op{PauliString::single(Pauli::Z, 1, 2.0), PauliString::single(Pauli::X, 0, 1.0),
                   PauliString::single(Pauli::Z, 1, -2.0), PauliString::single(Pauli::X, 0, 0.5),
                   PauliString::identity(3.0)};
    OperatorSum c = op.canonical();
    ASSERT_EQ(c.size(), 2u);
    EXPECT_TRUE(c.terms()[0].is_identity());
    EXPECT_EQ(c.terms()[1].label(), "X0");
    EXPECT_DOUBLE_EQ(c.terms()[1].coefficient.real(), 1.5);
    QubitRegister reg{1, 1};
    EXPECT_LT((realize(op, reg) - realize(c, reg)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PauliAlgebra, HermiticityAndExpectationContract) {
    OperatorSum herm{PauliString::single(Pauli::Y, 0, 1.0)};
    OperatorSum anti{PauliString::single(Pauli::Y, 0, Complex(0.0, 1.0))};
    EXPECT_TRUE(herm.is_hermitian());
    EXPECT_FALSE(anti.is_hermitian());
    QubitRegister reg{1, 0};
    StateVector plus = StateVector::plus(reg);
    EXPECT_NEAR(expectation(plus, OperatorSum{PauliString::single(Pauli::X, 0)}), 1.0, 1e-15);
    EXPECT_THROW(expectation(plus, anti), ContractError);
}

TEST(PauliAlgebra, LabelsAndOutOfRangeFactors) {
    PauliString s(1.0, {{0, Pauli::X}, {3, Pauli::Z}});
    EXPECT_EQ(s.label(), "X0 Z3");
    EXPECT_EQ(PauliString::identity().label(), "I");
    EXPECT_THROW(realize(OperatorSum{s}, QubitRegister{2, 1}), ConfigError);
}

TEST(Register, ChainLayoutAndCap) {
    QubitRegister reg = QubitRegister::chain(5);
    EXPECT_EQ(reg.n_ancilla, 4);
    EXPECT_EQ(reg.data(0), 0);
    EXPECT_EQ(reg.ancilla(0), 5);
    EXPECT_EQ(reg.bit(0), 8);
    EXPECT_THROW(QubitRegister::chain(1), ConfigError);
    EXPECT_THROW(reg.data(5), ConfigError);
    EXPECT_THROW(QubitRegister::chain(8).validate(), ConfigError);
}

TEST(Register, EnvironmentOverridesCap) {
    ASSERT_EQ(setenv("GADGETSIM_MAX_QUBITS", "16", 1), 0);
    EXPECT_EQ(max_qubits(), 16);
    EXPECT_NO_THROW(QubitRegister::chain(8).validate());
    ASSERT_EQ(unsetenv("GADGETSIM_MAX_QUBITS"), 0);
    EXPECT_EQ(max_qubits(), kDefaultMaxQubits);
}

TEST(Propagation, SpectralMatchesMatrixExponential) {
    std::mt19937_64 rng(5);
    QubitRegister reg{2, 1};
    OperatorSum h;
    for (int k = 0; k < 8; ++k) {
        PauliString s = random_string(rng, reg.total());
        s.coefficient = s.coefficient.real();
        h.add(s);
    }
    DenseOperator m = realize(h.canonical(), reg);
    SpectralPropagator prop(m);
    for (double t : {0.0, 0.3, 1.7, 5.0}) {
        EXPECT_LT((prop.unitary(t) - oracle::expm(m, t, -1.0)).cwiseAbs().maxCoeff(), 1e-11) << t;
        EXPECT_LT((prop.unitary(t, TimeSign::Forward) - oracle::expm(m, t, +1.0)).cwiseAbs().maxCoeff(), 1e-11);
    }
}

TEST(Propagation, ComplexHermitianAndRoundTrip) {
    QubitRegister reg{2, 0};
    OperatorSum h{PauliString(0.7, {{0, Pauli::Y}, {1, Pauli::X}}), PauliString(0.4, {{0, Pauli::Z}}),
                  PauliString(-0.2, {{1, Pauli::Y}})};
    StateVector psi = StateVector::plus(reg);
    StateVector fwd = evolve(psi, h, 2.5);
    StateVector back = evolve(fwd, h, 2.5, TimeSign::Forward);
    EXPECT_NEAR(fwd.norm(), 1.0, 1e-12);
    EXPECT_LT((back.amplitudes - psi.amplitudes).norm(), 1e-12);
    DenseOperator u = propagator(h, reg, 1.3);
    EXPECT_LT((u.adjoint() * u - DenseOperator::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Propagation, RejectsNonHermitian) {
    DenseOperator m = DenseOperator::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(SpectralPropagator{m}, ContractError);
}

}  // namespace
}  // namespace gadgetsim
