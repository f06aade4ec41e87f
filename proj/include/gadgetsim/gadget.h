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

// Hamiltonian constructors for domain-wall chain gadgets.
//
// Clause i of the chain couples data qubit i with ancillae i-1 and i. The
// ancillae at -1 and n_d-1 are virtual: the left one is fixed to +1, the right
// one to +1 (unkinked) or -1 (kinked). Virtual values are substituted when
// terms are emitted, so boundary clauses come out as two-body strings.

#include <cstdint>
#include <string>
#include <vector>

#include "gadgetsim/pauli.h"

namespace gadgetsim {

enum class DriverKind { None, SingleX, FiveBody, ThreeBody };

std::string to_string(DriverKind kind);
/// Accepts "none", "single-x", "five-body", "three-body".
DriverKind parse_driver(const std::string& name);

struct GadgetConfig {
    int n_data = 5;
    bool kinked = false;
    double gamma = 8.0;
    double alpha = 1.0;
    DriverKind driver = DriverKind::FiveBody;
    /// Strength used only by the single-X driver.
    double single_x_beta = 1.0;

    QubitRegister reg() const { return QubitRegister::chain(n_data); }

    /// n_d >= 2, finite parameters, gamma > 0 and alpha >= 0.
    void validate() const;
    /// validate() plus gamma > alpha, as required to calibrate a subspace driver.
    void validate_calibrated() const;
};

struct VirtualBoundary {
    int left = +1;
    int right = +1;

    static VirtualBoundary of(const GadgetConfig& config) { return {+1, config.kinked ? -1 : +1}; }
};

struct NoiseDraw {
    std::vector<double> g;
    double eta = 0.0;
    std::uint64_t seed = 0;
};

/// n i.i.d. draws from N(0, eta), a deterministic function of `seed` on every platform.
NoiseDraw draw_noise(int n, double eta, std::uint64_t seed);

/// Sum over clauses of (1 - s Z_i Z^a_{i-1} Z^a_i)/2: energy 0 per satisfied clause, 1 per broken one.
OperatorSum build_chain(const GadgetConfig& config);

/// -beta * sum_i X^a_i.
OperatorSum build_single_x_driver(const GadgetConfig& config, double beta);

/// -(1/2) sum_i X^a_i (1 - Z_i Z_{i+1} Z^a_{i-1} Z^a_{i+1}). The bracket/2 projects onto a lone
/// defect at clause i or i+1, so the driver hops single defects with unit amplitude and the
/// one-defect block is the tridiagonal matrix with -1 off the diagonal.
OperatorSum build_five_body_driver(const GadgetConfig& config);

/// -(1/2) sum_i X^a_i (Z_i Z_{i+1} - Z^a_{i-1} Z^a_{i+1}); gauge-equivalent to the five-body
/// driver on one-defect states.
OperatorSum build_three_body_driver(const GadgetConfig& config);

/// Driver strength that places the one-defect ground level alpha above the zero-defect level.
double calibrate_beta(double gamma, double alpha, int n_data);

/// Driver selected by config.driver at unit strength (single-X uses config.single_x_beta).
OperatorSum build_driver(const GadgetConfig& config);

/// gamma * chain + beta * subspace driver with beta from calibrate_beta.
OperatorSum build_gadget(const GadgetConfig& config);

/// gamma * chain plus whatever driver the config names, at its natural strength
/// (calibrated beta for subspace drivers). Used for spectra of arbitrary configs.
OperatorSum build_hamiltonian(const GadgetConfig& config);

/// X_i X_{i+1} X^a_i.
OperatorSum build_logical_xx(const GadgetConfig& config, int i);

/// Gadget + sum_i g_i Z_i (data qubits) + gamma * sum_i X_i X_{i+1} X^a_i.
OperatorSum build_minor_embedding_system(const GadgetConfig& config, const NoiseDraw& noise);

/// Single Pauli on one qubit, convenience for perturbations.
OperatorSum single_qubit(Pauli p, int q, double strength = 1.0);

}  // namespace gadgetsim
