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

// Seeded reproductions of the gadget dynamics experiments. Each run returns
// named tables plus scalar summaries and is a pure function of its spec.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gadgetsim/encoding.h"
#include "gadgetsim/gadget.h"

namespace gadgetsim {

enum class ExperimentKind { Ghz, PerturbedX, BitFlip, InfidelitySweep, MinorEmbedding };

std::string to_string(ExperimentKind kind);
/// Accepts "ghz", "perturbed-x", "bit-flip", "infidelity-sweep", "minor-embedding".
ExperimentKind parse_experiment_kind(const std::string& name);

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::Ghz;
    GadgetConfig config;
    std::vector<double> time_grid;
    /// Empty means "use config.gamma only".
    std::vector<double> gamma_grid;
    std::vector<double> eta_grid;
    int repetitions = 10;
    std::uint64_t seed = 0;
    /// Bit-flip only: drive X_2 with strength 1/S_02 instead of 1.
    bool corrected_drive = false;

    /// Kind-specific defaults (n_d = 5, gamma = 8, alpha = 1, 200 points on [0, 4 pi], ...).
    static ExperimentSpec defaults(ExperimentKind kind);
    void validate() const;
    std::vector<double> gammas() const;
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& label) const;
    std::vector<double> values(const std::string& label) const;
    /// Rows whose `label` column equals `value` exactly.
    Table where(const std::string& label, double value) const;
};

struct ExperimentResult {
    ExperimentSpec spec;
    std::vector<Table> tables;
    /// Scalar headline values, keyed by name (e.g. "f_ghz_half_pi@gamma=8").
    std::map<std::string, double> summary;
    std::string version;
    double wall_time_s = 0.0;

    const Table& table(const std::string& name) const;
    double at(const std::string& key) const;
};

/// Key used in ExperimentResult::summary for a value tagged with a gamma.
std::string summary_key(const std::string& name, double gamma);

ExperimentResult run_ghz(const ExperimentSpec& spec);
ExperimentResult run_perturbed_x(const ExperimentSpec& spec);
ExperimentResult run_bit_flip(const ExperimentSpec& spec);
ExperimentResult run_infidelity_sweep(const ExperimentSpec& spec);
ExperimentResult run_minor_embedding(const ExperimentSpec& spec);
ExperimentResult run_experiment(const ExperimentSpec& spec);

std::string library_version();

// Building blocks shared by the runners and exposed for tests.

/// Logical amplitudes of (|+...+> + i|-...->)/sqrt(2).
Eigen::VectorXcd ghz_target(int n_data);
/// Logical product state |+...+> or |-...->.
Eigen::VectorXcd uniform_x_state(int n_data, int sign);

/// <psi| U_enc (X_i (x) 1) U_enc^dagger |psi> for every data qubit i. Leaked components
/// contribute, so the values separate when confinement is weak.
std::vector<double> dressed_x_expectations(const Eigen::VectorXcd& physical, const EncodingBundle& bundle);

/// Ideal GHZ fidelity (1 + sin(alpha t))/2 under the effective parity Hamiltonian.
double ideal_ghz_fidelity(double alpha, double t);

/// <X_i>(t) of the two-level model s00 sigma_z + (alpha/2)(1 - sigma_x) started in sigma_z = +1,
/// the restriction of the logical dynamics to span{|+...+>, |-...->}.
double two_level_x(double s00, double alpha, double t);

/// Bare data-marginal probability of data configuration z.
double data_population(const Eigen::VectorXcd& physical, const QubitRegister& reg, BitMask z);

/// Ancilla amplitudes of |z, a> normalized by the data population of z.
Eigen::VectorXcd conditional_ancilla_state(const Eigen::VectorXcd& physical, const QubitRegister& reg, BitMask z);

/// Physical Hamiltonian of the bit-flip run: confined gadget (or nothing at gamma = 0) plus X on data qubit 2.
OperatorSum bit_flip_hamiltonian(const GadgetConfig& config, bool corrected_drive);

struct FlipTiming {
    /// First upward and downward crossings of population 1/2 by the flipped configuration.
    double rise = 0.0;
    double fall = 0.0;
    double period() const { return 2.0 * (fall - rise); }
    double extremum() const { return 0.5 * (rise + fall); }
};

/// Locates the half-population crossings of logical |00100> when starting from |00000>.
FlipTiming measure_flip(const GadgetConfig& config, bool corrected_drive);

/// Per-repetition noise seed; the same draw is reused across gamma and eta so sweeps use
/// common random numbers.
std::uint64_t repetition_seed(std::uint64_t base_seed, int repetition);

/// Flip overlap |<-...-|<0...0| U_enc^dag exp(+i pi H) U_enc |+...+>|0...0>|^2.
double minor_embedding_fidelity(const GadgetConfig& config, const EncodingBundle& bundle, const NoiseDraw& noise);

}  // namespace gadgetsim
