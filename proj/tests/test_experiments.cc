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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gadgetsim/errors.h"
#include "gadgetsim/experiments.h"
#include "oracles.h"

namespace gadgetsim {
namespace {

constexpr double kPi = std::numbers::pi;

ExperimentSpec spec_for(ExperimentKind kind, std::vector<double> gammas, std::vector<double> times) {
    ExperimentSpec s = ExperimentSpec::defaults(kind);
    s.gamma_grid = std::move(gammas);
    s.time_grid = std::move(times);
    return s;
}

TEST(States, TargetsAreNormalized) {
    for (int n = 2; n <= 5; ++n) {
        EXPECT_NEAR(ghz_target(n).norm(), 1.0, 1e-14);
        EXPECT_NEAR(std::abs(uniform_x_state(n, +1).dot(uniform_x_state(n, -1))), 0.0, 1e-14);
    }
}

TEST(Ghz, IdealCurveIsAnalytic) {
    std::vector<double> times;
    for (int k = 0; k < 40; ++k) times.push_back(0.1 * k);
    ExperimentResult r = run_ghz(spec_for(ExperimentKind::Ghz, {8}, times));
    const Table& t = r.table("ghz");
    auto ts = t.values("t");
    auto ideal = t.values("f_ghz_ideal");
    for (std::size_t k = 0; k < ts.size(); ++k) {
        EXPECT_NEAR(ideal[k], ideal_ghz_fidelity(1.0, ts[k]), 1e-9);
    }
    EXPECT_NEAR(r.at(summary_key("f_ghz_ideal_half_pi", 8)), 1.0, 1e-9);
}

TEST(Ghz, InitialRowAndFlipAtPi) {
    ExperimentResult r = run_ghz(spec_for(ExperimentKind::Ghz, {4, 16}, {0.0, kPi}));
    for (double gamma : {4.0, 16.0}) {
        Table t = r.table("ghz").where("gamma", gamma);
        ASSERT_EQ(t.rows.size(), 2u);
        EXPECT_NEAR(t.values("f_ghz")[0], 0.5, 1e-12);
        for (int i = 0; i < 5; ++i) {
            EXPECT_NEAR(t.values("x" + std::to_string(i))[0], 1.0, 1e-12);
            EXPECT_NEAR(t.values("x" + std::to_string(i))[1], -1.0, 1e-9);
        }
    }
}

TEST(Ghz, PinnedHalfPiFidelity) {
    ExperimentResult r = run_ghz(spec_for(ExperimentKind::Ghz, {2, 4, 8, 16}, {0.0}));
    double previous = 0.0;
    for (double gamma : {2.0, 4.0, 8.0, 16.0}) {
        double f = r.at(summary_key("f_ghz_half_pi", gamma));
        EXPECT_GE(f, previous - 1e-12);
        previous = f;
    }
    EXPECT_NEAR(r.at(summary_key("f_ghz_half_pi", 16)), 1.0000000000000002, 1e-6);
}

TEST(PerturbedX, TwoLevelModelMatchesMatrixExponential) {
    const double s00 = oracle::sine_entry(5, 0, 0);
    for (double alpha : {0.0, 1.0, 2.0}) {
        oracle::Matrix h(2, 2);
        h << s00, -0.5 * alpha, -0.5 * alpha, -s00;
        for (double t : {0.0, 0.7, 2.0, 5.5}) {
            Eigen::VectorXcd psi = oracle::expm(h, t) * Eigen::Vector2cd(1.0, 0.0);
            double sz = std::norm(psi(0)) - std::norm(psi(1));
            EXPECT_NEAR(two_level_x(s00, alpha, t), sz, 1e-12);
        }
    }
}

TEST(PerturbedX, ConfinementRestoresHomogeneity) {
    std::vector<double> times;
    for (int k = 0; k < 200; ++k) times.push_back(4.0 * kPi * k / 199.0);
    ExperimentResult r = run_perturbed_x(spec_for(ExperimentKind::PerturbedX, {2, 16}, times));
    EXPECT_LT(r.at(summary_key("mean_heterogeneity", 16)), r.at(summary_key("mean_heterogeneity", 2)));
    EXPECT_LT(r.at(summary_key("max_two_level_deviation", 16)), r.at(summary_key("max_two_level_deviation", 2)));
    EXPECT_NEAR(r.at(summary_key("max_two_level_deviation", 16)), 0.038704539527347592, 1e-6);
    Table first = r.table("perturbed_x");
    for (int i = 0; i < 5; ++i) EXPECT_NEAR(first.values("x" + std::to_string(i))[0], 1.0, 1e-12);
}

TEST(BitFlip, UnconfinedRabiFlip) {
    ExperimentResult r = run_bit_flip(spec_for(ExperimentKind::BitFlip, {0}, {0.0, kPi / 2, kPi}));
    Table t = r.table("bit_flip");
    auto p = t.values("p_00100");
    EXPECT_NEAR(p[0], 0.0, 1e-14);
    EXPECT_NEAR(p[1], 1.0, 1e-12);
    EXPECT_NEAR(p[2], 0.0, 1e-12);
    EXPECT_NEAR(r.at("period_unconfined"), kPi, 1e-10);
}

TEST(BitFlip, PeriodRatioConvergesToInverseOverlap) {
    ExperimentResult r = run_bit_flip(spec_for(ExperimentKind::BitFlip, {8, 32}, {0.0}));
    const double target = 1.0 / oracle::sine_entry(5, 0, 2);
    EXPECT_NEAR(target, std::sqrt(3.0), 1e-12);
    double r8 = r.at(summary_key("period_ratio", 8));
    double r32 = r.at(summary_key("period_ratio", 32));
    EXPECT_LT(std::abs(r32 - target), std::abs(r8 - target));
    EXPECT_NEAR(r32, 1.7333555318564735, 1e-6);
}

TEST(BitFlip, AncillaStateApproachesDomainWallSuperpositionAtStrongConfinement) {
    ExperimentResult r = run_bit_flip(spec_for(ExperimentKind::BitFlip, {1024}, {0.0}));
    const std::pair<const char*, double> expected[] = {
        {"amp_0000", 0.577}, {"amp_0010", 0.5}, {"amp_0011", 0.289}, {"amp_0100", 0.5}, {"amp_1100", 0.289}};
    for (const auto& [key, value] : expected) {
        EXPECT_NEAR(r.at(summary_key(std::string(key) + "_extremum", 1024)), value, 0.005) << key;
    }
}

TEST(BitFlip, CorrectedDriveRestoresBarePeriod) {
    GadgetConfig c = ExperimentSpec::defaults(ExperimentKind::BitFlip).config;
    c.gamma = 64;
    EXPECT_NEAR(measure_flip(c, true).period(), kPi, 0.02);
}

TEST(InfidelitySweep, PinnedPlateauAndMonotoneInfidelity) {
    ExperimentResult r = run_infidelity_sweep(spec_for(ExperimentKind::InfidelitySweep, {4, 8, 16, 32}, {0, 1, 2, 4, 8}));
    const std::pair<double, double> pinned[] = {{4, 0.36146623755822527},
                                                {8, 0.16273354531968087},
                                                {16, 0.053088397547439735},
                                                {32, 0.014540907368088097}};
    for (const auto& [gamma, value] : pinned) {
        EXPECT_NEAR(r.at(summary_key("mean_leakage_5_10", gamma)), value, 1e-6);
    }
    Table t = r.table("infidelity").where("gamma", 8);
    auto infid = t.values("infidelity");
    EXPECT_NEAR(infid[0], 0.0, 1e-12);
    EXPECT_NEAR(t.values("leakage")[0], 0.0, 1e-12);
    for (std::size_t k = 2; k < infid.size(); ++k) EXPECT_GE(infid[k], infid[k - 1]);
}

TEST(MinorEmbedding, SmallGridIsMonotoneAndSeeded) {
    ExperimentSpec s = ExperimentSpec::defaults(ExperimentKind::MinorEmbedding);
    s.config.n_data = 3;
    s.gamma_grid = {2, 8, 32};
    s.eta_grid = {0.1, 0.5, 1.0};
    s.repetitions = 4;
    ExperimentResult a = run_minor_embedding(s);
    ExperimentResult b = run_minor_embedding(s);
    EXPECT_EQ(a.table("minor_embedding").rows, b.table("minor_embedding").rows);
    for (double eta : s.eta_grid) {
        auto f = a.table("minor_embedding").where("eta", eta).values("mean_f");
        for (std::size_t k = 1; k < f.size(); ++k) EXPECT_GE(f[k], f[k - 1]) << eta;
    }
    for (double gamma : s.gamma_grid) EXPECT_NEAR(a.at(summary_key("f_eta0", gamma)), 1.0, 1e-10);
    EXPECT_EQ(a.table("minor_embedding_samples").rows.size(), 3u * 3u * 4u);

    s.seed = 43;
    ExperimentResult c = run_minor_embedding(s);
    EXPECT_NE(a.table("minor_embedding").rows, c.table("minor_embedding").rows);
}

TEST(MinorEmbedding, RepetitionSeedsAreDistinct) {
    std::vector<std::uint64_t> seeds;
    for (int r = 0; r < 100; ++r) seeds.push_back(repetition_seed(42, r));
    std::sort(seeds.begin(), seeds.end());
    EXPECT_EQ(std::adjacent_find(seeds.begin(), seeds.end()), seeds.end());
    EXPECT_NE(repetition_seed(42, 0), repetition_seed(43, 0));
}

TEST(ExperimentSpec, Validation) {
    ExperimentSpec s = ExperimentSpec::defaults(ExperimentKind::Ghz);
    EXPECT_NO_THROW(s.validate());
    s.gamma_grid = {1.0};
    EXPECT_THROW(s.validate(), CalibrationError);
    s.gamma_grid = {0.0};
    EXPECT_THROW(s.validate(), ConfigError);
    ExperimentSpec bf = ExperimentSpec::defaults(ExperimentKind::BitFlip);
    bf.gamma_grid = {0.0, 8.0};
    EXPECT_NO_THROW(bf.validate());
    ExperimentSpec t = ExperimentSpec::defaults(ExperimentKind::Ghz);
    t.time_grid = {0.0, 2.0, 1.0};
    EXPECT_THROW(t.validate(), ConfigError);
    t.time_grid = {};
    EXPECT_THROW(t.validate(), ConfigError);
    ExperimentSpec me = ExperimentSpec::defaults(ExperimentKind::MinorEmbedding);
    EXPECT_EQ(me.repetitions, 10);
    EXPECT_EQ(me.eta_grid.size(), 8u);
    EXPECT_NEAR(me.eta_grid.front(), 0.01, 1e-15);
    EXPECT_NEAR(me.eta_grid.back(), 1.0, 1e-15);
    me.repetitions = 0;
    EXPECT_THROW(me.validate(), ConfigError);
    EXPECT_THROW(run_ghz(ExperimentSpec::defaults(ExperimentKind::BitFlip)), ConfigError);
    EXPECT_THROW(parse_experiment_kind("rabi"), ConfigError);
}

TEST(Observables, PopulationsAndConditionalState) {
    QubitRegister reg = QubitRegister::chain(3);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(32);
    psi(0) = std::sqrt(0.25);
    psi((1 << 2) | 1) = std::sqrt(0.75);
    EXPECT_NEAR(data_population(psi, reg, 0), 0.25, 1e-15);
    EXPECT_NEAR(data_population(psi, reg, 1), 0.75, 1e-15);
    Eigen::VectorXcd cond = conditional_ancilla_state(psi, reg, 1);
    EXPECT_NEAR(std::abs(cond(1)), 1.0, 1e-15);
    EXPECT_NEAR(conditional_ancilla_state(psi, reg, 2).norm(), 0.0, 0.0);
}

}  // namespace
}  // namespace gadgetsim
