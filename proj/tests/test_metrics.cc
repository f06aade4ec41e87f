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

#include <cmath>

#include "gadgetsim/encoding.h"
#include "gadgetsim/errors.h"
#include "gadgetsim/metrics.h"
#include "oracles.h"

namespace gadgetsim {
namespace {

GadgetConfig make(int nd, double gamma) {
    GadgetConfig c;
    c.n_data = nd;
    c.gamma = gamma;
    return c;
}

OperatorSum driven(const GadgetConfig& c, double strength) {
    OperatorSum h = build_gadget(c);
    QubitRegister reg = c.reg();
    for (int i = 0; i < c.n_data; ++i) h += single_qubit(Pauli::X, reg.data(i), strength);
    return h.canonical();
}

// Survival and conditional fidelity from first principles: evolve every dressed logical basis
// state with the matrix exponential and read off amplitudes on the dressed logical states.
std::pair<double, double> reference_metrics(const OperatorSum& h, const EncodingBundle& b, double t) {
    DenseOperator l = b.logical_columns();
    DenseOperator u = oracle::expm(realize(h, b.reg), t);
    DenseOperator block = l.adjoint() * u * l;
    const double d = static_cast<double>(l.cols());
    double p = 0.0;
    for (Eigen::Index j = 0; j < l.cols(); ++j) {
        Eigen::VectorXcd out = u * l.col(j);
        p += (b.dressed_projector * out).squaredNorm();
    }
    p /= d;
    DenseOperator ideal = oracle::expm(l.adjoint() * realize(h, b.reg) * l, t);
    double f = std::norm((ideal.adjoint() * block).trace()) / (d * d) / p;
    return {p, f};
}

TEST(Metrics, MatchFirstPrinciplesReference) {
    GadgetConfig c = make(3, 4.0);
    EncodingBundle b = build_encoding(c);
    OperatorSum h = driven(c, 1.0);
    MetricEvaluator eval(h, b);
    for (double t : {0.0, 0.4, 1.3, 3.0, 7.5}) {
        MetricPoint pt = eval.evaluate(t);
        auto [p, f] = reference_metrics(h, b, t);
        EXPECT_NEAR(pt.p_surv, p, 1e-10) << t;
        EXPECT_NEAR(pt.f_cond, f, 1e-10) << t;
        EXPECT_NEAR(survival_probability(h, b, t), p, 1e-10);
        EXPECT_NEAR(conditional_fidelity(h, b, t), f, 1e-10);
    }
}

TEST(Metrics, PureGadgetEvolutionIsPerfect) {
    GadgetConfig c = make(4, 8.0);
    EncodingBundle b = build_encoding(c);
    MetricEvaluator eval(build_gadget(c), b);
    for (double t : {0.0, 1.0, 2.5, 10.0}) {
        MetricPoint pt = eval.evaluate(t);
        EXPECT_NEAR(pt.p_surv, 1.0, 1e-10);
        EXPECT_NEAR(pt.f_cond, 1.0, 1e-10);
    }
    DenseOperator ideal = ideal_propagator(b, build_gadget(c), 0.7);
    DenseOperator expected = oracle::expm(0.5 * c.alpha * (DenseOperator::Identity(16, 16) - oracle::kron_string("ZZZZ")), 0.7);
    EXPECT_LT((ideal - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Metrics, BoundsAndProductIdentity) {
    GadgetConfig c = make(4, 3.0);
    EncodingBundle b = build_encoding(c);
    MetricEvaluator eval(driven(c, 1.5), b);
    std::vector<double> times;
    for (int k = 0; k <= 40; ++k) times.push_back(0.25 * k);
    MetricSeries s = eval.series(times);
    for (const MetricPoint& pt : s.points) {
        for (double v : {pt.p_surv, pt.leakage, pt.f_cond, pt.f_abs}) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0);
        }
        EXPECT_EQ(pt.leakage, 1.0 - pt.p_surv);
        EXPECT_NEAR(pt.f_abs, pt.p_surv * pt.f_cond, 1e-12);
        EXPECT_DOUBLE_EQ(absolute_fidelity(pt), pt.f_abs);
    }
    EXPECT_DOUBLE_EQ(s.points.front().leakage, 0.0);
    EXPECT_NEAR(s.points.front().f_cond, 1.0, 1e-12);
}

TEST(Metrics, Contracts) {
    GadgetConfig c = make(2, 4.0);
    EncodingBundle b = build_encoding(c);
    MetricEvaluator eval(driven(c, 1.0), b);
    EXPECT_THROW(eval.evaluate(-1.0), ContractError);
    EXPECT_THROW(eval.series({0.0, 1.0, 1.0}), ContractError);
    MetricPoint bad{0.0, 0.5, 0.4, 1.0, 0.5};
    EXPECT_THROW(check_metric_point(bad), NumericalError);
    MetricPoint out_of_range{0.0, 1.5, -0.5, 1.0, 1.5};
    EXPECT_THROW(check_metric_point(out_of_range), NumericalError);
}

TEST(Metrics, LeakageFallsWithConfinement) {
    double previous = 1.0;
    for (double gamma : {4.0, 8.0, 16.0, 32.0}) {
        GadgetConfig c = make(5, gamma);
        MetricEvaluator eval(driven(c, 1.0), build_encoding(c));
        double sum = 0.0;
        for (int k = 0; k <= 20; ++k) sum += eval.evaluate(5.0 + 0.25 * k).leakage;
        double mean = sum / 21.0;
        EXPECT_LT(mean, previous) << gamma;
        previous = mean;
    }
}

}  // namespace
}  // namespace gadgetsim
