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

// Process metrics evaluated in the encoded frame: the physical propagator is
// conjugated by U_enc before the ancilla-vacuum projector is applied, so P
// selects the dressed logical subspace.

#include <vector>

#include "gadgetsim/encoding.h"
#include "gadgetsim/pauli.h"

namespace gadgetsim {

struct MetricPoint {
    double t = 0.0;
    double p_surv = 1.0;
    double leakage = 0.0;
    double f_cond = 1.0;
    double f_abs = 1.0;
};

struct MetricSeries {
    double gamma = 0.0;
    std::vector<MetricPoint> points;
};

/// Survival probability below which conditional fidelity is undefined.
inline constexpr double kSurvivalCutoff = 1e-12;

/// Precomputes the spectral data needed to evaluate every metric at any time.
class MetricEvaluator {
   public:
    MetricEvaluator(const OperatorSum& h_physical, const EncodingBundle& bundle);

    /// P U^dagger e^{-itH} U P restricted to the logical block (2^n_d square).
    DenseOperator logical_block(double t) const;
    double survival_probability(double t) const;
    DenseOperator ideal_propagator(double t) const;
    double conditional_fidelity(double t) const;
    MetricPoint evaluate(double t) const;
    MetricSeries series(const std::vector<double>& times) const;

    const DenseOperator& effective_hamiltonian() const { return h_eff_; }

   private:
    std::size_t dim_logical_;
    SpectralPropagator physical_;
    DenseOperator overlaps_;  // eigenvectors^dagger * logical columns
    DenseOperator h_eff_;
    SpectralPropagator ideal_;
};

double survival_probability(const OperatorSum& h_physical, const EncodingBundle& bundle, double t);
DenseOperator ideal_propagator(const EncodingBundle& bundle, const OperatorSum& h_physical, double t);
double conditional_fidelity(const OperatorSum& h_physical, const EncodingBundle& bundle, double t);
/// p_surv * f_cond.
double absolute_fidelity(const MetricPoint& point);

/// Throws NumericalError when a point breaks [0, 1] bounds or its internal identities.
void check_metric_point(const MetricPoint& point, double tol = 1e-10);

}  // namespace gadgetsim
