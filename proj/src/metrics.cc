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

#include "gadgetsim/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "gadgetsim/errors.h"

namespace gadgetsim {

namespace {

void require_time(double t) {
    if (!std::isfinite(t) || t < 0.0) {
        throw ContractError("metric time must be finite and non-negative");
    }
}

}  // namespace

MetricEvaluator::MetricEvaluator(const OperatorSum& h_physical, const EncodingBundle& bundle)
    : dim_logical_(std::size_t{1} << bundle.reg.n_data),
      physical_(realize(h_physical, bundle.reg)),
      overlaps_(physical_.eigenvectors().adjoint() * bundle.logical_columns()),
      h_eff_(effective_operator(h_physical, bundle)),
      ideal_(h_eff_) {}

DenseOperator MetricEvaluator::logical_block(double t) const {
    require_time(t);
    return overlaps_.adjoint() * physical_.phases(t).asDiagonal() * overlaps_;
}

double MetricEvaluator::survival_probability(double t) const {
    // Tr[P O^dagger P O] is the squared Frobenius norm of the logical block.
    double p = logical_block(t).squaredNorm() / static_cast<double>(dim_logical_);
    return std::clamp(p, 0.0, 1.0);
}

DenseOperator MetricEvaluator::ideal_propagator(double t) const {
    require_time(t);
    return ideal_.unitary(t);
}

double MetricEvaluator::conditional_fidelity(double t) const { return evaluate(t).f_cond; }

MetricPoint MetricEvaluator::evaluate(double t) const {
    DenseOperator block = logical_block(t);
    const double d = static_cast<double>(dim_logical_);
    MetricPoint pt;
    pt.t = t;
    pt.p_surv = std::clamp(block.squaredNorm() / d, 0.0, 1.0);
    pt.leakage = 1.0 - pt.p_surv;
    if (pt.p_surv <= kSurvivalCutoff) {
        throw UndefinedMetricError("conditional fidelity undefined: survival probability " +
                                   std::to_string(pt.p_surv) + " at t = " + std::to_string(t));
    }
    Complex overlap = (ideal_.unitary(t).adjoint() * block).trace();
    double raw = std::norm(overlap) / (d * d);
    pt.f_cond = std::clamp(raw / pt.p_surv, 0.0, 1.0);
    pt.f_abs = absolute_fidelity(pt);
    check_metric_point(pt);
    return pt;
}

MetricSeries MetricEvaluator::series(const std::vector<double>& times) const {
    MetricSeries s;
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (k > 0 && !(times[k] > times[k - 1])) {
            throw ContractError("metric series times must be strictly increasing");
        }
        s.points.push_back(evaluate(times[k]));
    }
    return s;
}

double survival_probability(const OperatorSum& h_physical, const EncodingBundle& bundle, double t) {
    return MetricEvaluator(h_physical, bundle).survival_probability(t);
}

DenseOperator ideal_propagator(const EncodingBundle& bundle, const OperatorSum& h_physical, double t) {
    require_time(t);
    return SpectralPropagator(effective_operator(h_physical, bundle)).unitary(t);
}

double conditional_fidelity(const OperatorSum& h_physical, const EncodingBundle& bundle, double t) {
    return MetricEvaluator(h_physical, bundle).conditional_fidelity(t);
}

double absolute_fidelity(const MetricPoint& point) { return point.p_surv * point.f_cond; }

void check_metric_point(const MetricPoint& point, double tol) {
    auto in_unit = [tol](double v) { return v >= -tol && v <= 1.0 + tol; };
    if (!in_unit(point.p_surv) || !in_unit(point.leakage) || !in_unit(point.f_cond) || !in_unit(point.f_abs)) {
        throw NumericalError("metric outside [0, 1] at t = " + std::to_string(point.t));
    }
    if (point.leakage != 1.0 - point.p_surv) {
        throw NumericalError("leakage != 1 - p_surv");
    }
    if (std::abs(point.f_abs - point.p_surv * point.f_cond) > 1e-12) {
        throw NumericalError("f_abs != p_surv * f_cond");
    }
}

}  // namespace gadgetsim
