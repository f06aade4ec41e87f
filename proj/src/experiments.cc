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

#include "gadgetsim/experiments.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gadgetsim/errors.h"
#include "gadgetsim/metrics.h"

#ifndef GADGETSIM_VERSION
#define GADGETSIM_VERSION "0.0.0"
#endif

namespace gadgetsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kFlippedQubit = 2;

std::vector<double> linspace(double start, double stop, int points) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        out.push_back(points == 1 ? start : start + (stop - start) * k / (points - 1));
    }
    return out;
}

std::vector<double> logspace(double start, double stop, int points) {
    std::vector<double> out;
    for (double e : linspace(std::log10(start), std::log10(stop), points)) {
        out.push_back(std::pow(10.0, e));
    }
    return out;
}

std::string x_column(int i) { return "x" + std::to_string(i); }

// Fixed-width bit label of an ancilla configuration, used for column names.
std::string ancilla_column(BitMask a, int width) { return "amp_" + format_bits(a, width); }

const std::vector<std::string> kTrackedAncillae = {"0000", "0010", "0011", "0100", "1100"};

double trapezoid_mean(const std::vector<double>& t, const std::vector<double>& y) {
    double area = 0.0;
    for (std::size_t k = 1; k < t.size(); ++k) {
        area += 0.5 * (y[k] + y[k - 1]) * (t[k] - t[k - 1]);
    }
    return area / (t.back() - t.front());
}

GadgetConfig with_gamma(const GadgetConfig& config, double gamma) {
    GadgetConfig c = config;
    c.gamma = gamma;
    return c;
}

ExperimentResult start(const ExperimentSpec& spec, ExperimentKind expected) {
    if (spec.kind != expected) {
        throw ConfigError("spec kind " + to_string(spec.kind) + " passed to the " + to_string(expected) + " runner");
    }
    spec.validate();
    ExperimentResult r;
    r.spec = spec;
    r.version = library_version();
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::string library_version() { return GADGETSIM_VERSION; }

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Ghz:
            return "ghz";
        case ExperimentKind::PerturbedX:
            return "perturbed-x";
        case ExperimentKind::BitFlip:
            return "bit-flip";
        case ExperimentKind::InfidelitySweep:
            return "infidelity-sweep";
        case ExperimentKind::MinorEmbedding:
            return "minor-embedding";
    }
    return "ghz";
}

ExperimentKind parse_experiment_kind(const std::string& name) {
    for (auto k : {ExperimentKind::Ghz, ExperimentKind::PerturbedX, ExperimentKind::BitFlip,
                   ExperimentKind::InfidelitySweep, ExperimentKind::MinorEmbedding}) {
        if (to_string(k) == name) return k;
    }
    throw ConfigError("unknown experiment kind '" + name +
                      "' (expected ghz|perturbed-x|bit-flip|infidelity-sweep|minor-embedding)");
}

ExperimentSpec ExperimentSpec::defaults(ExperimentKind kind) {
    ExperimentSpec s;
    s.kind = kind;
    s.config = GadgetConfig{};
    s.time_grid = linspace(0.0, 4.0 * kPi, 200);
    s.seed = 42;
    switch (kind) {
        case ExperimentKind::Ghz:
            s.gamma_grid = {2, 4, 8, 16, 32};
            break;
        case ExperimentKind::PerturbedX:
            s.gamma_grid = {2, 16};
            break;
        case ExperimentKind::BitFlip:
            s.config.alpha = 0.0;
            s.gamma_grid = {0, 8, 32};
            break;
        case ExperimentKind::InfidelitySweep:
            s.gamma_grid = {2, 4, 8, 16, 32};
            break;
        case ExperimentKind::MinorEmbedding:
            s.gamma_grid = {2, 4, 8, 16, 32, 64};
            s.eta_grid = logspace(0.01, 1.0, 8);
            s.time_grid = {kPi};
            break;
    }
    return s;
}

std::vector<double> ExperimentSpec::gammas() const {
    return gamma_grid.empty() ? std::vector<double>{config.gamma} : gamma_grid;
}

void ExperimentSpec::validate() const {
    config.validate();
    if (time_grid.empty()) {
        throw ConfigError("time_grid must not be empty");
    }
    for (std::size_t k = 0; k < time_grid.size(); ++k) {
        if (!std::isfinite(time_grid[k]) || time_grid[k] < 0.0) {
            throw ConfigError("time_grid entries must be finite and non-negative");
        }
        if (k > 0 && !(time_grid[k] > time_grid[k - 1])) {
            throw ConfigError("time_grid must be strictly increasing");
        }
    }
    const bool allows_unconfined = kind == ExperimentKind::BitFlip;
    for (double g : gammas()) {
        GadgetConfig c = with_gamma(config, g);
        if (allows_unconfined && g == 0.0) {
            c.validate();
        } else {
            c.validate_calibrated();
        }
    }
    if (kind == ExperimentKind::BitFlip && config.n_data <= kFlippedQubit) {
        throw ConfigError("bit-flip experiment needs n_d >= 3");
    }
    if (kind == ExperimentKind::MinorEmbedding) {
        if (eta_grid.empty()) {
            throw ConfigError("eta_grid must not be empty for minor-embedding");
        }
        for (double eta : eta_grid) {
            if (!std::isfinite(eta) || eta < 0.0) {
                throw ConfigError("eta_grid entries must be finite and non-negative");
            }
        }
        if (repetitions < 1) {
            throw ConfigError("repetitions must be >= 1");
        }
    }
    if (config.driver != DriverKind::FiveBody && config.driver != DriverKind::ThreeBody) {
        throw ConfigError("experiments need the five-body or three-body driver");
    }
}

std::size_t Table::column(const std::string& label) const {
    auto it = std::find(columns.begin(), columns.end(), label);
    if (it == columns.end()) {
        throw ContractError("table " + name + " has no column " + label);
    }
    return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> Table::values(const std::string& label) const {
    std::size_t c = column(label);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row[c]);
    return out;
}

Table Table::where(const std::string& label, double value) const {
    std::size_t c = column(label);
    Table t{name, columns, {}};
    for (const auto& row : rows) {
        if (row[c] == value) t.rows.push_back(row);
    }
    return t;
}

const Table& ExperimentResult::table(const std::string& name) const {
    for (const auto& t : tables) {
        if (t.name == name) return t;
    }
    throw ContractError("result has no table " + name);
}

double ExperimentResult::at(const std::string& key) const {
    auto it = summary.find(key);
    if (it == summary.end()) {
        throw ContractError("result has no summary value " + key);
    }
    return it->second;
}

std::string summary_key(const std::string& name, double gamma) {
    std::ostringstream os;
    os.precision(12);
    os << name << "@gamma=" << gamma;
    return os.str();
}

Eigen::VectorXcd uniform_x_state(int n_data, int sign) {
    const Eigen::Index dim = Eigen::Index{1} << n_data;
    Eigen::VectorXcd v(dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Eigen::Index z = 0; z < dim; ++z) {
        bool odd = sign < 0 && (std::popcount(static_cast<std::uint64_t>(z)) & 1);
        v(z) = odd ? -norm : norm;
    }
    return v;
}

Eigen::VectorXcd ghz_target(int n_data) {
    return (uniform_x_state(n_data, +1) + Complex(0.0, 1.0) * uniform_x_state(n_data, -1)) / std::sqrt(2.0);
}

std::vector<double> dressed_x_expectations(const Eigen::VectorXcd& physical, const EncodingBundle& bundle) {
    const Eigen::VectorXcd c = bundle.u_enc.adjoint() * physical;
    const int n = bundle.reg.n_data;
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        const Eigen::Index flip = Eigen::Index{1} << (bundle.reg.n_ancilla + n - 1 - i);
        Complex acc = 0.0;
        for (Eigen::Index k = 0; k < c.size(); ++k) {
            acc += std::conj(c(k)) * c(k ^ flip);
        }
        out.push_back(acc.real());
    }
    return out;
}

double ideal_ghz_fidelity(double alpha, double t) { return 0.5 * (1.0 + std::sin(alpha * t)); }

double two_level_x(double s00, double alpha, double t) {
    const double half = 0.5 * alpha;
    const double omega = std::hypot(s00, half);
    if (omega == 0.0) return 1.0;
    const double nz2 = (s00 / omega) * (s00 / omega);
    return nz2 + (1.0 - nz2) * std::cos(2.0 * omega * t);
}

double data_population(const Eigen::VectorXcd& physical, const QubitRegister& reg, BitMask z) {
    const Eigen::Index block = Eigen::Index{1} << reg.n_ancilla;
    return physical.segment(static_cast<Eigen::Index>(z) * block, block).squaredNorm();
}

Eigen::VectorXcd conditional_ancilla_state(const Eigen::VectorXcd& physical, const QubitRegister& reg, BitMask z) {
    const Eigen::Index block = Eigen::Index{1} << reg.n_ancilla;
    Eigen::VectorXcd a = physical.segment(static_cast<Eigen::Index>(z) * block, block);
    const double p = a.squaredNorm();
    if (p <= kSurvivalCutoff) {
        return Eigen::VectorXcd::Zero(block);
    }
    return a / std::sqrt(p);
}

OperatorSum bit_flip_hamiltonian(const GadgetConfig& config, bool corrected_drive) {
    const QubitRegister reg = config.reg();
    if (config.gamma == 0.0) {
        config.validate();
        return single_qubit(Pauli::X, reg.data(kFlippedQubit));
    }
    double strength = 1.0;
    if (corrected_drive) {
        strength = 1.0 / sine_transform(config.n_data).s(0, kFlippedQubit);
    }
    OperatorSum h = build_gadget(config);
    h += single_qubit(Pauli::X, reg.data(kFlippedQubit), strength);
    return h.canonical();
}

FlipTiming measure_flip(const GadgetConfig& config, bool corrected_drive) {
    const QubitRegister reg = config.reg();
    const BitMask z0 = 0;
    const BitMask z2 = BitMask{1} << (config.n_data - 1 - kFlippedQubit);
    const BitMask a0 = cumulative_parity_ancillae(z0, config);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.dim()));
    psi0((static_cast<Eigen::Index>(z0) << reg.n_ancilla) | static_cast<Eigen::Index>(a0)) = 1.0;

    SpectralPropagator prop(realize(bit_flip_hamiltonian(config, corrected_drive), reg));
    auto excess = [&](double t) { return data_population(prop.evolve(psi0, t), reg, z2) - 0.5; };

    auto bisect = [&](double lo, double hi) {
        double flo = excess(lo);
        for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
            double mid = 0.5 * (lo + hi);
            double fm = excess(mid);
            if ((fm > 0.0) == (flo > 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    constexpr double kStep = 0.01;
    constexpr double kHorizon = 40.0 * kPi;
    FlipTiming timing;
    bool rose = false;
    double prev_t = 0.0;
    double prev = excess(0.0);
    for (double t = kStep; t <= kHorizon; t += kStep) {
        double cur = excess(t);
        if (!rose && prev <= 0.0 && cur > 0.0) {
            timing.rise = bisect(prev_t, t);
            rose = true;
        } else if (rose && prev > 0.0 && cur <= 0.0) {
            timing.fall = bisect(prev_t, t);
            return timing;
        }
        prev_t = t;
        prev = cur;
    }
    throw NumericalError("flipped population never completed a half-period crossing");
}

std::uint64_t repetition_seed(std::uint64_t base_seed, int repetition) {
    return splitmix64(splitmix64(base_seed) ^ static_cast<std::uint64_t>(repetition));
}

double minor_embedding_fidelity(const GadgetConfig& config, const EncodingBundle& bundle, const NoiseDraw& noise) {
    const int n = config.n_data;
    Eigen::VectorXcd psi0 = bundle.dress(uniform_x_state(n, +1));
    Eigen::VectorXcd target = bundle.dress(uniform_x_state(n, -1));
    SpectralPropagator prop(realize(build_minor_embedding_system(config, noise), bundle.reg));
    Eigen::VectorXcd out = prop.evolve(psi0, kPi, TimeSign::Forward);
    return std::clamp(std::norm(target.dot(out)), 0.0, 1.0);
}

ExperimentResult run_ghz(const ExperimentSpec& spec) {
    ExperimentResult r = start(spec, ExperimentKind::Ghz);
    const int n = spec.config.n_data;
    Table table{"ghz", {"gamma", "t", "f_ghz", "f_ghz_ideal"}, {}};
    for (int i = 0; i < n; ++i) table.columns.push_back(x_column(i));

    for (double gamma : spec.gammas()) {
        GadgetConfig cfg = with_gamma(spec.config, gamma);
        EncodingBundle bundle = build_encoding(cfg);
        OperatorSum h = build_gadget(cfg);
        SpectralPropagator physical(realize(h, bundle.reg));
        SpectralPropagator ideal(effective_operator(h, bundle));
        const Eigen::VectorXcd logical0 = uniform_x_state(n, +1);
        const Eigen::VectorXcd psi0 = bundle.dress(logical0);
        const Eigen::VectorXcd target_logical = ghz_target(n);
        const Eigen::VectorXcd target = bundle.dress(target_logical);

        auto f_physical = [&](double t) { return std::norm(target.dot(physical.evolve(psi0, t))); };
        auto f_ideal = [&](double t) { return std::norm(target_logical.dot(ideal.evolve(logical0, t))); };

        for (double t : spec.time_grid) {
            Eigen::VectorXcd psi = physical.evolve(psi0, t);
            std::vector<double> row = {gamma, t, std::norm(target.dot(psi)), f_ideal(t)};
            for (double x : dressed_x_expectations(psi, bundle)) row.push_back(x);
            table.rows.push_back(std::move(row));
        }
        r.summary[summary_key("f_ghz_half_pi", gamma)] = f_physical(0.5 * kPi);
        r.summary[summary_key("f_ghz_ideal_half_pi", gamma)] = f_ideal(0.5 * kPi);
        std::vector<double> x_pi = dressed_x_expectations(physical.evolve(psi0, kPi), bundle);
        r.summary[summary_key("x_pi_max", gamma)] = *std::max_element(x_pi.begin(), x_pi.end());
        r.summary[summary_key("x_pi_min", gamma)] = *std::min_element(x_pi.begin(), x_pi.end());
    }
    r.tables.push_back(std::move(table));
    return r;
}

ExperimentResult run_perturbed_x(const ExperimentSpec& spec) {
    ExperimentResult r = start(spec, ExperimentKind::PerturbedX);
    const int n = spec.config.n_data;
    const double s00 = sine_transform(n).s(0, 0);
    Table table{"perturbed_x", {"gamma", "t"}, {}};
    for (int i = 0; i < n; ++i) table.columns.push_back(x_column(i));
    table.columns.insert(table.columns.end(), {"heterogeneity", "two_level_x"});

    for (double gamma : spec.gammas()) {
        GadgetConfig cfg = with_gamma(spec.config, gamma);
        EncodingBundle bundle = build_encoding(cfg);
        OperatorSum h = build_gadget(cfg);
        h += single_qubit(Pauli::X, bundle.reg.data(0));
        SpectralPropagator physical(realize(h.canonical(), bundle.reg));
        const Eigen::VectorXcd psi0 = bundle.dress(uniform_x_state(n, +1));

        double het_sum = 0.0;
        double deviation = 0.0;
        for (double t : spec.time_grid) {
            std::vector<double> x = dressed_x_expectations(physical.evolve(psi0, t), bundle);
            auto [lo, hi] = std::minmax_element(x.begin(), x.end());
            const double het = *hi - *lo;
            const double model = two_level_x(s00, cfg.alpha, t);
            std::vector<double> row = {gamma, t};
            row.insert(row.end(), x.begin(), x.end());
            row.push_back(het);
            row.push_back(model);
            table.rows.push_back(std::move(row));
            het_sum += het;
            deviation = std::max(deviation, std::abs(x[0] - model));
        }
        r.summary[summary_key("mean_heterogeneity", gamma)] = het_sum / static_cast<double>(spec.time_grid.size());
        r.summary[summary_key("max_two_level_deviation", gamma)] = deviation;
    }
    r.tables.push_back(std::move(table));
    return r;
}

ExperimentResult run_bit_flip(const ExperimentSpec& spec) {
    ExperimentResult r = start(spec, ExperimentKind::BitFlip);
    const int n = spec.config.n_data;
    const QubitRegister reg = spec.config.reg();
    const BitMask z0 = 0;
    const BitMask z2 = BitMask{1} << (n - 1 - kFlippedQubit);
    const std::string z0_label = format_bits(z0, n);
    const std::string z2_label = format_bits(z2, n);

    std::vector<BitMask> ancillae;
    Table table{"bit_flip", {"gamma", "t", "p_" + z0_label, "p_" + z2_label}, {}};
    if (reg.n_ancilla == static_cast<int>(kTrackedAncillae.front().size())) {
        for (const auto& label : kTrackedAncillae) {
            ancillae.push_back(parse_bits(label));
            table.columns.push_back(ancilla_column(ancillae.back(), reg.n_ancilla));
        }
    }

    const double unconfined_period = measure_flip(with_gamma(spec.config, 0.0), false).period();
    r.summary["period_unconfined"] = unconfined_period;

    for (double gamma : spec.gammas()) {
        GadgetConfig cfg = with_gamma(spec.config, gamma);
        SpectralPropagator prop(realize(bit_flip_hamiltonian(cfg, spec.corrected_drive), reg));
        Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.dim()));
        psi0((static_cast<Eigen::Index>(z0) << reg.n_ancilla) |
             static_cast<Eigen::Index>(cumulative_parity_ancillae(z0, cfg))) = 1.0;

        auto sample = [&](double t) {
            Eigen::VectorXcd psi = prop.evolve(psi0, t);
            std::vector<double> row = {gamma, t, data_population(psi, reg, z0), data_population(psi, reg, z2)};
            Eigen::VectorXcd cond = conditional_ancilla_state(psi, reg, z2);
            for (BitMask a : ancillae) row.push_back(std::abs(cond(static_cast<Eigen::Index>(a))));
            return row;
        };

        for (double t : spec.time_grid) table.rows.push_back(sample(t));

        FlipTiming timing = measure_flip(cfg, spec.corrected_drive);
        std::vector<double> at_extremum = sample(timing.extremum());
        r.summary[summary_key("rise", gamma)] = timing.rise;
        r.summary[summary_key("fall", gamma)] = timing.fall;
        r.summary[summary_key("period", gamma)] = timing.period();
        r.summary[summary_key("period_ratio", gamma)] = timing.period() / unconfined_period;
        r.summary[summary_key("t_extremum", gamma)] = timing.extremum();
        r.summary[summary_key("p_flipped_extremum", gamma)] = at_extremum[3];
        for (std::size_t k = 0; k < ancillae.size(); ++k) {
            r.summary[summary_key(ancilla_column(ancillae[k], reg.n_ancilla) + "_extremum", gamma)] = at_extremum[4 + k];
        }
    }
    r.tables.push_back(std::move(table));
    return r;
}

ExperimentResult run_infidelity_sweep(const ExperimentSpec& spec) {
    ExperimentResult r = start(spec, ExperimentKind::InfidelitySweep);
    Table table{"infidelity", {"gamma", "t", "p_surv", "leakage", "f_cond", "infidelity", "f_abs"}, {}};
    const std::vector<double> window = linspace(5.0, 10.0, 101);

    for (double gamma : spec.gammas()) {
        GadgetConfig cfg = with_gamma(spec.config, gamma);
        EncodingBundle bundle = build_encoding(cfg);
        OperatorSum h = build_gadget(cfg);
        for (int i = 0; i < cfg.n_data; ++i) {
            h += single_qubit(Pauli::X, bundle.reg.data(i));
        }
        MetricEvaluator eval(h.canonical(), bundle);
        for (const MetricPoint& pt : eval.series(spec.time_grid).points) {
            table.rows.push_back({gamma, pt.t, pt.p_surv, pt.leakage, pt.f_cond, 1.0 - pt.f_cond, pt.f_abs});
        }
        std::vector<double> leak;
        for (double t : window) leak.push_back(eval.evaluate(t).leakage);
        r.summary[summary_key("mean_leakage_5_10", gamma)] = trapezoid_mean(window, leak);
    }
    r.tables.push_back(std::move(table));
    return r;
}

ExperimentResult run_minor_embedding(const ExperimentSpec& spec) {
    ExperimentResult r = start(spec, ExperimentKind::MinorEmbedding);
    const int n = spec.config.n_data;
    Table grid{"minor_embedding", {"gamma", "eta", "mean_f", "stderr_f", "mean_infidelity"}, {}};
    Table samples{"minor_embedding_samples", {"gamma", "eta", "rep", "f"}, {}};
    const auto reps = static_cast<std::size_t>(spec.repetitions);

    for (double gamma : spec.gammas()) {
        GadgetConfig cfg = with_gamma(spec.config, gamma);
        EncodingBundle bundle = build_encoding(cfg);
        r.summary[summary_key("f_eta0", gamma)] =
            minor_embedding_fidelity(cfg, bundle, NoiseDraw{std::vector<double>(static_cast<std::size_t>(n), 0.0), 0.0, 0});

        for (double eta : spec.eta_grid) {
            std::vector<double> f(reps);
            for (std::size_t rep = 0; rep < reps; ++rep) {
                NoiseDraw noise = draw_noise(n, eta, repetition_seed(spec.seed, static_cast<int>(rep)));
                f[rep] = minor_embedding_fidelity(cfg, bundle, noise);
                samples.rows.push_back({gamma, eta, static_cast<double>(rep), f[rep]});
            }
            double mean = 0.0;
            for (double v : f) mean += v;
            mean /= static_cast<double>(reps);
            double var = 0.0;
            for (double v : f) var += (v - mean) * (v - mean);
            double stderr_f = reps > 1 ? std::sqrt(var / static_cast<double>(reps - 1) / static_cast<double>(reps)) : 0.0;
            grid.rows.push_back({gamma, eta, mean, stderr_f, 1.0 - mean});
        }
    }
    r.tables.push_back(std::move(grid));
    r.tables.push_back(std::move(samples));
    return r;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentResult r;
    switch (spec.kind) {
        case ExperimentKind::Ghz:
            r = run_ghz(spec);
            break;
        case ExperimentKind::PerturbedX:
            r = run_perturbed_x(spec);
            break;
        case ExperimentKind::BitFlip:
            r = run_bit_flip(spec);
            break;
        case ExperimentKind::InfidelitySweep:
            r = run_infidelity_sweep(spec);
            break;
        case ExperimentKind::MinorEmbedding:
            r = run_minor_embedding(spec);
            break;
    }
    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace gadgetsim
