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

#include "gadgetsim/gadget.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gadgetsim/errors.h"

namespace gadgetsim {

std::string to_string(DriverKind kind) {
    switch (kind) {
        case DriverKind::None:
            return "none";
        case DriverKind::SingleX:
            return "single-x";
        case DriverKind::FiveBody:
            return "five-body";
        case DriverKind::ThreeBody:
            return "three-body";
    }
    return "none";
}

DriverKind parse_driver(const std::string& name) {
    if (name == "none") return DriverKind::None;
    if (name == "single-x") return DriverKind::SingleX;
    if (name == "five-body") return DriverKind::FiveBody;
    if (name == "three-body") return DriverKind::ThreeBody;
    throw ConfigError("unknown driver '" + name + "' (expected none|single-x|five-body|three-body)");
}

void GadgetConfig::validate() const {
    if (n_data < 2) {
        throw ConfigError("n_d must be >= 2, got " + std::to_string(n_data));
    }
    reg().validate();
    if (!std::isfinite(gamma) || !std::isfinite(alpha) || !std::isfinite(single_x_beta)) {
        throw ConfigError("gadget parameters must be finite");
    }
    if (gamma < 0.0) {
        throw ConfigError("gamma must be non-negative");
    }
    if (alpha < 0.0) {
        throw ConfigError("alpha must be non-negative");
    }
}

void GadgetConfig::validate_calibrated() const {
    validate();
    if (!(gamma > alpha)) {
        throw CalibrationError("calibrated gadget needs gamma > alpha (gamma = " + std::to_string(gamma) +
                               ", alpha = " + std::to_string(alpha) + ")");
    }
}

NoiseDraw draw_noise(int n, double eta, std::uint64_t seed) {
    if (n < 0 || !std::isfinite(eta) || eta < 0.0) {
        throw ConfigError("noise draw needs n >= 0 and finite eta >= 0");
    }
    // Box-Muller on raw mt19937_64 output.
    std::mt19937_64 rng(seed);
    auto uniform = [&rng] { return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; };
    NoiseDraw draw{{}, eta, seed};
    draw.g.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(draw.g.size()) < n) {
        double r = std::sqrt(-2.0 * std::log(uniform()));
        double phi = 2.0 * std::numbers::pi * uniform();
        draw.g.push_back(eta * r * std::cos(phi));
        if (static_cast<int>(draw.g.size()) < n) {
            draw.g.push_back(eta * r * std::sin(phi));
        }
    }
    return draw;
}

namespace {

// A Z-type factor that may sit on a virtual ancilla.
struct ZSite {
    int qubit;      // global index, or -1 when virtual
    int value = 1;  // fixed eigenvalue when virtual
};

ZSite ancilla_site(const QubitRegister& reg, const VirtualBoundary& vb, int i) {
    if (i < 0) {
        return {-1, vb.left};
    }
    if (i >= reg.n_ancilla) {
        return {-1, vb.right};
    }
    return {reg.ancilla(i), 1};
}

ZSite data_site(const QubitRegister& reg, int i) { return {reg.data(i), 1}; }

// coefficient * prod(Z on real sites) * prod(values of virtual sites), optionally times X^a.
PauliString z_product(Complex coefficient, std::initializer_list<ZSite> sites) {
    PauliString s = PauliString::identity(coefficient);
    for (const auto& site : sites) {
        if (site.qubit < 0) {
            s.coefficient *= static_cast<double>(site.value);
        } else {
            s = s * PauliString::single(Pauli::Z, site.qubit);
        }
    }
    return s;
}

}  // namespace

OperatorSum build_chain(const GadgetConfig& config) {
    config.validate();
    const QubitRegister reg = config.reg();
    const VirtualBoundary vb = VirtualBoundary::of(config);
    OperatorSum h;
    for (int i = 0; i < config.n_data; ++i) {
        h.add(PauliString::identity(0.5));
        h.add(z_product(-0.5, {data_site(reg, i), ancilla_site(reg, vb, i - 1), ancilla_site(reg, vb, i)}));
    }
    return h.canonical();
}

OperatorSum build_single_x_driver(const GadgetConfig& config, double beta) {
    config.validate();
    const QubitRegister reg = config.reg();
    OperatorSum h;
    for (int i = 0; i < reg.n_ancilla; ++i) {
        h.add(PauliString::single(Pauli::X, reg.ancilla(i), -beta));
    }
    return h.canonical();
}

OperatorSum build_five_body_driver(const GadgetConfig& config) {
    config.validate();
    const QubitRegister reg = config.reg();
    const VirtualBoundary vb = VirtualBoundary::of(config);
    OperatorSum h;
    for (int i = 0; i + 1 < config.n_data; ++i) {
        PauliString x = PauliString::single(Pauli::X, reg.ancilla(i));
        h.add(PauliString::single(Pauli::X, reg.ancilla(i), -0.5));
        h.add(x * z_product(0.5, {data_site(reg, i), data_site(reg, i + 1), ancilla_site(reg, vb, i - 1),
                                  ancilla_site(reg, vb, i + 1)}));
    }
    return h.canonical();
}

OperatorSum build_three_body_driver(const GadgetConfig& config) {
    config.validate();
    const QubitRegister reg = config.reg();
    const VirtualBoundary vb = VirtualBoundary::of(config);
    OperatorSum h;
    for (int i = 0; i + 1 < config.n_data; ++i) {
        PauliString x = PauliString::single(Pauli::X, reg.ancilla(i));
        h.add(x * z_product(-0.5, {data_site(reg, i), data_site(reg, i + 1)}));
        h.add(x * z_product(0.5, {ancilla_site(reg, vb, i - 1), ancilla_site(reg, vb, i + 1)}));
    }
    return h.canonical();
}

double calibrate_beta(double gamma, double alpha, int n_data) {
    if (n_data < 2) {
        throw ConfigError("n_d must be >= 2");
    }
    if (!(gamma > alpha)) {
        throw CalibrationError("calibration needs gamma > alpha (gamma = " + std::to_string(gamma) +
                               ", alpha = " + std::to_string(alpha) + ")");
    }
    return (gamma - alpha) / (2.0 * std::cos(std::numbers::pi / (n_data + 1)));
}

OperatorSum build_driver(const GadgetConfig& config) {
    switch (config.driver) {
        case DriverKind::None:
            return {};
        case DriverKind::SingleX:
            return build_single_x_driver(config, config.single_x_beta);
        case DriverKind::FiveBody:
            return build_five_body_driver(config);
        case DriverKind::ThreeBody:
            return build_three_body_driver(config);
    }
    return {};
}

OperatorSum build_gadget(const GadgetConfig& config) {
    if (config.driver != DriverKind::FiveBody && config.driver != DriverKind::ThreeBody) {
        throw ConfigError("a calibrated gadget needs the five-body or three-body driver, got " +
                          to_string(config.driver));
    }
    config.validate_calibrated();
    double beta = calibrate_beta(config.gamma, config.alpha, config.n_data);
    OperatorSum h = config.gamma * build_chain(config);
    h += beta * build_driver(config);
    return h.canonical();
}

OperatorSum build_hamiltonian(const GadgetConfig& config) {
    if (config.driver == DriverKind::FiveBody || config.driver == DriverKind::ThreeBody) {
        return build_gadget(config);
    }
    OperatorSum h = config.gamma * build_chain(config);
    h += build_driver(config);
    return h.canonical();
}

OperatorSum build_logical_xx(const GadgetConfig& config, int i) {
    config.validate();
    if (i < 0 || i > config.n_data - 2) {
        throw ConfigError("logical XX index " + std::to_string(i) + " outside 0.." + std::to_string(config.n_data - 2));
    }
    const QubitRegister reg = config.reg();
    return OperatorSum{PauliString(1.0, {{reg.data(i), Pauli::X}, {reg.data(i + 1), Pauli::X}, {reg.ancilla(i), Pauli::X}})};
}

OperatorSum build_minor_embedding_system(const GadgetConfig& config, const NoiseDraw& noise) {
    if (static_cast<int>(noise.g.size()) != config.n_data) {
        throw ConfigError("noise draw has " + std::to_string(noise.g.size()) + " values for " +
                          std::to_string(config.n_data) + " data qubits");
    }
    OperatorSum h = build_gadget(config);
    const QubitRegister reg = config.reg();
    for (int i = 0; i < config.n_data; ++i) {
        h.add(PauliString::single(Pauli::Z, reg.data(i), noise.g[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i + 1 < config.n_data; ++i) {
        h += config.gamma * build_logical_xx(config, i);
    }
    return h.canonical();
}

OperatorSum single_qubit(Pauli p, int q, double strength) { return OperatorSum{PauliString::single(p, q, strength)}; }

}  // namespace gadgetsim
