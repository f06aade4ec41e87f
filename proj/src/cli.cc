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

#include "gadgetsim/cli.h"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gadgetsim/encoding.h"
#include "gadgetsim/errors.h"
#include "gadgetsim/experiments.h"
#include "gadgetsim/metrics.h"
#include "gadgetsim/output.h"
#include "gadgetsim/spec_io.h"

namespace gadgetsim {

namespace {

struct ConfigFlags {
    int nd = 5;
    bool kinked = false;
    double gamma = 8.0;
    double alpha = 1.0;
    std::string driver = "five-body";
    double beta = 1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--nd", nd, "Number of data qubits (>= 2)")->capture_default_str();
        cmd->add_flag("--kinked", kinked, "Use the kinked (right boundary -1) chain");
        cmd->add_option("--gamma", gamma, "Confinement strength")->capture_default_str();
        cmd->add_option("--alpha", alpha, "Logical parity-term strength")->capture_default_str();
        cmd->add_option("--driver", driver, "none|single-x|five-body|three-body")->capture_default_str();
        cmd->add_option("--beta", beta, "Strength of the single-x driver")->capture_default_str();
    }

    GadgetConfig config() const {
        GadgetConfig c;
        c.n_data = nd;
        c.kinked = kinked;
        c.gamma = gamma;
        c.alpha = alpha;
        c.driver = parse_driver(driver);
        c.single_x_beta = beta;
        c.validate();
        return c;
    }
};

double rounded(double v) { return std::stod(format_number(v)); }

void emit(const std::string& content, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << content;
    } else {
        write_file_atomic(path, content);
    }
}

std::string dump_terms(const GadgetConfig& config) {
    const QubitRegister reg = config.reg();
    OperatorSum h = build_hamiltonian(config);
    nlohmann::json terms = nlohmann::json::array();
    for (const PauliString& term : h.terms()) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& [q, p] : term.factors) {
            factors.push_back({{"qubit", q}, {"pauli", std::string(1, static_cast<char>(p))}});
        }
        nlohmann::json entry{{"label", term.label()}, {"coefficient", rounded(term.coefficient.real())}};
        if (term.coefficient.imag() != 0.0) entry["coefficient_imag"] = rounded(term.coefficient.imag());
        entry["factors"] = factors;
        terms.push_back(entry);
    }
    nlohmann::json doc{{"config", config_to_json(config)},
                       {"register", {{"n_data", reg.n_data}, {"n_ancilla", reg.n_ancilla}}},
                       {"terms", terms}};
    if (config.driver == DriverKind::FiveBody || config.driver == DriverKind::ThreeBody) {
        doc["beta"] = rounded(calibrate_beta(config.gamma, config.alpha, config.n_data));
    }
    return doc.dump(2) + "\n";
}

std::string spectrum_csv(const GadgetConfig& config) {
    const QubitRegister reg = config.reg();
    std::vector<Eigen::VectorXd> sectors = sector_energies(build_hamiltonian(config), reg);
    std::ostringstream os;
    os << "z,rank,energy\n";
    double sat = std::numeric_limits<double>::infinity();
    double unsat = std::numeric_limits<double>::infinity();
    for (std::size_t z = 0; z < sectors.size(); ++z) {
        for (Eigen::Index k = 0; k < sectors[z].size(); ++k) {
            os << format_bits(z, reg.n_data) << ',' << k << ',' << format_number(sectors[z](k)) << '\n';
        }
        double& ground = is_satisfiable(z, config) ? sat : unsat;
        ground = std::min(ground, sectors[z](0));
    }
    os << "# parity_splitting," << format_number(unsat - sat) << '\n';
    return os.str();
}

std::string encoding_csv(const GadgetConfig& config) {
    EncodingBundle bundle = build_encoding(config);
    std::ostringstream os;
    os << "z,ancillae,amplitude,energy\n";
    for (const SectorBlock& sector : bundle.sectors) {
        for (Eigen::Index a = 0; a < sector.states.rows(); ++a) {
            double amp = sector.states(a, 0);
            if (std::abs(amp) > 1e-12) {
                os << format_bits(sector.z, bundle.reg.n_data) << ',' << format_bits(a, bundle.reg.n_ancilla) << ','
                   << format_number(amp) << ',' << format_number(sector.energies(0)) << '\n';
            }
        }
    }
    os << "# beta," << format_number(bundle.beta) << '\n';
    return os.str();
}

std::string metrics_csv(const GadgetConfig& config, const std::vector<double>& times, double drive) {
    EncodingBundle bundle = build_encoding(config);
    OperatorSum h = build_gadget(config);
    for (int i = 0; i < config.n_data; ++i) {
        h += single_qubit(Pauli::X, bundle.reg.data(i), drive);
    }
    MetricEvaluator eval(h.canonical(), bundle);
    std::ostringstream os;
    os << "t,p_surv,leakage,f_cond,f_abs\n";
    for (const MetricPoint& pt : eval.series(times).points) {
        os << format_number(pt.t) << ',' << format_number(pt.p_surv) << ',' << format_number(pt.leakage) << ','
           << format_number(pt.f_cond) << ',' << format_number(pt.f_abs) << '\n';
    }
    return os.str();
}

void report(const ExperimentResult& result, const std::vector<WrittenFile>& files, const std::string& dir,
            std::ostream& out) {
    for (const auto& f : files) {
        out << (std::filesystem::path(dir) / f.name).string() << "  sha256=" << f.sha256 << "  rows=" << f.rows << '\n';
    }
    for (const auto& [key, value] : result.summary) {
        out << key << " = " << format_number(value) << '\n';
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"gadgetsim: exact simulation of domain-wall chain gadgets", "gadgetsim"};
    app.require_subcommand(1);
    app.set_version_flag("--version", library_version());

    ConfigFlags flags;
    std::string out_path;

    auto* build = app.add_subcommand("build", "Dump the gadget Hamiltonian as a JSON Pauli-term list");
    flags.attach(build);
    build->add_option("--out", out_path, "Output file (default stdout)");

    auto* spectrum = app.add_subcommand("spectrum", "Per-sector energies as CSV");
    flags.attach(spectrum);
    spectrum->add_option("--out", out_path, "Output file (default stdout)");

    auto* encode = app.add_subcommand("encode", "Dressed ground-state ancilla amplitudes of every data sector");
    flags.attach(encode);
    encode->add_option("--out", out_path, "Output file (default stdout)");

    std::vector<double> times = {0.0, 1.0, 2.0, 4.0, 8.0};
    double drive = 1.0;
    auto* metrics = app.add_subcommand("metrics", "Leakage and fidelities under unit X driving of every data qubit");
    flags.attach(metrics);
    metrics->add_option("--t", times, "Evaluation times (strictly increasing)")->capture_default_str();
    metrics->add_option("--drive", drive, "Strength of the X term on each data qubit")->capture_default_str();
    metrics->add_option("--out", out_path, "Output file (default stdout)");

    std::string spec_path;
    std::uint64_t seed = 0;
    auto* experiment = app.add_subcommand("experiment", "Run an experiment spec and write CSV + manifest");
    experiment->add_option("--spec", spec_path, "Experiment spec (JSON)")->required();
    experiment->add_option("--out", out_path, "Output directory")->required();
    auto* seed_opt = experiment->add_option("--seed", seed, "Override the spec seed");

    std::vector<double> gammas;
    std::vector<double> etas;
    int reps = 0;
    auto* sweep = app.add_subcommand("sweep", "Run an experiment spec over overridden sweep axes");
    sweep->add_option("--spec", spec_path, "Experiment spec (JSON)")->required();
    sweep->add_option("--out", out_path, "Output directory")->required();
    auto* sweep_seed = sweep->add_option("--seed", seed, "Override the spec seed");
    sweep->add_option("--gammas", gammas, "Gamma grid")->delimiter(',');
    sweep->add_option("--etas", etas, "Eta grid")->delimiter(',');
    sweep->add_option("--reps", reps, "Repetitions per grid point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*build) {
            emit(dump_terms(flags.config()), out_path, out);
        } else if (*spectrum) {
            emit(spectrum_csv(flags.config()), out_path, out);
        } else if (*encode) {
            emit(encoding_csv(flags.config()), out_path, out);
        } else if (*metrics) {
            emit(metrics_csv(flags.config(), times, drive), out_path, out);
        } else if (*experiment || *sweep) {
            ExperimentSpec spec = load_spec(spec_path);
            if ((*experiment && *seed_opt) || (*sweep && *sweep_seed)) spec.seed = seed;
            if (*sweep) {
                if (!gammas.empty()) spec.gamma_grid = gammas;
                if (!etas.empty()) spec.eta_grid = etas;
                if (reps > 0) spec.repetitions = reps;
                spec.validate();
            }
            ExperimentResult result = run_experiment(spec);
            report(result, write_result(result, out_path), out_path, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return dynamic_cast<const ConfigError*>(&e) ? 2 : 1;
    }
    return 0;
}

}  // namespace gadgetsim
