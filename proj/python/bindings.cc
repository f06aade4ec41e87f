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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "gadgetsim/encoding.h"
#include "gadgetsim/errors.h"
#include "gadgetsim/experiments.h"
#include "gadgetsim/gadget.h"
#include "gadgetsim/metrics.h"
#include "gadgetsim/output.h"
#include "gadgetsim/spec_io.h"

namespace py = pybind11;
using namespace gadgetsim;

namespace {

py::list term_list(const OperatorSum& op) {
    py::list out;
    for (const PauliString& t : op.terms()) {
        out.append(py::make_tuple(t.label(), t.coefficient));
    }
    return out;
}

py::dict result_dict(const ExperimentResult& r) {
    py::dict tables;
    for (const Table& t : r.tables) {
        py::dict columns;
        for (const std::string& c : t.columns) columns[py::str(c)] = t.values(c);
        tables[py::str(t.name)] = columns;
    }
    py::dict out;
    out["kind"] = to_string(r.spec.kind);
    out["seed"] = r.spec.seed;
    out["version"] = r.version;
    out["tables"] = tables;
    out["summary"] = r.summary;
    return out;
}

GadgetConfig make_config(int n_data, bool kinked, double gamma, double alpha, const std::string& driver) {
    GadgetConfig c;
    c.n_data = n_data;
    c.kinked = kinked;
    c.gamma = gamma;
    c.alpha = alpha;
    c.driver = parse_driver(driver);
    c.validate();
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact simulation of domain-wall chain gadgets";

    // Translators registered later are tried first, so subclasses come after their base.
    auto config_error = py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<CalibrationError>(m, "CalibrationError", config_error.ptr());
    py::register_exception<SpecError>(m, "SpecError", config_error.ptr());
    py::register_exception<ContractError>(m, "ContractError", PyExc_RuntimeError);

    py::class_<GadgetConfig>(m, "GadgetConfig")
        .def(py::init(&make_config), py::arg("n_data") = 5, py::arg("kinked") = false, py::arg("gamma") = 8.0,
             py::arg("alpha") = 1.0, py::arg("driver") = "five-body")
        .def_readwrite("n_data", &GadgetConfig::n_data)
        .def_readwrite("kinked", &GadgetConfig::kinked)
        .def_readwrite("gamma", &GadgetConfig::gamma)
        .def_readwrite("alpha", &GadgetConfig::alpha)
        .def_property(
            "driver", [](const GadgetConfig& c) { return to_string(c.driver); },
            [](GadgetConfig& c, const std::string& d) { c.driver = parse_driver(d); })
        .def_property_readonly("n_ancilla", [](const GadgetConfig& c) { return c.reg().n_ancilla; })
        .def("validate", &GadgetConfig::validate)
        .def("__repr__", [](const GadgetConfig& c) {
            return "GadgetConfig(n_data=" + std::to_string(c.n_data) + ", kinked=" + (c.kinked ? "True" : "False") +
                   ", gamma=" + format_number(c.gamma) + ", alpha=" + format_number(c.alpha) + ", driver='" +
                   to_string(c.driver) + "')";
        });

    m.def("calibrate_beta", &calibrate_beta, py::arg("gamma"), py::arg("alpha"), py::arg("n_data"));
    m.def("gadget_terms", [](const GadgetConfig& c) { return term_list(build_hamiltonian(c)); },
          "Canonical Pauli terms of the gadget Hamiltonian as (label, coefficient) pairs.");
    m.def("gadget_matrix", [](const GadgetConfig& c) { return realize(build_hamiltonian(c), c.reg()); });
    m.def("sector_energies", [](const GadgetConfig& c) { return sector_energies(build_hamiltonian(c), c.reg()); });
    m.def("is_satisfiable", [](const std::string& z, const GadgetConfig& c) { return is_satisfiable(parse_bits(z), c); });
    m.def("sine_transform", [](int n) {
        SineTransform st = sine_transform(n);
        return py::make_tuple(st.s, st.eigenvalues);
    });
    m.def("logical_overlap", [](const std::string& z1, const std::string& z2, int i, const GadgetConfig& c) {
        return logical_overlap(parse_bits(z1), parse_bits(z2), i, c);
    });
    m.def("effective_gadget", [](const GadgetConfig& c) { return effective_operator(build_gadget(c), build_encoding(c)); },
          "Dressed logical-subspace projection of the gadget Hamiltonian.");
    m.def("effective_logical_xx", [](const GadgetConfig& c, int i) {
        return effective_operator(build_logical_xx(c, i), build_encoding(c));
    });
    m.def(
        "metrics",
        [](const GadgetConfig& c, const std::vector<double>& times, double drive) {
            EncodingBundle bundle = build_encoding(c);
            OperatorSum h = build_gadget(c);
            for (int i = 0; i < c.n_data; ++i) h += single_qubit(Pauli::X, bundle.reg.data(i), drive);
            MetricEvaluator eval(h.canonical(), bundle);
            py::dict out;
            std::vector<double> p, leak, fc, fa;
            for (const MetricPoint& pt : eval.series(times).points) {
                p.push_back(pt.p_surv);
                leak.push_back(pt.leakage);
                fc.push_back(pt.f_cond);
                fa.push_back(pt.f_abs);
            }
            out["t"] = times;
            out["p_surv"] = p;
            out["leakage"] = leak;
            out["f_cond"] = fc;
            out["f_abs"] = fa;
            return out;
        },
        py::arg("config"), py::arg("times"), py::arg("drive") = 1.0,
        "Survival, leakage and fidelities under X driving of every data qubit.");

    m.def(
        "run_experiment",
        [](const std::string& spec_json, py::object out_dir) {
            ExperimentSpec spec = parse_spec(spec_json);
            ExperimentResult r;
            {
                py::gil_scoped_release release;
                r = run_experiment(spec);
            }
            py::dict d = result_dict(r);
            if (!out_dir.is_none()) {
                py::list files;
                for (const WrittenFile& f : write_result(r, out_dir.cast<std::filesystem::path>())) {
                    files.append(py::make_tuple(f.name, f.sha256, f.rows));
                }
                d["files"] = files;
            }
            return d;
        },
        py::arg("spec_json"), py::arg("out_dir") = py::none(),
        "Runs a JSON experiment spec; writes CSV and manifest files when out_dir is given.");
    m.def("default_spec", [](const std::string& kind) {
        return spec_to_json(ExperimentSpec::defaults(parse_experiment_kind(kind))).dump();
    });
    m.def("sha256_hex", &sha256_hex);
    m.attr("__version__") = library_version();
}
