# Copyright 2026 The gadgetsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import numpy as np
import pytest

import gadgetsim


def test_config_defaults_and_validation():
    c = gadgetsim.GadgetConfig()
    assert (c.n_data, c.n_ancilla, c.driver) == (5, 4, "five-body")
    with pytest.raises(gadgetsim.ConfigError):
        gadgetsim.GadgetConfig(n_data=1)
    with pytest.raises(ValueError):
        gadgetsim.GadgetConfig(driver="four-body")


def test_calibration():
    assert gadgetsim.calibrate_beta(8.0, 1.0, 5) == pytest.approx(7.0 / math.sqrt(3.0), abs=1e-14)
    with pytest.raises(gadgetsim.CalibrationError):
        gadgetsim.calibrate_beta(1.0, 1.0, 5)


def test_gadget_matrix_is_hermitian_and_matches_terms():
    c = gadgetsim.GadgetConfig(n_data=3, gamma=4.0)
    h = gadgetsim.gadget_matrix(c)
    assert h.shape == (32, 32)
    np.testing.assert_allclose(h, h.conj().T, atol=1e-14)
    identity = dict(gadgetsim.gadget_terms(c))["I"]
    assert np.trace(h).real / 32 == pytest.approx(identity.real, abs=1e-12)


def test_effective_parity_hamiltonian():
    for kinked in (False, True):
        c = gadgetsim.GadgetConfig(n_data=3, kinked=kinked)
        z = np.diag([1.0, -1.0])
        parity = np.kron(np.kron(z, z), z)
        sign = 1.0 if kinked else -1.0
        expected = 0.5 * (np.eye(8) + sign * parity)
        np.testing.assert_allclose(gadgetsim.effective_gadget(c), expected, atol=1e-9)


def test_sine_transform_and_overlaps():
    s, lam = gadgetsim.sine_transform(5)
    np.testing.assert_allclose(s @ s.T, np.eye(5), atol=1e-12)
    np.testing.assert_allclose(lam, -2.0 * np.cos(np.pi * np.arange(1, 6) / 6.0), atol=1e-12)
    c = gadgetsim.GadgetConfig()
    values = [gadgetsim.logical_overlap("00000", "00000"[:i] + "1" + "00000"[i + 1 :], i, c) for i in range(5)]
    assert [round(v, 3) for v in values] == [0.289, 0.5, 0.577, 0.5, 0.289]


def test_metrics_identities():
    c = gadgetsim.GadgetConfig(n_data=3, gamma=4.0)
    m = gadgetsim.metrics(c, [0.0, 1.0, 2.0])
    assert m["leakage"][0] == pytest.approx(0.0, abs=1e-12)
    for p, f, fa in zip(m["p_surv"], m["f_cond"], m["f_abs"]):
        assert 0.0 <= p <= 1.0
        assert fa == pytest.approx(p * f, abs=1e-12)


def test_run_experiment_is_deterministic(tmp_path):
    spec = json.loads(gadgetsim.default_spec("minor-embedding"))
    spec.update(config={"n_data": 3}, gamma_grid=[4, 16], eta_grid=[0.2], repetitions=2)
    a = gadgetsim.run_experiment(spec, tmp_path / "a")
    b = gadgetsim.run_experiment(json.dumps(spec), tmp_path / "b")
    assert a["files"] == b["files"]
    assert a["summary"] == b["summary"]
    f = a["tables"]["minor_embedding"]["mean_f"]
    assert f[1] >= f[0]
    manifest = json.loads((tmp_path / "a" / "manifest.json").read_text())
    csv = (tmp_path / "a" / "minor_embedding.csv").read_bytes()
    entry = next(x for x in manifest["files"] if x["name"] == "minor_embedding.csv")
    assert entry["sha256"] == gadgetsim.sha256_hex(csv.decode())


def test_spec_errors_surface_as_value_errors():
    with pytest.raises(gadgetsim.SpecError, match="colour"):
        gadgetsim.run_experiment({"schema": "gadgetsim.experiment/1", "kind": "ghz", "colour": 1})
