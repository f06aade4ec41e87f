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

"""Exact simulation of domain-wall chain gadgets."""

import json

from ._core import (
    CalibrationError,
    ConfigError,
    ContractError,
    GadgetConfig,
    SpecError,
    __version__,
    calibrate_beta,
    default_spec,
    effective_gadget,
    effective_logical_xx,
    gadget_matrix,
    gadget_terms,
    is_satisfiable,
    logical_overlap,
    metrics,
    sector_energies,
    sha256_hex,
    sine_transform,
)
from ._core import run_experiment as _run_experiment


def run_experiment(spec, out_dir=None):
    """Run an experiment spec given as a JSON string or a dict."""
    if not isinstance(spec, str):
        spec = json.dumps(spec)
    return _run_experiment(spec, None if out_dir is None else str(out_dir))


__all__ = [
    "CalibrationError",
    "ConfigError",
    "ContractError",
    "GadgetConfig",
    "SpecError",
    "__version__",
    "calibrate_beta",
    "default_spec",
    "effective_gadget",
    "effective_logical_xx",
    "gadget_matrix",
    "gadget_terms",
    "is_satisfiable",
    "logical_overlap",
    "metrics",
    "run_experiment",
    "sector_energies",
    "sha256_hex",
    "sine_transform",
]
