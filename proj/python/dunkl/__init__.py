"""Dunkl transform, spherical partial sums and weighted Lorentz norms."""

import json

from ._core import (
    ConfigError,
    DomainError,
    ap_power_weight_check,
    battery_ids,
    bessel_j,
    dunkl_kernel,
    dunkl_transform,
    dunkl_via_hankel,
    endpoint_exponents,
    frequency_grid,
    gamma,
    hankel_transform,
    lorentz_norm,
    lp_norm,
    maximal_operator,
    normalized_bessel,
    partial_sums,
)
from . import _core


def run_experiment(command, config=None):
    """Run a CLI experiment in-process.

    Returns (exit_code, report_dict, files) where files maps output names to text.
    """
    code, files = _core._run_experiment_json(command, json.dumps(config or {}))
    return code, json.loads(files["report.json"]), files


__all__ = [
    "ConfigError",
    "DomainError",
    "ap_power_weight_check",
    "battery_ids",
    "bessel_j",
    "dunkl_kernel",
    "dunkl_transform",
    "dunkl_via_hankel",
    "endpoint_exponents",
    "frequency_grid",
    "gamma",
    "hankel_transform",
    "lorentz_norm",
    "lp_norm",
    "maximal_operator",
    "normalized_bessel",
    "partial_sums",
    "run_experiment",
]
