"""Recovery of missing blocks in discrete-time sequences."""

import json

from ._core import (
    CsvError,
    DimensionTooLarge,
    EmptyInput,
    Error,
    InvalidArgument,
    InvalidGap,
    MissingGroundTruth,
    NonFiniteValue,
    ScenarioMismatch,
    Sequence,
    SingularSystem,
    add_noise,
    bl_recovery_map,
    deg_recovery_map,
    generate_bl,
    make_degenerate,
    op_norm,
    parse_angle,
    preset_config,
    recover_bl,
    recover_bl_single,
    recover_deg,
    recover_deg_single,
    synth_bandlimited,
    synth_ell1,
    z_derivatives,
)
from ._core import run_experiment as _run_experiment


def run_experiment(config):
    """Run an experiment; `config` is a dict or a JSON string. Returns the summary dict."""
    text = config if isinstance(config, str) else json.dumps(config)
    return json.loads(_run_experiment(text))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
