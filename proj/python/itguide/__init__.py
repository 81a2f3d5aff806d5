"""Impact-time guidance simulator with FOV and input-saturation constraints."""

from ._itguide import (
    ParseError,
    ValidationError,
    config_keys,
    desired_lead,
    preset,
    preset_names,
    run,
    saturation_rate,
    sgmf,
    trajectory_columns,
    validate,
)

__all__ = [
    "ParseError",
    "ValidationError",
    "config_keys",
    "desired_lead",
    "preset",
    "preset_names",
    "run",
    "saturation_rate",
    "sgmf",
    "trajectory_columns",
    "validate",
]
