"""Search bounds, overridable through the INERTIA_LAB_BOUNDS environment variable."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Bounds:
    closure_bound: int = 200_000
    index_bound: int = 10_000
    ell_bound: int = 500
    disc_bound: int = 10_000
    count_prime_bound: int = 1_000_000


_ENV_VAR = "INERTIA_LAB_BOUNDS"


def default_bounds() -> Bounds:
    """Defaults merged with any JSON overrides found in the environment."""
    bounds = Bounds()
    raw = os.environ.get(_ENV_VAR)
    if not raw:
        return bounds
    try:
        overrides = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{_ENV_VAR} is not valid JSON: {exc}") from exc
    if not isinstance(overrides, dict):
        raise ValueError(f"{_ENV_VAR} must hold a JSON object")
    known = {name for name in Bounds.__dataclass_fields__}
    unknown = set(overrides) - known
    if unknown:
        raise ValueError(f"{_ENV_VAR} has unknown keys: {sorted(unknown)}")
    return replace(bounds, **{k: int(v) for k, v in overrides.items()})
