"""Default size caps for the exponential routines.

``GRAPHDIV_CAP_<NAME>`` environment variables override the defaults
(e.g. ``GRAPHDIV_CAP_PERFECT=24``); explicit arguments override both.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Caps:
    perfect: int = 20
    even_hole: int = 18
    perfect_div: int = 10
    k_div: int = 8
    chromatic: int = 40
    ramsey: int = 40


def load_caps() -> Caps:
    values = {}
    for f in fields(Caps):
        raw = os.environ.get(f"GRAPHDIV_CAP_{f.name.upper()}")
        if raw is not None:
            value = int(raw)
            if value <= 0:
                raise ValueError(f"cap {f.name} must be positive")
            values[f.name] = value
    return Caps(**values)


def cap(name: str, override: int | None = None) -> int:
    if override is not None:
        if override <= 0:
            raise ValueError("caps must be positive")
        return override
    return getattr(load_caps(), name)
