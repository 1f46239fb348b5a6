"""Configurable size guards for element-count bounded work."""

from __future__ import annotations

import os

ENV_VAR = "BINOP_GUARD_MAX"

CLOSURE_MAX = 10**6
SYMMETRIC_ORDER_MAX = 120
FUNCTION_FAMILY_ORDER_MAX = 216
ISOMORPHISM_ORDER_MAX = 60
REPRESENTATION_ORDER_MAX = 12


def limit(default: int) -> int:
    """Return the guard value, replaced by ``$BINOP_GUARD_MAX`` when set."""
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}")
    return value
