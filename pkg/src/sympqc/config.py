"""Enumeration budget defaults.

``QCS_BUDGET`` in the environment overrides the default exhaustive
enumeration budget everywhere a budget is not passed explicitly.
"""

from __future__ import annotations

import os

DEFAULT_BUDGET = 1 << 28
DEFAULT_COMPONENT_WORK = 1 << 22


def default_budget() -> int:
    raw = os.environ.get("QCS_BUDGET", "").strip()
    if not raw:
        return DEFAULT_BUDGET
    try:
        value = int(raw, 0)
    except ValueError as exc:
        raise ValueError(f"QCS_BUDGET={raw!r} is not an integer") from exc
    if value < 1:
        raise ValueError("QCS_BUDGET must be positive")
    return value
