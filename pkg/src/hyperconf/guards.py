"""Size guards for the exponential oracles.

``HYPERCONF_GUARD`` raises every guard at once: an integer lifts each bound
to at least that value, ``off``/``none`` disables them.
"""

from __future__ import annotations

import os


class GuardExceeded(ValueError):
    pass


def effective(default: int) -> int | None:
    raw = os.environ.get("HYPERCONF_GUARD", "").strip().lower()
    if not raw:
        return default
    if raw in ("off", "none", "inf", "0"):
        return None
    try:
        return max(default, int(raw))
    except ValueError:
        return default


def check(what: str, value: int, default: int, force: bool = False) -> None:
    if force:
        return
    bound = effective(default)
    if bound is not None and value > bound:
        raise GuardExceeded(
            f"{what} = {value} exceeds the guard {bound} "
            "(use --force or raise HYPERCONF_GUARD)"
        )
