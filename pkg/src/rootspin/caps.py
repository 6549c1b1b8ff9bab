"""Closure-size guards.

Every fixpoint loop in the package carries an element cap so that an input
generating an infinite reflection group fails loudly instead of spinning.
The ROOTSPIN_CAP environment variable overrides the defaults; an explicit
cap argument overrides both.
"""

from __future__ import annotations

import os

ROOT_CLOSURE_CAP = 10_000
GROUP_CLOSURE_CAP = 100_000

ENV_VAR = "ROOTSPIN_CAP"


def resolve_cap(explicit: int | None, default: int) -> int:
    if explicit is not None:
        return int(explicit)
    env = os.environ.get(ENV_VAR)
    if env is not None:
        return int(env)
    return default
