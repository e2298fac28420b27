"""Shared handling of the enumeration size guards.

Exhaustive enumerations (codebook bucketing, ball sizes, the BFS distance
oracle) refuse beyond a small default length.  The PERMCODE_ENUM_CAP
environment variable raises the guards globally; it exists for tests and
should not be relied on otherwise.
"""

import os

ENUM_CAP_ENV = "PERMCODE_ENUM_CAP"


def resolve_enum_cap(explicit, default: int) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(ENUM_CAP_ENV)
    return int(env) if env else default
