"""Fault injection for negative controls. Not part of the public API.

A named hook point returns its value unchanged unless that name is active,
in which case one coefficient is bumped by one. Names are activated either
in-process with ``perturb(...)`` or for a subprocess through the
``QUOTSTAB_PERTURB`` environment variable (comma separated).
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from contextvars import ContextVar

ENV_VAR = "QUOTSTAB_PERTURB"

_active: ContextVar[frozenset[str]] = ContextVar("quotstab_perturb", default=frozenset())


def active() -> frozenset[str]:
    env = os.environ.get(ENV_VAR, "")
    return _active.get() | {x.strip() for x in env.split(",") if x.strip()}


@contextmanager
def perturb(*names: str):
    token = _active.set(_active.get() | set(names))
    try:
        yield
    finally:
        _active.reset(token)


def point(name: str, value):
    if name not in active():
        return value
    # local import: exactring must not depend on this module
    from .exactring import LPolynomial, MultiTruncatedSeries, TruncatedLSeries

    if isinstance(value, int):
        return value + 1
    if isinstance(value, (LPolynomial, TruncatedLSeries)):
        return value + 1
    if isinstance(value, MultiTruncatedSeries):
        one = MultiTruncatedSeries.one(value.num_vars, value.bound, value.order)
        return value + one
    raise TypeError(f"cannot perturb {type(value).__name__}")
