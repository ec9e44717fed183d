"""Runtime knobs: exhaustive-search guards, invariant checking, pruning switches."""
import contextlib
import contextvars
import os

ORACLE_GUARD_ENV = "DCUT_ORACLE_GUARD"
DEFAULT_ORACLE_GUARD = 26
DEFAULT_SAT_GUARD = 24

PRUNING_RULES = ("propagation", "budget", "saturation")

_disabled = contextvars.ContextVar("dcut_disabled_pruning", default=frozenset())
_check_invariants = contextvars.ContextVar(
    "dcut_check_invariants", default=os.environ.get("DCUT_CHECK_INVARIANTS", "1") != "0"
)


def oracle_guard():
    value = os.environ.get(ORACLE_GUARD_ENV)
    return int(value) if value else DEFAULT_ORACLE_GUARD


def pruning_enabled(rule):
    return rule not in _disabled.get()


@contextlib.contextmanager
def pruning_disabled(*rules):
    """Switch off pruning rules inside the block.

    Decisions must not change; only the amount of search does.
    """
    unknown = set(rules) - set(PRUNING_RULES)
    if unknown:
        raise ValueError(f"unknown pruning rules: {sorted(unknown)}")
    token = _disabled.set(_disabled.get() | frozenset(rules))
    try:
        yield
    finally:
        _disabled.reset(token)


def invariants_checked():
    return _check_invariants.get()


@contextlib.contextmanager
def check_invariants(enabled=True):
    token = _check_invariants.set(enabled)
    try:
        yield
    finally:
        _check_invariants.reset(token)
