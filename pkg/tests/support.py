"""Helpers shared by the test modules."""

from __future__ import annotations

import functools
import time
from contextlib import contextmanager

import pytest

from deletion_order.coxeter import build_system

criteria: list[tuple[str, bool, float, str]] = []


@functools.lru_cache(maxsize=None)
def system(name: str):
    """Shared, memoised systems; they are immutable apart from internal caches."""
    return build_system(name)


@contextmanager
def criterion(label: str, budget: float | None = None):
    """Record a pass/fail line for the acceptance summary.

    A criterion fails if its body raises or runs past ``budget`` seconds.
    The body may append strings to the yielded list to annotate its line.
    """
    start = time.perf_counter()
    info: list[str] = []
    note = ""
    ok = False
    try:
        yield info
        ok = True
        note = "; ".join(info)
    except BaseException as exc:
        note = f"{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        raise
    finally:
        elapsed = time.perf_counter() - start
        if ok and budget is not None and elapsed > budget:
            ok = False
            note = f"took {elapsed:.1f}s, budget {budget}s"
        criteria.append((label, ok, elapsed, note))
    if not ok:
        pytest.fail(note)
