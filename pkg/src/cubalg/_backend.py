"""Kernel selection: compiled extension when available, pure Python otherwise.

Set CUBALG_BACKEND=pure (or =compiled) to force a choice; the compiled
kernel also cedes to the pure one for lattices whose cell-code space does
not fit the signed 64-bit pair keys it uses internally.
"""

from __future__ import annotations

import os
from functools import lru_cache

from ._kernel_py import PyKernel

try:
    from . import _speedups  # type: ignore[attr-defined]

    _HAVE_COMPILED = True
except ImportError:
    _speedups = None
    _HAVE_COMPILED = False


def available_backends() -> tuple[str, ...]:
    return ("compiled", "pure") if _HAVE_COMPILED else ("pure",)


def default_backend() -> str:
    forced = os.environ.get("CUBALG_BACKEND")
    if forced in ("pure", "compiled"):
        if forced == "compiled" and not _HAVE_COMPILED:
            raise RuntimeError("CUBALG_BACKEND=compiled but cubalg._speedups is not built")
        return forced
    return "compiled" if _HAVE_COMPILED else "pure"


@lru_cache(maxsize=None)
def kernel_for(periods: tuple[int, ...], backend: str | None = None):
    name = backend or default_backend()
    if name == "compiled":
        if not _HAVE_COMPILED:
            raise RuntimeError("compiled backend requested but not built")
        try:
            return _speedups.CKernel(periods)
        except OverflowError:
            if backend == "compiled":
                raise
            return PyKernel(periods)
    if name == "pure":
        return PyKernel(periods)
    raise ValueError(f"unknown backend {name!r}")


def backend_name() -> str:
    return default_backend()
