"""Backend dispatch for the partition-function kernel.

The compiled extension is preferred when it importable; the pure-Python
fallback is always available. `NILCHAR_BACKEND=python|compiled` forces a
choice. The compiled kernel counts in int64 and raises OverflowError when a
count would not fit, in which case the dispatcher reruns the request on the
pure backend (which uses arbitrary-precision integers).
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:
    _kernels = None

HAVE_COMPILED = _kernels is not None


def active_backend() -> str:
    forced = os.environ.get("NILCHAR_BACKEND")
    if forced:
        if forced not in ("python", "compiled"):
            raise ValueError(f"NILCHAR_BACKEND must be 'python' or 'compiled', got {forced!r}")
        if forced == "compiled" and not HAVE_COMPILED:
            raise RuntimeError("NILCHAR_BACKEND=compiled but the extension is not built")
        return forced
    return "compiled" if HAVE_COMPILED else "python"


def partition_table(roots, bounds, backend: str | None = None):
    """Dispatch to the selected kernel; see `_kernels_py.partition_table`."""
    chosen = backend or active_backend()
    if chosen == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled backend requested but not available")
        try:
            return _kernels.partition_table(list(map(tuple, roots)), tuple(bounds))
        except OverflowError:
            return _kernels_py.partition_table(roots, bounds)
    return _kernels_py.partition_table(roots, bounds)
