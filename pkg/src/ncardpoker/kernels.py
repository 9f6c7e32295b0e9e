"""Kernel backend selection.

The compiled extension (ncardpoker._speedups) is preferred when it imported
cleanly; otherwise the pure-Python kernel takes over with identical results.
Set NCARDPOKER_KERNEL=python or =cython to force a backend (forcing cython
raises if the extension is missing). Benchmarks and equivalence tests can
grab both backends via available_backends().
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernel_py

_requested = os.environ.get("NCARDPOKER_KERNEL", "").strip().lower()
if _requested not in ("", "python", "cython"):
    raise ValueError(
        f"NCARDPOKER_KERNEL must be 'python' or 'cython', got {_requested!r}"
    )

if _requested == "python":
    _active: ModuleType = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _speedups

        _active = _speedups
        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        _active = _kernel_py
        BACKEND = "python"

count_categories = _active.count_categories
sample_hits = _active.sample_hits
CATEGORY_IDS = _kernel_py.CATEGORY_IDS


def available_backends() -> dict[str, ModuleType]:
    """Importable kernel backends by name; 'python' is always present."""
    backends: dict[str, ModuleType] = {"python": _kernel_py}
    try:
        from . import _speedups as compiled
    except ImportError:
        pass
    else:
        backends["cython"] = compiled
    return backends
