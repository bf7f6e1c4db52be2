"""Kernel backend selection.

The compiled ``_core`` extension is used when it imports; otherwise the
pure-Python ``_pycore``.  Setting ``NESTGRAPHS_PURE_PYTHON=1`` forces the
fallback.
"""

import os
from types import ModuleType

from . import _pycore


def _load_compiled():
    try:
        from . import _core
    except ImportError:
        return None
    return _core


def get_backend(name: str = "auto") -> ModuleType:
    """Return a kernel module: ``"compiled"``, ``"python"`` or ``"auto"``."""
    if name == "python":
        return _pycore
    compiled = _load_compiled()
    if name == "compiled":
        if compiled is None:
            raise ImportError("compiled kernels are not built; run `pip install -e .`")
        return compiled
    if name != "auto":
        raise ValueError(f"unknown backend {name!r}")
    return compiled if compiled is not None else _pycore


if os.environ.get("NESTGRAPHS_PURE_PYTHON", "") not in ("", "0"):
    impl = _pycore
else:
    impl = get_backend("auto")

BACKEND = impl.BACKEND
Refiner = impl.Refiner
sweep = impl.sweep
walk_counts = impl.walk_counts
uniform_walk_counts = impl.uniform_walk_counts
is_canonical_offsets = impl.is_canonical_offsets
count_canonical = impl.count_canonical
