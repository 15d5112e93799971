"""Kernel selection: the compiled CSP core when built, the pure-Python one otherwise.

Set ``SELFSIM_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("SELFSIM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        _impl = _pykernels

solve_first = _impl.solve_first
all_solutions = _impl.all_solutions
arc_consistent = _impl.arc_consistent
