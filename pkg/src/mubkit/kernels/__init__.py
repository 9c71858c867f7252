"""Kernel dispatch: compiled Cython backend when built, numpy otherwise.

Set MUBKIT_KERNEL=numpy (or =cython) to force a backend; the default
prefers the compiled extension and silently falls back.
"""

import importlib
import os

from . import _numpy_backend

_FORCED = os.environ.get("MUBKIT_KERNEL", "").strip().lower()

_compiled = None
if _FORCED != "numpy":
    try:
        _compiled = importlib.import_module("._cython_backend", __name__)
    except ImportError:
        if _FORCED == "cython":
            raise

if _compiled is not None:
    BACKEND = "cython"
    pair_difference_counts = _compiled.pair_difference_counts
else:
    BACKEND = "numpy"
    pair_difference_counts = _numpy_backend.pair_difference_counts


def available_backends():
    """Mapping of backend name to its pair_difference_counts callable."""
    out = {"numpy": _numpy_backend.pair_difference_counts}
    if _compiled is not None:
        out["cython"] = _compiled.pair_difference_counts
    return out
